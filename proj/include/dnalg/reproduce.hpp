#pragma once

#include "dnalg/coxeter.hpp"
#include "dnalg/genome.hpp"
#include "dnalg/jones.hpp"
#include "dnalg/knot_table.hpp"
#include "dnalg/random_words.hpp"
#include "dnalg/recombination.hpp"
#include "dnalg/statesum.hpp"
#include "dnalg/tangle_solve.hpp"
#include "dnalg/tl.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

namespace dnalg {

/// One check of the reproduction suite.
struct CheckResult {
  int id = 0;
  std::string name;
  bool pass = false;
  double seconds = 0.0;
  std::string detail; // populated on failure
};

namespace detail {

struct CheckRunner {
  std::vector<CheckResult> results;

  void run(int id, const std::string &name, const std::function<void(std::ostream &)> &body) {
    CheckResult r;
    r.id = id;
    r.name = name;
    std::ostringstream fail;
    auto t0 = std::chrono::steady_clock::now();
    try {
      body(fail);
      r.detail = fail.str();
      r.pass = r.detail.empty();
    } catch (const std::exception &e) {
      r.pass = false;
      r.detail = std::string("exception: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    results.push_back(std::move(r));
  }
};

inline void expect(std::ostream &fail, bool ok, const std::string &what) {
  if (!ok) fail << what << "; ";
}

} // namespace detail

/// Self-verification of a knot table: unique (components, key) pairs and
/// mirror pairs related by A -> A^-1.  Empty string means verified.
inline std::string verify_table(const std::vector<KnotTableEntry> &table) {
  std::ostringstream os;
  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j)
      if (table[i].components == table[j].components && table[i].key == table[j].key)
        os << "key collision " << table[i].full_name() << " vs " << table[j].full_name() << "; ";
  for (const auto &e : table) {
    if (e.chirality == "self") {
      if (!e.key.is_amphichiral()) os << e.full_name() << " key not mirror-symmetric; ";
      continue;
    }
    bool found = false;
    for (const auto &m : table)
      if (m.full_name() == e.mirror) {
        found = true;
        if (m.key != e.key.mirrored()) os << e.full_name() << " mirror key mismatch; ";
      }
    if (!found) os << e.full_name() << " mirror entry missing; ";
  }
  std::string s = os.str();
  if (s.size() >= 2) s.resize(s.size() - 2); // drop the trailing separator
  return s;
}

/// The full reproduction suite.  `corrupt_table` injects a key collision
/// into the copy used by the table-verification check, which must then fail
/// while every other check is unaffected.
inline std::vector<CheckResult> run_reproduction(bool corrupt_table = false) {
  using detail::expect;
  detail::CheckRunner cr;

  cr.run(1, "tn3-product-series", [](std::ostream &fail) {
    auto s = processive_series(find_system("tn3"), 4);
    expect(fail, s[0].id.str() == "hopf link", "round 1 is " + s[0].id.str());
    expect(fail, s[1].id.name == "figure-8 knot", "round 2 is " + s[1].id.str());
    expect(fail, s[2].id.name == "whitehead link", "round 3 is " + s[2].id.str());
    expect(fail, s[3].id.found && s[3].id.crossings == 6, "round 4 is " + s[3].id.str());
  });

  cr.run(2, "gin-product-series", [](std::ostream &fail) {
    RecombinationSystem gin = find_system("gin");
    expect(fail, identify(gin.substrate, Closure::Plat).str() == "unknot", "substrate not unknot");
    // fractions 1/2 + i force the twist knot ladder
    auto s = processive_series(gin, 4);
    expect(fail, s[0].id.str() == "unknot", "round 1 is " + s[0].id.str());
    expect(fail, s[1].id.name == "trefoil", "round 2 is " + s[1].id.str());
    expect(fail, s[2].id.name == "figure-8 knot", "round 3 is " + s[2].id.str());
    expect(fail, s[3].id.name == "5_2", "round 4 is " + s[3].id.str());
  });

  cr.run(3, "parity-claims", [](std::ostream &fail) {
    for (int k = 1; k <= 3; ++k)
      for (const auto &r : parity_report(k, 6))
        if (!r.matches_claim)
          fail << "k=" << r.k << " i=" << r.i << (r.even_family ? " even" : " odd")
               << " family violates the parity claim; ";
  });

  cr.run(4, "substrate-form-independence", [](std::ostream &fail) {
    auto a = processive_series(find_system("tn3"), 4);
    auto b = processive_series(find_system("tn3-alt"), 4);
    for (int i = 0; i < 4; ++i)
      expect(fail, a[i].id.str() == b[i].id.str(),
             "round " + std::to_string(i + 1) + " differs");
  });

  cr.run(5, "xer-reduction-and-product-forms", [](std::ostream &fail) {
    GenWord sub = xer_substrate();
    expect(fail, sub.free_reduce().str() == "s2 s2 s3 s2 s4^-1",
           "free reduction gave " + sub.free_reduce().str());
    GenWord e_form = GenWord(6, {Generator::e(4)}).compose(sub);
    GenWord b_form = GenWord::parse("s4^-1 s5^-1", 6).compose(sub);
    PlanarDiagram de = plat_closure(e_form), db = plat_closure(b_form);
    expect(fail, de.component_count() == db.component_count(), "component counts differ");
    expect(fail,
           jones_key(de, kauffman_bracket(e_form, Closure::Plat)) ==
               jones_key(db, kauffman_bracket(b_form, Closure::Plat)),
           "jones keys differ");
  });

  cr.run(6, "turnback-plat-equivalence", [](std::ostream &fail) {
    int bad = bmw_plat_equivalence_trials(200, 20240601u);
    expect(fail, bad == 0, std::to_string(bad) + " of 200 trials disagree");
  });

  cr.run(7, "bracket-oracle-equivalence", [](std::ostream &fail) {
    WordSampler s(701);
    for (int t = 0; t < 500; ++t) {
      int n = 2 + 2 * static_cast<int>(s.next(3));
      GenWord w = s.word(n, 1 + static_cast<int>(s.next(10)), true);
      if (kauffman_bracket(w, Closure::Plat) != bracket_statesum(plat_closure(w)) ||
          kauffman_bracket(w, Closure::Trace) != bracket_statesum(trace_closure(w))) {
        fail << "disagreement at trial " << t << " word '" << w.str() << "'; ";
        return;
      }
    }
  });

  cr.run(8, "skein-relation", [](std::ostream &fail) {
    for (int n = 2; n <= 6; ++n)
      for (int i = 1; i < n; ++i) {
        TLElement lhs = word_to_tl(GenWord(n, {Generator::sigma(i)})) +
                        word_to_tl(GenWord(n, {Generator::sigma_inv(i)}));
        TLElement rhs = (TLElement::one(n) + TLElement::generator(n, i))
                            .scaled(LaurentPoly::monomial(1, 1) + LaurentPoly::monomial(1, -1));
        if (lhs != rhs) fail << "skein fails at n=" << n << " i=" << i << "; ";
      }
    // e_i^2 closure brackets scale by exactly delta
    for (int i = 1; i < 4; ++i) {
      GenWord one(4, {Generator::e(i)});
      GenWord two(4, {Generator::e(i), Generator::e(i)});
      if (kauffman_bracket(two, Closure::Plat) !=
          kauffman_bracket(one, Closure::Plat) * LaurentPoly::delta())
        fail << "e" << i << "^2 closure does not scale by delta; ";
    }
  });

  cr.run(9, "typeB-length-formula", [](std::ostream &fail) {
    for (int n : {3, 4}) {
      auto oracle = typeB_length_bfs(n);
      expect(fail, oracle.size() == (n == 3 ? 48u : 384u),
             "group order wrong at n=" + std::to_string(n));
      for (const auto &[w, d] : oracle)
        if (typeB_length(w) != d) {
          fail << "length mismatch at n=" << n << "; ";
          break;
        }
    }
  });

  cr.run(10, "affine-length-and-swap-distance", [](std::ostream &fail) {
    for (int n : {3, 4})
      for (const auto &[w, d] : affine_length_bfs(n, 8))
        if (affine_length(w) != d) {
          fail << "affine length mismatch at n=" << n << "; ";
          break;
        }
    std::mt19937 rng(1001);
    CircularGenome a = CircularGenome::identity(6, false);
    for (int t = 0; t < 100; ++t) {
      std::vector<int> v{1, 2, 3, 4, 5, 6};
      std::shuffle(v.begin(), v.end(), rng);
      CircularGenome b(v, false);
      auto bfs = circular_swap_distance_bfs(a, b);
      if (!bfs || circular_swap_distance_fast(a, b) != *bfs) {
        fail << "swap distance mismatch at trial " << t << "; ";
        return;
      }
    }
  });

  cr.run(11, "circular-inversion-examples", [](std::ostream &fail) {
    CircularGenome g({1, 2, 3, 4, 5, 6});
    expect(fail, inversion(g, 1, 3).labels() == std::vector<int>{1, -4, -3, -2, 5, 6},
           "inversion of regions 2..4 wrong");
    CircularGenome a({1, 2, 3, 4}), b({2, 3, 4, 1}), c({4, 3, 2, 1}, false);
    expect(fail, dihedral_canonical(a).labels() == dihedral_canonical(b).labels(),
           "rotation not identified");
    CircularGenome au({1, 2, 3, 4}, false);
    expect(fail, dihedral_canonical(au).labels() == dihedral_canonical(c).labels(),
           "unsigned reflection not identified");
    for (int n : {4, 5}) {
      std::vector<int> v(n);
      for (int i = 0; i < n; ++i) v[i] = i + 1;
      std::set<std::vector<int>> classes;
      do {
        classes.insert(dihedral_canonical(CircularGenome(v, false)).labels());
      } while (std::next_permutation(v.begin(), v.end()));
      int fact = 1;
      for (int i = 2; i < n; ++i) fact *= i;
      expect(fail, static_cast<int>(classes.size()) == fact / 2,
             "class count wrong at n=" + std::to_string(n));
    }
  });

  cr.run(12, "breakpoint-cycle-bound", [](std::ostream &fail) {
    std::mt19937 rng(1201);
    for (int t = 0; t < 200; ++t) {
      int n = 4 + static_cast<int>(rng() % 5); // 4..8
      std::vector<int> v(n);
      for (int i = 0; i < n; ++i) v[i] = i + 1;
      std::shuffle(v.begin(), v.end(), rng);
      for (auto &x : v)
        if (rng() % 2) x = -x;
      SignedPermutation a(v);
      auto w = v;
      int steps = static_cast<int>(rng() % 4);
      for (int s = 0; s < steps; ++s) {
        int i = static_cast<int>(rng() % n), j = static_cast<int>(rng() % n);
        if (i > j) std::swap(i, j);
        std::reverse(w.begin() + i, w.begin() + j + 1);
        for (int k = i; k <= j; ++k) w[k] = -w[k];
      }
      SignedPermutation b(w);
      int bound = breakpoint_cycle_bound(a, b);
      int dist = linear_inversion_distance_bfs(a, b);
      if (bound > dist) {
        fail << "bound exceeds distance at trial " << t << "; ";
        return;
      }
      if (dist <= 1 && bound != dist) {
        fail << "bound not tight at distance " << dist << " (trial " << t << "); ";
        return;
      }
    }
  });

  cr.run(13, "tangle-solver-uniqueness", [](std::ostream &fail) {
    auto braid = processive_series(find_system("tn3"), 4);
    std::vector<std::string> observed;
    for (const auto &r : braid) observed.push_back(r.id.str());
    auto cands = solve_processive(observed, 1, 3, 5);
    expect(fail, cands.size() == 1,
           std::to_string(cands.size()) + " candidate tangles, expected exactly 1");
    if (cands.size() == 1) {
      auto tangles = processive_products(cands[0].tangle, 1, 4);
      for (int i = 0; i < 4; ++i)
        expect(fail, tangles[i].id.str() == braid[i].id.str(),
               "braid and tangle routes differ at round " + std::to_string(i + 1));
    }
  });

  cr.run(14, "knot-table-verification", [corrupt_table](std::ostream &fail) {
    auto table = knot_table();
    if (corrupt_table) {
      // inject a key collision between two same-component entries
      for (std::size_t i = 0; i + 1 < table.size(); ++i)
        if (table[i].components == table[i + 1].components && table[i].key != table[i + 1].key) {
          table[i + 1].key = table[i].key;
          break;
        }
    }
    std::string err = verify_table(table);
    expect(fail, err.empty(), err);
    for (const char *name :
         {"unknot", "hopf link", "trefoil", "figure-8 knot", "whitehead link"}) {
      bool found = false;
      for (const auto &e : table)
        if (e.name == name) found = true;
      expect(fail, found, std::string(name) + " missing from the table");
    }
  });

  return cr.results;
}

/// Text report; returns the number of failed checks.
inline int print_reproduction(std::ostream &os, const std::vector<CheckResult> &results) {
  int failed = 0;
  for (const auto &r : results) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%6.2f s", r.seconds);
    os << (r.pass ? "[PASS] " : "[FAIL] ") << (r.id < 10 ? " " : "") << r.id << " " << r.name
       << " (" << buf << ")";
    if (!r.pass) {
      os << "  " << r.detail;
      ++failed;
    }
    os << "\n";
  }
  return failed;
}

} // namespace dnalg
