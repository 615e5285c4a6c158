#pragma once

#include "dnalg/diagram.hpp"
#include "dnalg/jones.hpp"
#include "dnalg/knot_table.hpp"
#include "dnalg/random_words.hpp"
#include "dnalg/word.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace dnalg {

/// A site-specific recombination system: substrate braid word, the single
/// generator the enzyme adds per round, and optional sequence marks for
/// the two bottom closure arcs.
struct RecombinationSystem {
  std::string name;
  GenWord substrate;
  Generator prefix;
  bool marked = false; // labels L and U on bottom arcs 0 and 1

  RecombinationSystem(std::string nm, GenWord sub, Generator pre, bool marks = false)
      : name(std::move(nm)), substrate(std::move(sub)), prefix(pre), marked(marks) {
    if (substrate.strand_count() % 2 != 0)
      throw WordError("recombination substrate must be plat-closable (even strands)");
    if (!prefix.is_crossing() && prefix.kind != Generator::Kind::E)
      throw WordError("prefix must be a sigma or e generator");
    if (prefix.index < 1 || prefix.index > substrate.strand_count() - 1)
      throw WordError("prefix index out of range for substrate");
  }

  PlatMarks plat_marks() const {
    PlatMarks m;
    if (marked) {
      m.bottom[0] = "L";
      m.bottom[1] = "U";
    }
    return m;
  }
};

struct ProductReport {
  int round = 0;
  GenWord word = GenWord::empty(2);
  int components = 0;
  Identification id;
  std::string marked_status = "not-marked"; // or "inverted" / "restored"
};

/// Relative orientation of the L and U marks on a shared component, or
/// "not-marked" when absent or on separate components.  Both marks point
/// left to right on their closure arcs; a circle embedded without
/// inversion traverses the two bottom arcs in opposite left-right senses,
/// so opposite readout signs mean "restored" and equal signs "inverted".
inline std::string marked_status(const PlanarDiagram &d) {
  auto seqs = read_marked_sequence(d);
  for (const auto &seq : seqs) {
    int sl = 0, su = 0;
    for (const auto &[label, sign] : seq) {
      if (label == "L") sl = sign;
      if (label == "U") su = sign;
    }
    if (sl != 0 && su != 0) return sl * su > 0 ? "inverted" : "restored";
  }
  return "not-marked";
}

/// Round i's word: i copies of the prefix stacked on top of the substrate.
inline GenWord round_word(const RecombinationSystem &sys, int i) {
  std::vector<Generator> ls(i, sys.prefix);
  return GenWord(sys.substrate.strand_count(), std::move(ls)).compose(sys.substrate);
}

/// Classify plat(prefix^i . substrate) for i = 1..rounds.
inline std::vector<ProductReport> processive_series(const RecombinationSystem &sys, int rounds) {
  std::vector<ProductReport> out;
  PlatMarks marks = sys.plat_marks();
  for (int i = 1; i <= rounds; ++i) {
    GenWord w = round_word(sys, i);
    PlanarDiagram d = plat_closure(w, &marks);
    ProductReport r;
    r.round = i;
    r.word = w;
    r.components = d.component_count();
    r.id = identify(w, Closure::Plat);
    r.marked_status = sys.marked ? marked_status(d) : "not-marked";
    out.push_back(std::move(r));
  }
  return out;
}

/// One row of the parity table for the generic unknotted substrates.
struct ParityRow {
  int k = 0;
  int i = 0;
  bool even_family = true; // substrate sigma_1^{2k} sigma_2^{-1} vs 2k-1
  int components = 0;
  std::string marked_status;
  bool matches_claim = false;
};

/// Generic substrate sigma_1^m sigma_2^{-1} on 4 strands.
inline RecombinationSystem generic_system(int m, bool marks) {
  GenWord sub = sigma_power(4, 1, m).compose(GenWord(4, {Generator::sigma_inv(2)}));
  std::ostringstream nm;
  nm << "generic-" << m;
  return RecombinationSystem(nm.str(), sub, Generator::sigma(2), marks);
}

/// Parity table: the even-crossing family must close to a link exactly for
/// odd i; the odd-crossing family must read inverted exactly for odd i.
inline std::vector<ParityRow> parity_report(int k, int i_max) {
  std::vector<ParityRow> rows;
  for (int even = 1; even >= 0; --even) {
    RecombinationSystem sys = generic_system(even ? 2 * k : 2 * k - 1, /*marks=*/even == 0);
    PlatMarks marks = sys.plat_marks();
    for (int i = 1; i <= i_max; ++i) {
      GenWord w = round_word(sys, i);
      PlanarDiagram d = plat_closure(w, &marks);
      ParityRow r;
      r.k = k;
      r.i = i;
      r.even_family = even == 1;
      r.components = d.component_count();
      r.marked_status = even ? "not-marked" : marked_status(d);
      if (even)
        r.matches_claim = (r.components == 2) == (i % 2 == 1);
      else
        r.matches_claim = (r.marked_status == "inverted") == (i % 2 == 1);
      rows.push_back(r);
    }
  }
  return rows;
}

/// Comparison of plat(e_i . w) with plat(sigma_i sigma_{i+1} . w) and
/// plat(sigma_i^-1 sigma_{i+1}^-1 . w); the three must agree in component
/// count and Jones keys when i is even.
struct EquivalenceVerdict {
  bool agree = true;
  std::string detail;
};

inline EquivalenceVerdict bmw_plat_equivalence(const GenWord &w, int i) {
  if (i % 2 != 0) throw WordError("plat equivalence holds for even i only");
  int n = w.strand_count();
  GenWord we = GenWord(n, {Generator::e(i)}).compose(w);
  GenWord wp = GenWord(n, {Generator::sigma(i), Generator::sigma(i + 1)}).compose(w);
  GenWord wm = GenWord(n, {Generator::sigma_inv(i), Generator::sigma_inv(i + 1)}).compose(w);

  auto probe = [](const GenWord &x) {
    PlanarDiagram d = plat_closure(x);
    return std::make_pair(d.component_count(), jones_key(d, kauffman_bracket(x, Closure::Plat)));
  };
  auto pe = probe(we), pp = probe(wp), pm = probe(wm);
  EquivalenceVerdict v;
  std::ostringstream os;
  if (pe != pp) {
    v.agree = false;
    os << "e" << i << " form disagrees with s" << i << " s" << i + 1 << " form; ";
  }
  if (pe != pm) {
    v.agree = false;
    os << "e" << i << " form disagrees with s" << i << "^-1 s" << i + 1 << "^-1 form; ";
  }
  v.detail = v.agree ? "all three closures agree" : os.str();
  return v;
}

/// Randomized trials of the equivalence; returns the number of
/// disagreements.
inline int bmw_plat_equivalence_trials(int trials, std::uint32_t seed) {
  WordSampler sampler(seed);
  int bad = 0;
  for (int t = 0; t < trials; ++t) {
    GenWord w = sampler.word(6, 3 + static_cast<int>(sampler.next(5)), /*allow_e=*/true);
    int i = sampler.next(2) == 0 ? 2 : 4;
    if (!bmw_plat_equivalence(w, i).agree) ++bad;
  }
  return bad;
}

/// The XerCD substrate of the six-strand example, before free reduction.
inline GenWord xer_substrate() {
  return GenWord::parse("s2 s2 s2 s2^-1 s4^-1 s4 s3 s2 s4^-1", 6);
}

/// Bundled systems from the worked examples.
inline std::vector<RecombinationSystem> case_library() {
  std::vector<RecombinationSystem> lib;
  lib.emplace_back("tn3", GenWord::parse("s1 s3 s2^-1", 4), Generator::sigma(2));
  lib.emplace_back("tn3-alt", GenWord::parse("s1 s1 s2^-1", 4), Generator::sigma(2));
  lib.emplace_back("gin", GenWord::parse("s1 s2^-1", 4), Generator::sigma(2), /*marks=*/true);
  lib.push_back(generic_system(4, false));
  lib.push_back(generic_system(3, true));
  lib.emplace_back("xer", xer_substrate(), Generator::e(4));
  // Reconstructed inverted-repeat substrate: unknotted, one sigma_2 action
  // yields a trefoil.  Frozen from the exhaustive search over 4-letter
  // 4-plat words (see find_unknot_to_trefoil_substrates).
  lib.emplace_back("cre", GenWord::parse("s1 s1 s1 s2^-1", 4), Generator::sigma(2),
                   /*marks=*/true);
  return lib;
}

inline RecombinationSystem find_system(const std::string &name) {
  for (auto &s : case_library())
    if (s.name == name) return s;
  throw WordError("unknown recombination system '" + name + "'");
}

/// Desk search: all words of the given length over sigma_{1..3}^{+-1}
/// whose plat closure is an unknot while one added sigma_2 turns it into a
/// trefoil (either chirality).  Deterministic enumeration order.
inline std::vector<GenWord> find_unknot_to_trefoil_substrates(int length) {
  std::vector<GenWord> hits;
  std::vector<int> digits(length, 0); // each 0..5: s1 s1^-1 s2 s2^-1 s3 s3^-1
  while (true) {
    std::vector<Generator> ls;
    for (int d : digits) {
      int idx = d / 2 + 1;
      ls.push_back(d % 2 == 0 ? Generator::sigma(idx) : Generator::sigma_inv(idx));
    }
    GenWord w(4, std::move(ls));
    if (identify(w, Closure::Plat).str() == "unknot") {
      GenWord w1 = GenWord(4, {Generator::sigma(2)}).compose(w);
      if (identify(w1, Closure::Plat).name == "trefoil") hits.push_back(w);
    }
    int i = 0;
    while (i < length && digits[i] == 5) digits[i++] = 0;
    if (i == length) break;
    ++digits[i];
  }
  return hits;
}

} // namespace dnalg
