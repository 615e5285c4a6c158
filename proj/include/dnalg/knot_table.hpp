#pragma once

#include "dnalg/diagram.hpp"
#include "dnalg/jones.hpp"
#include "dnalg/laurent.hpp"
#include "dnalg/statesum.hpp"
#include "dnalg/tangle.hpp"
#include "dnalg/tl.hpp"

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

namespace dnalg {

/// Twist vector with Conway fraction p/q, via the positive continued
/// fraction of p/q (entries reversed to match the tangle convention).
inline std::vector<std::int64_t> twist_vector(std::int64_t p, std::int64_t q) {
  if (q <= 0) throw TangleError("twist_vector needs q > 0");
  bool neg = p < 0;
  if (neg) p = -p;
  std::vector<std::int64_t> cf; // p/q = cf[0] + 1/(cf[1] + ...)
  while (q != 0) {
    cf.push_back(p / q);
    std::int64_t r = p % q;
    p = q;
    q = r;
  }
  std::vector<std::int64_t> v(cf.rbegin(), cf.rend());
  if (neg)
    for (auto &x : v) x = -x;
  return v;
}

struct KnotTableEntry {
  std::string name;        // e.g. "trefoil"
  std::string chirality;   // "right", "left", or "self"
  std::string mirror;      // full name of the mirror entry
  int crossings = 0;
  int components = 1;
  JonesKey key;

  std::string full_name() const {
    return chirality == "self" ? name : name + " (" + chirality + ")";
  }
};

namespace detail {

struct TwoBridgeSpec {
  const char *name;
  int crossings;
  std::int64_t p, q;
};

// Reference 2-bridge fractions; q within the class is a drawing choice.
inline const std::vector<TwoBridgeSpec> &two_bridge_specs() {
  static const std::vector<TwoBridgeSpec> specs = {
      {"hopf link", 2, 2, 1},
      {"trefoil", 3, 3, 1},
      {"solomon link", 4, 4, 1},
      {"figure-8 knot", 4, 5, 2},
      {"5_1", 5, 5, 1},
      {"5_2", 5, 7, 3},
      {"whitehead link", 5, 8, 3},
      {"(2,6) torus link", 6, 6, 1},
      {"6_1", 6, 9, 4},
      {"6_2", 6, 11, 3},
      {"6_3", 6, 13, 5},
      {"7_1", 7, 7, 1},
      {"7_2", 7, 11, 2},
      {"7_3", 7, 13, 4},
      {"7_4", 7, 15, 4},
      {"7_5", 7, 17, 5},
      {"7_6", 7, 19, 8},
      {"7_7", 7, 21, 8},
      {"(2,8) torus link", 8, 8, 1},
  };
  return specs;
}

inline JonesKey unlink_key(int loops) {
  JonesKey k;
  LaurentPoly v = LaurentPoly::delta_pow(loops - 1);
  long classes = 1l << (loops - 1);
  for (long i = 0; i < classes; ++i) k.polys.push_back(v);
  return k;
}

} // namespace detail

/// Build the identification table from reference diagrams through the
/// state-sum oracle.  Mirror pairs whose orientation-class Jones keys
/// coincide are merged into a single self-mirror entry.  Throws naming the
/// colliding pair if two distinct entries share (components, key).
inline std::vector<KnotTableEntry> build_knot_table() {
  std::vector<KnotTableEntry> table;
  table.push_back({"unknot", "self", "unknot", 0, 1, JonesKey{{LaurentPoly(1)}}});
  table.push_back({"2-component unlink", "self", "2-component unlink", 0, 2, detail::unlink_key(2)});
  table.push_back({"3-component unlink", "self", "3-component unlink", 0, 3, detail::unlink_key(3)});

  for (const auto &s : detail::two_bridge_specs()) {
    auto v = twist_vector(s.p, s.q);
    RationalTangle t(v);
    if (t.fraction() != Fraction(s.p, s.q))
      throw TangleError(std::string("twist vector fraction mismatch for ") + s.name);
    PlanarDiagram d = numerator_closure(t);
    JonesKey key = jones_key(d, bracket_statesum(d));
    int comps = d.component_count();

    auto mv = v;
    for (auto &x : mv) x = -x;
    PlanarDiagram md = numerator_closure(RationalTangle(mv));
    JonesKey mkey = jones_key(md, bracket_statesum(md));
    if (md.component_count() != comps)
      throw TangleError(std::string("mirror component mismatch for ") + s.name);

    if (key == mkey) {
      table.push_back({s.name, "self", s.name, s.crossings, comps, key});
    } else {
      KnotTableEntry r{s.name, "right", "", s.crossings, comps, key};
      KnotTableEntry l{s.name, "left", "", s.crossings, comps, mkey};
      r.mirror = l.full_name();
      l.mirror = r.full_name();
      table.push_back(r);
      table.push_back(l);
    }
  }

  for (std::size_t i = 0; i < table.size(); ++i)
    for (std::size_t j = i + 1; j < table.size(); ++j)
      if (table[i].components == table[j].components && table[i].key == table[j].key)
        throw TangleError("knot table key collision: " + table[i].full_name() + " vs " +
                          table[j].full_name());
  return table;
}

inline const std::vector<KnotTableEntry> &knot_table() {
  static const std::vector<KnotTableEntry> table = build_knot_table();
  return table;
}

/// Identification result; `found` false means "unclassified" with the raw
/// invariants still attached.
struct Identification {
  bool found = false;
  std::string name = "unclassified";
  std::string chirality;
  int crossings = -1;
  int components = 0;
  JonesKey key;

  std::string str() const {
    if (!found) return "unclassified";
    return chirality == "self" ? name : name + " (" + chirality + ")";
  }
};

inline Identification identify_key(int components, const JonesKey &key) {
  Identification id;
  id.components = components;
  id.key = key;
  for (const auto &e : knot_table())
    if (e.components == components && e.key == key) {
      id.found = true;
      id.name = e.name;
      id.chirality = e.chirality;
      id.crossings = e.crossings;
      return id;
    }
  return id;
}

/// Identify via the Temperley-Lieb bracket route (independent of the
/// state-sum route used to build the table).
inline Identification identify(const GenWord &w, Closure closure) {
  PlanarDiagram d = close_word(w, closure);
  LaurentPoly bracket = kauffman_bracket(w, closure);
  return identify_key(d.component_count(), jones_key(d, bracket));
}

/// Identify a raw diagram through the state-sum bracket.
inline Identification identify_diagram(const PlanarDiagram &d) {
  return identify_key(d.component_count(), jones_key(d, bracket_statesum(d)));
}

// ---- table serialization ----------------------------------------------------

inline std::string knot_table_json(const std::vector<KnotTableEntry> &table) {
  std::ostringstream os;
  os << "[\n";
  for (std::size_t i = 0; i < table.size(); ++i) {
    const auto &e = table[i];
    os << "  {\"name\": \"" << e.name << "\", \"chirality\": \"" << e.chirality
       << "\", \"mirror\": \"" << e.mirror << "\", \"crossings\": " << e.crossings
       << ", \"components\": " << e.components << ", \"keys\": [";
    for (std::size_t k = 0; k < e.key.polys.size(); ++k) {
      if (k) os << ", ";
      os << "[";
      bool first = true;
      for (const auto &[exp, c] : e.key.polys[k].coeffs()) {
        if (!first) os << ", ";
        first = false;
        os << "[" << exp << ", " << c << "]";
      }
      os << "]";
    }
    os << "]}" << (i + 1 < table.size() ? "," : "") << "\n";
  }
  os << "]\n";
  return os.str();
}

} // namespace dnalg
