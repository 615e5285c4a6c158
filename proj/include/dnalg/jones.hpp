#pragma once

#include "dnalg/diagram.hpp"
#include "dnalg/laurent.hpp"
#include "dnalg/statesum.hpp"

#include <algorithm>
#include <sstream>
#include <string>
#include <vector>

namespace dnalg {

/// Orientation-class Jones values: one polynomial in the variable A per
/// orientation class of the link, as a sorted multiset.  For a link with k
/// components there are 2^(k-1) classes (global reversal preserves writhe).
struct JonesKey {
  std::vector<LaurentPoly> polys; // sorted

  bool operator==(const JonesKey &o) const { return polys == o.polys; }
  bool operator!=(const JonesKey &o) const { return !(*this == o); }
  bool operator<(const JonesKey &o) const { return polys < o.polys; }

  JonesKey mirrored() const {
    JonesKey k;
    k.polys.reserve(polys.size());
    for (const auto &p : polys) k.polys.push_back(p.mirror());
    std::sort(k.polys.begin(), k.polys.end());
    return k;
  }
  bool is_amphichiral() const { return *this == mirrored(); }

  std::string str() const {
    std::ostringstream os;
    os << "{";
    for (std::size_t i = 0; i < polys.size(); ++i) {
      if (i) os << "; ";
      os << polys[i].str();
    }
    os << "}";
    return os.str();
  }
};

/// Writhe of the diagram for a fixed choice of component orientations
/// (flip[c] reverses component c relative to the traversal direction).
inline int oriented_writhe(const PlanarDiagram &d, const PlanarDiagram::Traversal &t,
                           const std::vector<int> &flip) {
  int w = 0;
  for (std::size_t i = 0; i < d.nodes.size(); ++i) {
    if (!d.nodes[i].is_crossing) continue;
    const auto &p = t.crossing_passes[i];
    int d0 = p[0].dir * flip[p[0].component];
    int d1 = p[1].dir * flip[p[1].component];
    w += (d.nodes[i].positive ? 1 : -1) * d0 * d1;
  }
  return w;
}

/// The multiset of (-A)^(-3w) * bracket over orientation classes.  Free
/// loops carry no crossings, so each writhe from the edge components is
/// repeated once per free-loop orientation class.
inline JonesKey jones_key(const PlanarDiagram &d, const LaurentPoly &bracket) {
  auto t = d.traverse();
  int ec = t.edge_components;
  int f = d.free_loops;
  if (ec + f > 20) throw DiagramError("too many components for orientation classes");

  JonesKey key;
  std::vector<int> flip(ec, +1);
  long repeats = f >= 1 ? (1l << (f - 1)) : 1;
  // with no free loops, fix the first edge component's orientation
  long states = ec == 0 ? 1 : (f >= 1 ? (1l << ec) : (1l << (ec - 1)));
  for (long s = 0; s < states; ++s) {
    for (int c = 0; c < ec; ++c) flip[c] = ((s >> c) & 1) ? -1 : +1;
    int w = oriented_writhe(d, t, flip);
    LaurentPoly v = bracket.times_minus_A_pow(-3 * w);
    for (long r = 0; r < repeats; ++r) key.polys.push_back(v);
  }
  std::sort(key.polys.begin(), key.polys.end());
  return key;
}

inline JonesKey jones_key(const PlanarDiagram &d) { return jones_key(d, bracket_statesum(d)); }

} // namespace dnalg
