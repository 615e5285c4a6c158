#pragma once

#include "dnalg/diagram.hpp"
#include "dnalg/laurent.hpp"

#include <numeric>
#include <vector>

namespace dnalg {

namespace detail {

class UnionFind {
public:
  explicit UnionFind(int n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  int find(int x) {
    while (parent_[x] != x) x = parent_[x] = parent_[parent_[x]];
    return x;
  }
  void unite(int a, int b) { parent_[find(a)] = find(b); }
  int classes() {
    int c = 0;
    for (int i = 0; i < static_cast<int>(parent_.size()); ++i)
      if (find(i) == i) ++c;
    return c;
  }

private:
  std::vector<int> parent_;
};

} // namespace detail

/// Kauffman bracket by direct enumeration of all 2^c smoothing states,
/// normalized so the unknot has bracket 1.  Independent of the algebraic
/// route: works on the closed diagram only.  Crossing count is capped.
inline LaurentPoly bracket_statesum(const PlanarDiagram &d) {
  using P = PlanarDiagram;
  std::vector<int> crossings;
  for (int i = 0; i < static_cast<int>(d.nodes.size()); ++i)
    if (d.nodes[i].is_crossing) crossings.push_back(i);
  int c = static_cast<int>(crossings.size());
  if (c > 24) throw DiagramError("state sum limited to 24 crossings");
  if (d.edge_count() == 0)
    return LaurentPoly::delta_pow(d.free_loops - 1); // unlinks; empty diagram invalid upstream

  LaurentPoly total;
  for (unsigned long state = 0; state < (1ul << c); ++state) {
    detail::UnionFind uf(d.edge_count());
    int a_count = 0;
    for (const auto &n : d.nodes)
      if (!n.is_crossing) {
        uf.unite(n.e[P::TL], n.e[P::TR]);
        uf.unite(n.e[P::BL], n.e[P::BR]);
      }
    for (int k = 0; k < c; ++k) {
      const auto &n = d.nodes[crossings[k]];
      bool a_smoothing = ((state >> k) & 1) == 0;
      if (a_smoothing) ++a_count;
      // for a positive crossing the A-smoothing is the vertical pairing
      // {TL-BL, TR-BR}; the B-smoothing is {TL-TR, BL-BR}; negative swaps
      bool vertical = n.positive ? a_smoothing : !a_smoothing;
      if (vertical) {
        uf.unite(n.e[P::TL], n.e[P::BL]);
        uf.unite(n.e[P::TR], n.e[P::BR]);
      } else {
        uf.unite(n.e[P::TL], n.e[P::TR]);
        uf.unite(n.e[P::BL], n.e[P::BR]);
      }
    }
    int loops = uf.classes() + d.free_loops;
    total += LaurentPoly::monomial(1, a_count - (c - a_count)) * LaurentPoly::delta_pow(loops - 1);
  }
  return total;
}

} // namespace dnalg
