#pragma once

#include "dnalg/diagram.hpp"
#include "dnalg/laurent.hpp"
#include "dnalg/word.hpp"

#include <map>
#include <stdexcept>
#include <vector>

namespace dnalg {

/// Crossingless matching of 2n boundary points: top points 0..n-1 left to
/// right, bottom points n..2n-1.  Stored as the partner array.
class TLDiagram {
public:
  explicit TLDiagram(std::vector<int> partner) : partner_(std::move(partner)) {}

  static TLDiagram identity(int n) {
    std::vector<int> p(2 * n);
    for (int i = 0; i < n; ++i) {
      p[i] = i + n;
      p[i + n] = i;
    }
    return TLDiagram(std::move(p));
  }

  /// The turn-back generator: top i-1,i paired, bottom i-1,i paired
  /// (1-based strand index i).
  static TLDiagram e(int n, int i) {
    auto d = identity(n);
    d.pair(i - 1, i);
    d.pair(n + i - 1, n + i);
    return d;
  }

  int points() const { return static_cast<int>(partner_.size()); }
  int n() const { return points() / 2; }
  int partner(int p) const { return partner_[p]; }
  const std::vector<int> &pairing() const { return partner_; }

  bool operator==(const TLDiagram &o) const { return partner_ == o.partner_; }
  bool operator<(const TLDiagram &o) const { return partner_ < o.partner_; }

  /// No two arcs interleave around the boundary circle (top left to right,
  /// then bottom right to left).
  bool is_planar() const {
    int N = points();
    int half = N / 2;
    std::vector<int> ci(N); // point -> circle position
    for (int i = 0; i < half; ++i) ci[i] = i;
    for (int i = 0; i < half; ++i) ci[N - 1 - i] = half + i;
    for (int a = 0; a < N; ++a) {
      int b = partner_[a];
      if (b <= a) continue;
      for (int c = a + 1; c < N; ++c) {
        int d = partner_[c];
        if (d <= c) continue;
        int A = ci[a], B = ci[b], C = ci[c], D = ci[d];
        if (A > B) std::swap(A, B);
        if (C > D) std::swap(C, D);
        bool c_in = (C > A && C < B), d_in = (D > A && D < B);
        if (c_in != d_in) return false;
      }
    }
    return true;
  }

  /// Stack `*this` above `o`; returns the concatenated matching and the
  /// number of closed loops formed at the junction.
  std::pair<TLDiagram, int> stack(const TLDiagram &o) const {
    int m = n();
    if (o.n() != m) throw std::invalid_argument("TL size mismatch");
    // Path graph on 4m nodes: 0..2m-1 this diagram's points, 2m..4m-1 o's.
    // Arcs supply one edge per point; junction j joins node m+j to 2m+j.
    // Boundary nodes (degree 1): 0..m-1 and 3m..4m-1.
    auto other_end = [&](int node, int from) {
      // follow the single edge at `node` that is not the edge back to `from`
      int arc = node < 2 * m ? partner_[node] : 2 * m + o.partner_[node - 2 * m];
      if (arc != from) return arc;
      if (node >= m && node < 2 * m) return node + m;
      if (node >= 2 * m && node < 3 * m) return node - m;
      return -1; // boundary node, path ends
    };
    std::vector<bool> visited(4 * m, false);
    std::vector<int> out(2 * m, -1);
    auto product_id = [&](int node) { return node < m ? node : node - 2 * m; };
    for (int s = 0; s < 4 * m; ++s) {
      bool boundary = s < m || s >= 3 * m;
      if (!boundary || visited[s]) continue;
      int prev = -1, cur = s;
      while (true) {
        visited[cur] = true;
        int nxt = other_end(cur, prev);
        if (nxt == -1 && cur != s) break;
        if (nxt == -1) { // immediate arc from boundary to boundary
          nxt = cur < 2 * m ? partner_[cur] : 2 * m + o.partner_[cur - 2 * m];
          if (visited[nxt] && nxt != s) throw std::logic_error("bad TL walk");
        }
        if (nxt < m || nxt >= 3 * m) {
          visited[nxt] = true;
          out[product_id(s)] = product_id(nxt);
          out[product_id(nxt)] = product_id(s);
          break;
        }
        prev = cur;
        cur = nxt;
      }
    }
    // remaining unvisited junction nodes form closed loops
    int loops = 0;
    for (int s = m; s < 3 * m; ++s) {
      if (visited[s]) continue;
      ++loops;
      int prev = -1, cur = s;
      while (!visited[cur]) {
        visited[cur] = true;
        int nxt = other_end(cur, prev);
        prev = cur;
        cur = nxt;
      }
    }
    return {TLDiagram(std::move(out)), loops};
  }

  /// Loop count of the trace closure (top i welded to bottom i).
  int trace_loops() const {
    return closure_loops([this](int p) { return p < n() ? p + n() : p - n(); });
  }

  /// Loop count of the plat closure (adjacent pairs welded top and bottom);
  /// n must be even.
  int plat_loops() const {
    if (n() % 2 != 0) throw std::invalid_argument("plat closure needs even strand count");
    return closure_loops([](int p) { return p % 2 == 0 ? p + 1 : p - 1; });
  }

  void pair(int a, int b) {
    partner_[a] = b;
    partner_[b] = a;
  }

private:
  template <class F> int closure_loops(F arc) const {
    int N = points();
    std::vector<bool> seen(N, false);
    int loops = 0;
    for (int s = 0; s < N; ++s) {
      if (seen[s]) continue;
      ++loops;
      int cur = s;
      while (!seen[cur]) {
        seen[cur] = true;
        int j = arc(cur); // closure arc
        seen[j] = true;
        cur = partner_[j]; // diagram arc
      }
    }
    return loops;
  }

  std::vector<int> partner_;
};

/// Formal Laurent-coefficient combination of TL diagrams on n strands.
class TLElement {
public:
  explicit TLElement(int n) : n_(n) {}

  static TLElement one(int n) {
    TLElement x(n);
    x.terms_.emplace(TLDiagram::identity(n), LaurentPoly(1));
    return x;
  }
  static TLElement generator(int n, int i, const LaurentPoly &coeff = LaurentPoly(1)) {
    TLElement x(n);
    x.terms_.emplace(TLDiagram::e(n, i), coeff);
    return x;
  }

  int n() const { return n_; }
  const std::map<TLDiagram, LaurentPoly> &terms() const { return terms_; }

  bool operator==(const TLElement &o) const { return n_ == o.n_ && terms_ == o.terms_; }
  bool operator!=(const TLElement &o) const { return !(*this == o); }

  void add_term(const TLDiagram &d, const LaurentPoly &c) {
    auto it = terms_.find(d);
    if (it == terms_.end()) {
      if (!c.is_zero()) terms_.emplace(d, c);
      return;
    }
    it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
  }

  friend TLElement operator+(const TLElement &a, const TLElement &b) {
    TLElement r = a;
    for (const auto &[d, c] : b.terms_) r.add_term(d, c);
    return r;
  }

  /// Stacking product; junction loops contribute delta factors.
  friend TLElement operator*(const TLElement &a, const TLElement &b) {
    TLElement r(a.n_);
    for (const auto &[da, ca] : a.terms_)
      for (const auto &[db, cb] : b.terms_) {
        auto [d, loops] = da.stack(db);
        r.add_term(d, ca * cb * LaurentPoly::delta_pow(loops));
      }
    return r;
  }

  TLElement scaled(const LaurentPoly &c) const {
    TLElement r(n_);
    for (const auto &[d, co] : terms_) r.add_term(d, co * c);
    return r;
  }

private:
  int n_;
  std::map<TLDiagram, LaurentPoly> terms_;
};

/// Image of a word under the Kauffman-bracket representation:
/// sigma_i -> A + A^-1 e_i, sigma_i^-1 -> A^-1 + A e_i, e_i -> e_i.
inline TLElement word_to_tl(const GenWord &w) {
  if (w.strand_count() > 12)
    throw WordError("TL expansion limited to 12 strands");
  if (w.has_affine_letter())
    throw WordError("affine letters have no TL image");
  int n = w.strand_count();
  TLElement acc = TLElement::one(n);
  for (const auto &g : w.letters()) {
    TLElement step(n);
    switch (g.kind) {
    case Generator::Kind::Sigma:
      step = TLElement::one(n).scaled(LaurentPoly::monomial(1, 1)) +
             TLElement::generator(n, g.index, LaurentPoly::monomial(1, -1));
      break;
    case Generator::Kind::SigmaInv:
      step = TLElement::one(n).scaled(LaurentPoly::monomial(1, -1)) +
             TLElement::generator(n, g.index, LaurentPoly::monomial(1, 1));
      break;
    case Generator::Kind::E:
      step = TLElement::generator(n, g.index);
      break;
    default:
      throw WordError("unexpected letter in TL expansion");
    }
    acc = acc * step;
  }
  return acc;
}

/// Kauffman bracket of the closed word, normalized so the unknot has
/// bracket 1 (each closure diagram contributes delta^(loops-1)).
inline LaurentPoly kauffman_bracket(const GenWord &w, Closure closure) {
  if (closure == Closure::Plat && w.strand_count() % 2 != 0)
    throw WordError("plat closure needs an even strand count");
  TLElement el = word_to_tl(w);
  LaurentPoly total;
  for (const auto &[d, c] : el.terms()) {
    int loops = closure == Closure::Plat ? d.plat_loops() : d.trace_loops();
    total = total + c * LaurentPoly::delta_pow(loops - 1);
  }
  return total;
}

} // namespace dnalg
