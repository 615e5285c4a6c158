#pragma once

#include "dnalg/coxeter.hpp"
#include "dnalg/perm.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <queue>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dnalg {

class GenomeError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Circular arrangement of n signed region labels (magnitudes 1..n, each
/// once) with an optional terminus region, named by label magnitude.
/// Unsigned genomes carry all-positive labels and reflect without
/// negation.
class CircularGenome {
public:
  CircularGenome(std::vector<int> labels, bool is_signed = true, int terminus_label = 0)
      : labels_(std::move(labels)), signed_(is_signed), terminus_(terminus_label) {
    int n = size();
    if (n == 0) throw GenomeError("empty genome");
    std::vector<bool> seen(n, false);
    for (int x : labels_) {
      int ax = x < 0 ? -x : x;
      if (ax < 1 || ax > n || seen[ax - 1]) throw GenomeError("labels must be +-1..n, each once");
      if (!signed_ && x < 0) throw GenomeError("unsigned genome with a negative label");
      seen[ax - 1] = true;
    }
    if (terminus_ < 0 || terminus_ > n) throw GenomeError("terminus label out of range");
  }

  static CircularGenome identity(int n, bool is_signed = true) {
    std::vector<int> v(n);
    for (int i = 0; i < n; ++i) v[i] = i + 1;
    return CircularGenome(std::move(v), is_signed);
  }

  int size() const { return static_cast<int>(labels_.size()); }
  const std::vector<int> &labels() const { return labels_; }
  bool is_signed() const { return signed_; }
  int terminus_label() const { return terminus_; } // 0 = none
  bool has_terminus() const { return terminus_ != 0; }

  int terminus_position() const {
    for (int i = 0; i < size(); ++i)
      if (std::abs(labels_[i]) == terminus_) return i;
    throw GenomeError("terminus label absent");
  }

  bool operator==(const CircularGenome &o) const {
    return labels_ == o.labels_ && signed_ == o.signed_ && terminus_ == o.terminus_;
  }
  bool operator<(const CircularGenome &o) const { return labels_ < o.labels_; }

  std::string str() const {
    std::ostringstream os;
    for (int i = 0; i < size(); ++i) {
      if (i) os << ",";
      os << labels_[i];
      if (terminus_ != 0 && std::abs(labels_[i]) == terminus_) os << "*";
    }
    return os.str();
  }

  /// Format: comma-separated signed labels, optional `*` after the
  /// terminus region, e.g. "1,-4,-3,-2,5,6*".
  static CircularGenome parse(const std::string &text, bool is_signed = true) {
    std::vector<int> labels;
    int terminus = 0;
    std::istringstream is(text);
    std::string tok;
    while (std::getline(is, tok, ',')) {
      bool star = !tok.empty() && tok.back() == '*';
      if (star) tok.pop_back();
      std::size_t pos = 0;
      int v;
      try {
        v = std::stoi(tok, &pos);
      } catch (const std::exception &) {
        throw GenomeError("bad region label '" + tok + "'");
      }
      if (pos != tok.size()) throw GenomeError("bad region label '" + tok + "'");
      labels.push_back(v);
      if (star) {
        if (terminus != 0) throw GenomeError("more than one terminus mark");
        terminus = std::abs(v);
      }
    }
    return CircularGenome(std::move(labels), is_signed, terminus);
  }

private:
  std::vector<int> labels_;
  bool signed_;
  int terminus_; // label magnitude, 0 if absent
};

/// Signed inversion of the cyclic interval from position i to position j
/// inclusive (0-based, wrapping when j < i): order reversed, signs negated
/// (signs untouched for unsigned genomes).
inline CircularGenome inversion(const CircularGenome &g, int i, int j) {
  int n = g.size();
  if (i < 0 || i >= n || j < 0 || j >= n) throw GenomeError("inversion position out of range");
  int len = (j - i + n) % n + 1;
  auto labels = g.labels();
  std::vector<int> seg(len);
  for (int k = 0; k < len; ++k) seg[k] = labels[(i + k) % n];
  for (int k = 0; k < len; ++k) {
    int v = seg[len - 1 - k];
    labels[(i + k) % n] = g.is_signed() ? -v : v;
  }
  return CircularGenome(std::move(labels), g.is_signed(), g.terminus_label());
}

/// Lexicographically minimal representative over the dihedral action: n
/// rotations and n reflections, a reflection reversing the order and (for
/// signed genomes) negating every label.
inline CircularGenome dihedral_canonical(const CircularGenome &g) {
  int n = g.size();
  auto best = g.labels();
  auto consider = [&](std::vector<int> v) {
    for (int r = 0; r < n; ++r) {
      if (v < best) best = v;
      std::rotate(v.begin(), v.begin() + 1, v.end());
    }
  };
  consider(g.labels());
  auto refl = g.labels();
  std::reverse(refl.begin(), refl.end());
  if (g.is_signed())
    for (auto &x : refl) x = -x;
  consider(refl);
  return CircularGenome(best, g.is_signed(), g.terminus_label());
}

/// Generator sets for the Cayley-graph distance.
struct GeneratorSet {
  enum class Kind {
    AllInversions,
    MaxLength,        // inversions of at most max_len regions
    TerminusFixing,   // interval must not contain the terminus region
    TerminusSymmetric,// interval symmetric about the axis through the terminus
    AdjacentPairUnsigned
  };
  Kind kind = Kind::AllInversions;
  int max_len = 0;

  static GeneratorSet all() { return {Kind::AllInversions, 0}; }
  static GeneratorSet max_length(int L) { return {Kind::MaxLength, L}; }
  static GeneratorSet terminus_fixing() { return {Kind::TerminusFixing, 0}; }
  static GeneratorSet terminus_symmetric() { return {Kind::TerminusSymmetric, 0}; }
  static GeneratorSet adjacent_pair_unsigned() { return {Kind::AdjacentPairUnsigned, 0}; }

  /// Applicable (i, j) intervals for the given genome.
  std::vector<std::pair<int, int>> intervals(const CircularGenome &g) const {
    int n = g.size();
    std::vector<std::pair<int, int>> out;
    int tpos = kind == Kind::TerminusFixing || kind == Kind::TerminusSymmetric
                   ? g.terminus_position()
                   : -1;
    for (int i = 0; i < n; ++i)
      for (int len = 1; len < n; ++len) {
        int j = (i + len - 1) % n;
        switch (kind) {
        case Kind::AllInversions: break;
        case Kind::MaxLength:
          if (len > max_len) continue;
          break;
        case Kind::TerminusFixing: {
          int off = (tpos - i + n) % n;
          if (off < len) continue; // interval covers the terminus
          break;
        }
        case Kind::TerminusSymmetric: {
          // interval centered diametrically opposite the terminus and
          // avoiding it; requires matching parity
          if ((2 * i + len - 1) % n != (2 * tpos + n) % n) continue;
          int off = (tpos - i + n) % n;
          if (off < len) continue;
          break;
        }
        case Kind::AdjacentPairUnsigned:
          if (len != 2 || g.is_signed()) continue;
          break;
        }
        out.emplace_back(i, j);
      }
    return out;
  }
};

/// Cayley-graph distance between dihedral classes via bidirectional BFS on
/// canonical forms.  Returns nullopt when the target is unreachable under
/// the restricted generators.  Hard cap n <= 10.
inline std::optional<int> distance_bfs(const CircularGenome &a, const CircularGenome &b,
                                       const GeneratorSet &gens) {
  if (a.size() != b.size() || a.is_signed() != b.is_signed())
    throw GenomeError("genomes not comparable");
  if (a.terminus_label() != b.terminus_label())
    throw GenomeError("terminus labels differ");
  if (a.size() > 10) throw GenomeError("BFS distance limited to n <= 10");

  auto key = [](const CircularGenome &g) { return dihedral_canonical(g).labels(); };
  using Key = std::vector<int>;
  CircularGenome ca = dihedral_canonical(a), cb = dihedral_canonical(b);
  if (ca.labels() == cb.labels()) return 0;

  struct Side {
    std::map<Key, int> dist;
    std::vector<CircularGenome> frontier;
  };
  Side fwd, bwd;
  fwd.dist[ca.labels()] = 0;
  fwd.frontier.push_back(ca);
  bwd.dist[cb.labels()] = 0;
  bwd.frontier.push_back(cb);

  int depth_f = 0, depth_b = 0;
  while (!fwd.frontier.empty() && !bwd.frontier.empty()) {
    Side &grow = fwd.frontier.size() <= bwd.frontier.size() ? fwd : bwd;
    Side &other = (&grow == &fwd) ? bwd : fwd;
    int &depth = (&grow == &fwd) ? depth_f : depth_b;
    std::vector<CircularGenome> next;
    for (const auto &g : grow.frontier) {
      for (auto [i, j] : gens.intervals(g)) {
        CircularGenome h = dihedral_canonical(inversion(g, i, j));
        auto it = other.dist.find(h.labels());
        if (it != other.dist.end()) return depth + 1 + it->second;
        if (grow.dist.emplace(h.labels(), depth + 1).second) next.push_back(h);
      }
    }
    grow.frontier = std::move(next);
    ++depth;
  }
  return std::nullopt;
}

/// Distance between unsigned circular genomes under the n adjacent-pair
/// swaps, modulo the dihedral action, by BFS.
inline std::optional<int> circular_swap_distance_bfs(const CircularGenome &a,
                                                     const CircularGenome &b) {
  return distance_bfs(a, b, GeneratorSet::adjacent_pair_unsigned());
}

/// Experimental fast path: minimum of the affine length over all dihedral
/// alignments of b and all bounded rotational lifts of the quotient
/// permutation.  Validated against the BFS route.
inline int circular_swap_distance_fast(const CircularGenome &a, const CircularGenome &b) {
  if (a.is_signed() || b.is_signed()) throw GenomeError("fast path is for unsigned genomes");
  if (a.size() != b.size()) throw GenomeError("genomes not comparable");
  int n = a.size();

  int best = -1;
  auto try_alignment = [&](const std::vector<int> &target) {
    std::vector<int> pos(n + 1);
    for (int i = 0; i < n; ++i) pos[target[i]] = i + 1;
    std::vector<int> base(n);
    for (int i = 0; i < n; ++i) base[i] = pos[a.labels()[i]];
    // lifts: window_i = base_i + n*k_i with sum k_i = 0, k_i in {-1,0,1}
    std::vector<int> k(n, -1);
    while (true) {
      int sum = 0;
      for (int x : k) sum += x;
      if (sum == 0) {
        std::vector<int> w(n);
        for (int i = 0; i < n; ++i) w[i] = base[i] + n * k[i];
        int len = affine_length(AffinePermutation(w));
        if (best < 0 || len < best) best = len;
      }
      int i = 0;
      while (i < n && k[i] == 1) k[i++] = -1;
      if (i == n) break;
      ++k[i];
    }
  };

  std::vector<int> t = b.labels();
  for (int r = 0; r < n; ++r) {
    try_alignment(t);
    std::rotate(t.begin(), t.begin() + 1, t.end());
  }
  std::reverse(t.begin(), t.end());
  for (int r = 0; r < n; ++r) {
    try_alignment(t);
    std::rotate(t.begin(), t.begin() + 1, t.end());
  }
  return best;
}

/// Classical breakpoint-graph lower bound n + 1 - c for transforming a
/// into b by signed interval reversals on the linear model.
inline int breakpoint_cycle_bound(const SignedPermutation &a, const SignedPermutation &b) {
  if (a.size() != b.size()) throw GenomeError("size mismatch");
  int n = a.size();
  // relative arrangement: signed position in b of each of a's images
  std::vector<int> posb(n + 1);
  std::vector<int> sgnb(n + 1);
  for (int i = 0; i < n; ++i) {
    int v = b.images()[i];
    posb[std::abs(v)] = i + 1;
    sgnb[std::abs(v)] = v < 0 ? -1 : 1;
  }
  std::vector<int> rel(n);
  for (int i = 0; i < n; ++i) {
    int v = a.images()[i];
    int s = (v < 0 ? -1 : 1) * sgnb[std::abs(v)];
    rel[i] = s * posb[std::abs(v)];
  }
  // breakpoint graph on 2n+2 vertices 0..2n+1
  std::vector<int> black(2 * n + 2, -1), gray(2 * n + 2, -1);
  auto left = [](int x) { return x > 0 ? 2 * x - 1 : -2 * x; };
  auto right = [](int x) { return x > 0 ? 2 * x : -2 * x - 1; };
  int prev = 0;
  for (int i = 0; i < n; ++i) {
    black[prev] = left(rel[i]);
    black[left(rel[i])] = prev;
    prev = right(rel[i]);
  }
  black[prev] = 2 * n + 1;
  black[2 * n + 1] = prev;
  for (int i = 0; i <= n; ++i) {
    gray[2 * i] = 2 * i + 1;
    gray[2 * i + 1] = 2 * i;
  }
  std::vector<bool> seen(2 * n + 2, false);
  int cycles = 0;
  for (int s = 0; s < 2 * n + 2; ++s) {
    if (seen[s]) continue;
    ++cycles;
    int cur = s;
    while (!seen[cur]) {
      seen[cur] = true;
      int m = black[cur];
      seen[m] = true;
      cur = gray[m];
    }
  }
  return n + 1 - cycles;
}

/// Linear-model inversion distance by bidirectional BFS over raw signed
/// sequences (no dihedral action); oracle for the cycle bound.
inline int linear_inversion_distance_bfs(const SignedPermutation &a, const SignedPermutation &b) {
  if (a.size() != b.size()) throw GenomeError("size mismatch");
  int n = a.size();
  if (n > 8) throw GenomeError("linear BFS limited to n <= 8");
  using Key = std::vector<int>;
  auto step = [n](const Key &v) {
    std::vector<Key> out;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Key w = v;
        std::reverse(w.begin() + i, w.begin() + j + 1);
        for (int k = i; k <= j; ++k) w[k] = -w[k];
        out.push_back(std::move(w));
      }
    return out;
  };
  Key ka = a.images(), kb = b.images();
  if (ka == kb) return 0;
  std::map<Key, int> da{{ka, 0}}, db{{kb, 0}};
  std::vector<Key> fa{ka}, fb{kb};
  int depth_a = 0, depth_b = 0;
  while (true) {
    bool growA = fa.size() <= fb.size();
    auto &frontier = growA ? fa : fb;
    auto &mine = growA ? da : db;
    auto &theirs = growA ? db : da;
    int &depth = growA ? depth_a : depth_b;
    if (frontier.empty()) throw GenomeError("inversion BFS frontier exhausted");
    std::vector<Key> next;
    for (const auto &v : frontier)
      for (auto &w : step(v)) {
        auto it = theirs.find(w);
        if (it != theirs.end()) return depth + 1 + it->second;
        if (mine.emplace(w, depth + 1).second) next.push_back(std::move(w));
      }
    frontier = std::move(next);
    ++depth;
  }
}

} // namespace dnalg
