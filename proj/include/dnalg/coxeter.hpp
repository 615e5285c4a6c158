#pragma once

#include "dnalg/perm.hpp"

#include <cstdlib>
#include <map>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <vector>

namespace dnalg {

/// Type-B (hyperoctahedral) length over the generators {s_1..s_{n-1}, t}:
/// inv(w) + neg(w) + nsp(w), where inv counts i<j with w(i) > w(j), neg
/// counts negative images, and nsp counts i<j with w(i) + w(j) < 0.
inline int typeB_length(const SignedPermutation &w) {
  int n = w.size();
  int len = 0;
  const auto &im = w.images();
  for (int i = 0; i < n; ++i) {
    if (im[i] < 0) ++len;
    for (int j = i + 1; j < n; ++j) {
      if (im[i] > im[j]) ++len;
      if (im[i] + im[j] < 0) ++len;
    }
  }
  return len;
}

/// Independent oracle: breadth-first search over the Cayley graph of
/// {s_1..s_{n-1}, t} from the identity.  Exponential in n; n <= 5.
inline std::map<SignedPermutation, int> typeB_length_bfs(int n) {
  if (n > 5) throw std::invalid_argument("type-B BFS oracle limited to n <= 5");
  std::vector<SignedPermutation> gens;
  for (int i = 1; i < n; ++i) gens.push_back(SignedPermutation::transposition(n, i));
  gens.push_back(SignedPermutation::sign_flip_first(n));

  std::map<SignedPermutation, int> dist;
  std::queue<SignedPermutation> q;
  dist.emplace(SignedPermutation::identity(n), 0);
  q.push(SignedPermutation::identity(n));
  while (!q.empty()) {
    SignedPermutation w = q.front();
    q.pop();
    int d = dist.at(w);
    for (const auto &g : gens) {
      SignedPermutation x = w * g;
      if (dist.emplace(x, d + 1).second) q.push(x);
    }
  }
  return dist;
}

/// Element of the affine symmetric group in window notation: n integers
/// with pairwise-distinct residues mod n summing to n(n+1)/2.
class AffinePermutation {
public:
  explicit AffinePermutation(std::vector<int> window) : window_(std::move(window)) {
    int n = size();
    if (n < 1) throw std::invalid_argument("empty window");
    std::vector<bool> res(n, false);
    long sum = 0;
    for (int x : window_) {
      int r = ((x % n) + n) % n;
      if (res[r]) throw std::invalid_argument("window residues not distinct mod n");
      res[r] = true;
      sum += x;
    }
    if (sum != static_cast<long>(n) * (n + 1) / 2)
      throw std::invalid_argument("window sum must be n(n+1)/2");
  }

  static AffinePermutation identity(int n) {
    std::vector<int> w(n);
    std::iota(w.begin(), w.end(), 1);
    return AffinePermutation(std::move(w));
  }

  int size() const { return static_cast<int>(window_.size()); }
  const std::vector<int> &window() const { return window_; }

  /// Right multiplication by the simple generator s_i; i = 0 is the affine
  /// generator swapping the window ends across the period.
  AffinePermutation times_simple(int i) const {
    int n = size();
    auto w = window_;
    if (i == 0) {
      int a = w[0], b = w[n - 1];
      w[0] = b - n;
      w[n - 1] = a + n;
    } else {
      std::swap(w[i - 1], w[i]);
    }
    return AffinePermutation(std::move(w));
  }

  bool operator==(const AffinePermutation &o) const { return window_ == o.window_; }
  bool operator<(const AffinePermutation &o) const { return window_ < o.window_; }

private:
  std::vector<int> window_;
};

/// Shi's formula: sum over i < j of |floor((w(j) - w(i)) / n)|.
inline int affine_length(const AffinePermutation &w) {
  int n = w.size();
  int len = 0;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      int d = w.window()[j] - w.window()[i];
      // floor division toward minus infinity
      int f = d >= 0 ? d / n : -(((-d) + n - 1) / n);
      len += f >= 0 ? f : -f;
    }
  return len;
}

/// Independent oracle: BFS over the affine generators up to the given
/// length bound; elements beyond the bound are absent from the map.
inline std::map<AffinePermutation, int> affine_length_bfs(int n, int max_len) {
  std::map<AffinePermutation, int> dist;
  std::queue<AffinePermutation> q;
  dist.emplace(AffinePermutation::identity(n), 0);
  q.push(AffinePermutation::identity(n));
  while (!q.empty()) {
    AffinePermutation w = q.front();
    q.pop();
    int d = dist.at(w);
    if (d == max_len) continue;
    for (int i = 0; i < n; ++i) {
      AffinePermutation x = w.times_simple(i);
      if (dist.emplace(x, d + 1).second) q.push(x);
    }
  }
  return dist;
}

} // namespace dnalg
