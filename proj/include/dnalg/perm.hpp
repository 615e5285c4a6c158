#pragma once

#include "dnalg/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace dnalg {

/// Permutation of 1..n, stored as the image sequence.
class Permutation {
public:
  explicit Permutation(std::vector<int> images) : images_(std::move(images)) { check(); }
  static Permutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
  }
  static Permutation transposition(int n, int i) {
    auto p = identity(n);
    std::swap(p.images_[i - 1], p.images_[i]);
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }
  int apply(int x) const { return images_[x - 1]; }
  const std::vector<int> &images() const { return images_; }

  /// Left-to-right composition: (a * b)(x) = b(a(x)).
  friend Permutation operator*(const Permutation &a, const Permutation &b) {
    std::vector<int> v(a.images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = b.apply(a.images_[i]);
    return Permutation(std::move(v));
  }

  Permutation inverse() const {
    std::vector<int> v(images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[images_[i] - 1] = static_cast<int>(i) + 1;
    return Permutation(std::move(v));
  }

  int cycle_count() const {
    std::vector<bool> seen(images_.size(), false);
    int c = 0;
    for (int i = 1; i <= size(); ++i) {
      if (seen[i - 1]) continue;
      ++c;
      for (int j = i; !seen[j - 1]; j = apply(j)) seen[j - 1] = true;
    }
    return c;
  }

  bool operator==(const Permutation &o) const { return images_ == o.images_; }
  bool operator!=(const Permutation &o) const { return !(*this == o); }
  bool operator<(const Permutation &o) const { return images_ < o.images_; }

private:
  void check() const {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      if (x < 1 || x > size() || seen[x - 1]) throw std::invalid_argument("not a permutation");
      seen[x - 1] = true;
    }
  }
  std::vector<int> images_;
};

/// Signed permutation (hyperoctahedral group element): image sequence of
/// nonzero integers whose magnitudes are a permutation of 1..n.
class SignedPermutation {
public:
  explicit SignedPermutation(std::vector<int> images) : images_(std::move(images)) { check(); }
  static SignedPermutation identity(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return SignedPermutation(std::move(v));
  }
  /// The generator s_i = (i i+1), unsigned.
  static SignedPermutation transposition(int n, int i) {
    auto p = identity(n);
    std::swap(p.images_[i - 1], p.images_[i]);
    return p;
  }
  /// The generator t: 1 <-> -1, all other values fixed.
  static SignedPermutation sign_flip_first(int n) {
    auto p = identity(n);
    p.images_[0] = -1;
    return p;
  }

  int size() const { return static_cast<int>(images_.size()); }
  const std::vector<int> &images() const { return images_; }

  /// Value map on {+-1..+-n}, with w(-x) = -w(x).
  int apply(int x) const {
    int ax = x < 0 ? -x : x;
    int im = images_[ax - 1];
    return x < 0 ? -im : im;
  }

  /// Left-to-right composition: (a * b)(x) = b(a(x)).
  friend SignedPermutation operator*(const SignedPermutation &a, const SignedPermutation &b) {
    std::vector<int> v(a.images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = b.apply(a.images_[i]);
    return SignedPermutation(std::move(v));
  }

  SignedPermutation inverse() const {
    std::vector<int> v(images_.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
      int im = images_[i];
      if (im > 0)
        v[im - 1] = static_cast<int>(i) + 1;
      else
        v[-im - 1] = -(static_cast<int>(i) + 1);
    }
    return SignedPermutation(std::move(v));
  }

  bool is_identity() const {
    for (int i = 0; i < size(); ++i)
      if (images_[i] != i + 1) return false;
    return true;
  }

  bool operator==(const SignedPermutation &o) const { return images_ == o.images_; }
  bool operator!=(const SignedPermutation &o) const { return !(*this == o); }
  bool operator<(const SignedPermutation &o) const { return images_ < o.images_; }

private:
  void check() const {
    std::vector<bool> seen(images_.size(), false);
    for (int x : images_) {
      int ax = x < 0 ? -x : x;
      if (ax < 1 || ax > size() || seen[ax - 1])
        throw std::invalid_argument("not a signed permutation");
      seen[ax - 1] = true;
    }
  }
  std::vector<int> images_;
};

/// Quotient of the braid group by sigma_i^2 = 1: sigma_i -> (i i+1),
/// x1 -> identity, composed in word order down the braid.
inline Permutation underlying_permutation(const GenWord &w) {
  if (w.has_e()) throw WordError("word contains e letters; no underlying permutation");
  Permutation p = Permutation::identity(w.strand_count());
  for (const auto &g : w.letters())
    if (g.is_crossing()) p = p * Permutation::transposition(w.strand_count(), g.index);
  return p;
}

/// Quotient of the affine braid group by sigma_i^2 = x1^2 = 1: the type-B
/// Coxeter group.  sigma_i -> s_i, x1 -> t, composed in word order.
inline SignedPermutation quotient_to_typeB(const GenWord &w) {
  if (w.has_e()) throw WordError("word contains e letters; no type-B quotient");
  SignedPermutation p = SignedPermutation::identity(w.strand_count());
  for (const auto &g : w.letters()) {
    if (g.is_crossing())
      p = p * SignedPermutation::transposition(w.strand_count(), g.index);
    else if (g.is_affine())
      p = p * SignedPermutation::sign_flip_first(w.strand_count());
  }
  return p;
}

} // namespace dnalg
