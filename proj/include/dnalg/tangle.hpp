#pragma once

#include "dnalg/diagram.hpp"
#include "dnalg/fraction.hpp"

#include <cstdint>
#include <numeric>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace dnalg {

class TangleError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// The four open corners of a tangle under assembly.
struct TangleEnds {
  DiagramBuilder::EndId nw, ne, sw, se;
};

/// Rational tangle as an integer twist vector: entries alternate
/// south-twist/east-twist blocks ending with a horizontal (east) entry, so
/// the last entry twists the NE/SE corners and the previous one the SW/SE
/// corners.  Positive entries are right-handed.  The infinity tangle is a
/// separate flag.
class RationalTangle {
public:
  explicit RationalTangle(std::vector<std::int64_t> twists)
      : twists_(std::move(twists)) {
    if (twists_.empty()) throw TangleError("empty twist vector");
  }
  static RationalTangle zero() { return RationalTangle({0}); }
  static RationalTangle integer(std::int64_t k) { return RationalTangle({k}); }
  static RationalTangle infinity() {
    RationalTangle t({0});
    t.infinite_ = true;
    return t;
  }

  bool is_infinite() const { return infinite_; }
  const std::vector<std::int64_t> &twists() const { return twists_; }

  /// Conway fraction a_k + 1/(a_{k-1} + 1/(... + 1/a_1)), in lowest terms.
  /// Two rational tangles are isotopic iff their fractions are equal.
  Fraction fraction() const {
    if (infinite_) return Fraction::infinity();
    Fraction f(twists_[0], 1);
    for (std::size_t j = 1; j < twists_.size(); ++j)
      f = Fraction(twists_[j], 1) + f.reciprocal();
    return f;
  }

  /// Append the tangle's crossings to the builder; returns the four open
  /// corner ends.
  TangleEnds build(DiagramBuilder &b) const {
    TangleEnds t{};
    if (infinite_) {
      auto [nw, sw] = b.free_strand();
      auto [ne, se] = b.free_strand();
      return {nw, ne, sw, se};
    }
    std::size_t k = twists_.size();
    // entry parity: last entry east; start from the 0-tangle when the first
    // entry is an east block (k odd), else from the infinity tangle
    if (k % 2 == 1) {
      auto [nw, ne] = b.free_strand();
      auto [sw, se] = b.free_strand();
      t = {nw, ne, sw, se};
    } else {
      auto [nw, sw] = b.free_strand();
      auto [ne, se] = b.free_strand();
      t = {nw, ne, sw, se};
    }
    for (std::size_t j = 0; j < k; ++j) {
      bool east = (k - j) % 2 == 1;
      std::int64_t m = twists_[j];
      for (std::int64_t c = 0; c < (m < 0 ? -m : m); ++c) {
        bool right_handed = m > 0;
        if (east) {
          int node = b.add_node(true, right_handed ? kEastPositive : !kEastPositive);
          b.close_onto(t.ne, node, PlanarDiagram::TL);
          b.close_onto(t.se, node, PlanarDiagram::BL);
          t.ne = b.strand_from(node, PlanarDiagram::TR);
          t.se = b.strand_from(node, PlanarDiagram::BR);
        } else {
          int node = b.add_node(true, right_handed ? kSouthPositive : !kSouthPositive);
          b.close_onto(t.sw, node, PlanarDiagram::TL);
          b.close_onto(t.se, node, PlanarDiagram::TR);
          t.sw = b.strand_from(node, PlanarDiagram::BL);
          t.se = b.strand_from(node, PlanarDiagram::BR);
        }
      }
    }
    return t;
  }

  std::string str() const {
    if (infinite_) return "inf";
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < twists_.size(); ++i) {
      if (i) os << ",";
      os << twists_[i];
    }
    os << ")";
    return os.str();
  }

  // Crossing-sign constants tying the twist convention to the braid-side
  // crossing convention.  A twist crossing is entered from the side, so its
  // node flag is the opposite of a braid crossing's; both constants must
  // agree or east and south blocks fight each other.  Pinned by the
  // N((k)) = plat(sigma_2^k) checks, chirality included.
  static constexpr bool kEastPositive = false;
  static constexpr bool kSouthPositive = false;

private:
  std::vector<std::int64_t> twists_;
  bool infinite_ = false;
};

/// Formal left-to-right sum of rational tangles (NE/SE of each summand
/// welded to NW/SW of the next).
struct TangleSum {
  std::vector<RationalTangle> summands;

  explicit TangleSum(std::vector<RationalTangle> s) : summands(std::move(s)) {
    if (summands.empty()) throw TangleError("empty tangle sum");
  }
  TangleSum(std::initializer_list<RationalTangle> s)
      : TangleSum(std::vector<RationalTangle>(s)) {}
};

/// Numerator closure: weld NW to NE and SW to SE of the summed tangle.
inline PlanarDiagram numerator_closure(const TangleSum &s) {
  for (std::size_t i = 0; i < s.summands.size(); ++i)
    if (s.summands[i].is_infinite() && s.summands.size() > 1)
      throw TangleError("infinity tangle as summand " + std::to_string(i + 1) +
                        " of a sum has no well-defined closure");
  DiagramBuilder b;
  TangleEnds acc = s.summands[0].build(b);
  for (std::size_t i = 1; i < s.summands.size(); ++i) {
    TangleEnds nxt = s.summands[i].build(b);
    b.weld(acc.ne, nxt.nw);
    b.weld(acc.se, nxt.sw);
    acc.ne = nxt.ne;
    acc.se = nxt.se;
  }
  b.weld(acc.nw, acc.ne);
  b.weld(acc.sw, acc.se);
  return b.finish();
}

inline PlanarDiagram numerator_closure(const RationalTangle &t) {
  return numerator_closure(TangleSum{t});
}

/// Canonical label of a 2-bridge link b(p,q): q is reduced mod p and
/// replaced by min(q, q^-1 mod p).  Mirrors (q vs p-q) stay distinct.
/// Degenerate classes: p = 1 the unknot, p = 0 the 2-component unlink.
struct TwoBridgeClass {
  std::int64_t p = 0;
  std::int64_t q = 0;

  bool operator==(const TwoBridgeClass &o) const { return p == o.p && q == o.q; }
  bool operator!=(const TwoBridgeClass &o) const { return !(*this == o); }
  std::string str() const { return "b(" + std::to_string(p) + "," + std::to_string(q) + ")"; }
};

inline TwoBridgeClass two_bridge_classify(std::int64_t p, std::int64_t q) {
  if (p < 0) {
    p = -p;
    q = -q;
  }
  if (p == 0) return {0, 0};
  if (std::gcd(p, q < 0 ? -q : q) != 1) throw TangleError("two-bridge pair must be coprime");
  q %= p;
  if (q < 0) q += p;
  if (p == 1) return {1, 0};
  // q is now in 1..p-1; find q^-1 mod p
  std::int64_t inv = 0;
  for (std::int64_t x = 1; x < p; ++x)
    if ((x * q) % p == 1) {
      inv = x;
      break;
    }
  return {p, q < inv ? q : inv};
}

} // namespace dnalg
