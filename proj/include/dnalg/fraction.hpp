#pragma once

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace dnalg {

/// Extended rational p/q in lowest terms with q >= 0; q == 0 represents
/// the point at infinity (with p == 1).
struct Fraction {
  std::int64_t p = 0;
  std::int64_t q = 1;

  Fraction() = default;
  Fraction(std::int64_t num, std::int64_t den) : p(num), q(den) { normalize(); }

  static Fraction infinity() {
    Fraction f;
    f.p = 1;
    f.q = 0;
    return f;
  }

  bool is_infinite() const { return q == 0; }

  void normalize() {
    if (q == 0) {
      p = 1;
      return;
    }
    if (q < 0) {
      p = -p;
      q = -q;
    }
    std::int64_t g = std::gcd(p < 0 ? -p : p, q);
    if (g > 1) {
      p /= g;
      q /= g;
    }
    if (p == 0) q = 1;
  }

  friend Fraction operator+(const Fraction &a, const Fraction &b) {
    if (a.is_infinite() || b.is_infinite()) return infinity();
    return Fraction(a.p * b.q + b.p * a.q, a.q * b.q);
  }

  /// 1/x, with 1/0 = infinity and 1/infinity = 0.
  Fraction reciprocal() const {
    if (is_infinite()) return Fraction(0, 1);
    if (p == 0) return infinity();
    return Fraction(q, p);
  }

  bool operator==(const Fraction &o) const { return p == o.p && q == o.q; }
  bool operator!=(const Fraction &o) const { return !(*this == o); }
  bool operator<(const Fraction &o) const {
    if (is_infinite() || o.is_infinite()) return !is_infinite() && o.is_infinite();
    return p * o.q < o.p * q;
  }

  std::string str() const {
    if (is_infinite()) return "inf";
    if (q == 1) return std::to_string(p);
    return std::to_string(p) + "/" + std::to_string(q);
  }
};

} // namespace dnalg
