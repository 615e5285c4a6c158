#pragma once

#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace dnalg {

/// Exact integer-coefficient Laurent polynomial in one variable A.
/// Zero coefficients are never stored, so equality is map equality.
class LaurentPoly {
public:
  using Coeffs = std::map<int, std::int64_t>; // exponent -> coefficient

  LaurentPoly() = default;
  explicit LaurentPoly(std::int64_t c) {
    if (c != 0) coeffs_[0] = c;
  }
  static LaurentPoly monomial(std::int64_t c, int exp) {
    LaurentPoly p;
    if (c != 0) p.coeffs_[exp] = c;
    return p;
  }

  const Coeffs &coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }

  std::int64_t coeff(int exp) const {
    auto it = coeffs_.find(exp);
    return it == coeffs_.end() ? 0 : it->second;
  }

  LaurentPoly &operator+=(const LaurentPoly &o) {
    for (auto &[e, c] : o.coeffs_) add_term(e, c);
    return *this;
  }
  LaurentPoly &operator-=(const LaurentPoly &o) {
    for (auto &[e, c] : o.coeffs_) add_term(e, -c);
    return *this;
  }
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly &b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly &b) { return a -= b; }

  friend LaurentPoly operator*(const LaurentPoly &a, const LaurentPoly &b) {
    LaurentPoly r;
    for (auto &[ea, ca] : a.coeffs_)
      for (auto &[eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
    return r;
  }
  LaurentPoly &operator*=(const LaurentPoly &o) { return *this = *this * o; }

  bool operator==(const LaurentPoly &o) const { return coeffs_ == o.coeffs_; }
  bool operator!=(const LaurentPoly &o) const { return !(*this == o); }
  bool operator<(const LaurentPoly &o) const { return coeffs_ < o.coeffs_; }

  /// Substitute A -> A^-1.
  LaurentPoly mirror() const {
    LaurentPoly r;
    for (auto &[e, c] : coeffs_) r.coeffs_[-e] = c;
    return r;
  }

  /// Multiply by (-A)^k (k may be negative).
  LaurentPoly times_minus_A_pow(int k) const {
    LaurentPoly r;
    std::int64_t sign = (k % 2 == 0) ? 1 : -1;
    for (auto &[e, c] : coeffs_) r.coeffs_[e + k] = sign * c;
    return r;
  }

  /// The bracket loop weight delta = -A^2 - A^-2.
  static LaurentPoly delta() {
    LaurentPoly d;
    d.coeffs_[2] = -1;
    d.coeffs_[-2] = -1;
    return d;
  }

  static LaurentPoly delta_pow(int k) {
    LaurentPoly r(1);
    LaurentPoly d = delta();
    for (int i = 0; i < k; ++i) r *= d;
    return r;
  }

  /// Canonical text, exponents descending: "-A^-4 + A^-12" style.
  std::string str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
      auto [e, c] = *it;
      std::int64_t mag = c < 0 ? -c : c;
      if (first) {
        if (c < 0) os << "-";
        first = false;
      } else {
        os << (c < 0 ? " - " : " + ");
      }
      if (mag != 1 || e == 0) os << mag;
      if (e != 0) {
        if (mag != 1) os << "*";
        os << "A";
        if (e != 1) os << "^" << e;
      }
    }
    return os.str();
  }

private:
  void add_term(int e, std::int64_t c) {
    auto it = coeffs_.find(e);
    if (it == coeffs_.end()) {
      if (c != 0) coeffs_[e] = c;
    } else {
      it->second += c;
      if (it->second == 0) coeffs_.erase(it);
    }
  }

  Coeffs coeffs_;
};

} // namespace dnalg
