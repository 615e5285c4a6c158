#pragma once

#include "dnalg/knot_table.hpp"
#include "dnalg/tangle.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace dnalg {

/// One processive round: the closed product N(O + i*R) and its
/// identification.
struct TangleProduct {
  int round = 0;
  Fraction fraction;
  Identification id;
};

/// Identify N(O + i*R) for i = 1..rounds, R the integer tangle (r).
inline std::vector<TangleProduct> processive_products(const RationalTangle &O, std::int64_t r,
                                                      int rounds) {
  std::vector<TangleProduct> out;
  for (int i = 1; i <= rounds; ++i) {
    TangleSum s{O, RationalTangle::integer(static_cast<std::int64_t>(i) * r)};
    PlanarDiagram d = numerator_closure(s);
    TangleProduct p;
    p.round = i;
    p.fraction = O.fraction() + Fraction(static_cast<std::int64_t>(i) * r, 1);
    p.id = identify_diagram(d);
    out.push_back(std::move(p));
  }
  return out;
}

namespace detail {

// mirror-insensitive 2-bridge class comparison
inline bool same_class_up_to_mirror(const TwoBridgeClass &a, const TwoBridgeClass &b) {
  if (a.p != b.p) return false;
  if (a == b) return true;
  if (a.p <= 1) return false;
  return b == two_bridge_classify(a.p, a.p - a.q);
}

// expected 2-bridge class for a table name (base name, chirality stripped)
inline bool expected_class(const std::string &full, TwoBridgeClass &out) {
  std::string base = full;
  if (auto pos = base.find(" ("); pos != std::string::npos) base = base.substr(0, pos);
  if (base == "unknot") {
    out = {1, 0};
    return true;
  }
  if (base == "2-component unlink") {
    out = {0, 0};
    return true;
  }
  for (const auto &s : two_bridge_specs())
    if (base == s.name) {
      out = two_bridge_classify(s.p, s.q);
      return true;
    }
  return false;
}

} // namespace detail

struct ProcessiveCandidate {
  RationalTangle tangle;
  Fraction fraction;
};

/// Exhaustive search over twist vectors (length <= max_len, |entry| <=
/// max_entry) for tangles O whose processive series under R = (r) matches
/// the observed identification names exactly.  One candidate per fraction,
/// represented by its lexicographically smallest vector, sorted by fraction.
inline std::vector<ProcessiveCandidate> solve_processive(const std::vector<std::string> &observed,
                                                         std::int64_t r, int max_len,
                                                         std::int64_t max_entry) {
  if (observed.empty()) throw TangleError("no observed products");
  std::map<Fraction, std::vector<std::int64_t>> by_fraction;
  std::vector<std::int64_t> v;
  auto enumerate = [&](auto &&self, int remaining) -> void {
    if (!v.empty()) {
      Fraction f = RationalTangle(v).fraction();
      auto it = by_fraction.find(f);
      if (it == by_fraction.end() || v < it->second) by_fraction[f] = v;
    }
    if (remaining == 0) return;
    for (std::int64_t e = -max_entry; e <= max_entry; ++e) {
      v.push_back(e);
      self(self, remaining - 1);
      v.pop_back();
    }
  };
  enumerate(enumerate, max_len);

  std::vector<ProcessiveCandidate> out;
  for (const auto &[f, vec] : by_fraction) {
    // cheap prefilter on 2-bridge classes, ignoring chirality
    bool plausible = true;
    for (std::size_t i = 0; i < observed.size() && plausible; ++i) {
      TwoBridgeClass want{};
      if (!detail::expected_class(observed[i], want)) continue;
      Fraction fi = f + Fraction(static_cast<std::int64_t>(i + 1) * r, 1);
      if (fi.is_infinite()) {
        plausible = false;
        break;
      }
      std::int64_t p = fi.p < 0 ? -fi.p : fi.p;
      TwoBridgeClass got = p <= 1 ? TwoBridgeClass{p == 0 ? 0 : 1, 0}
                                  : two_bridge_classify(p, ((fi.q % p) + p) % p);
      if (!detail::same_class_up_to_mirror(want, got)) plausible = false;
    }
    if (!plausible) continue;
    RationalTangle cand(vec);
    auto series = processive_products(cand, r, static_cast<int>(observed.size()));
    bool match = true;
    for (std::size_t i = 0; i < observed.size(); ++i)
      if (series[i].id.str() != observed[i]) {
        match = false;
        break;
      }
    if (match) out.push_back({cand, f});
  }
  return out;
}

} // namespace dnalg
