#pragma once

#include "dnalg/word.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace dnalg {

/// Deterministic word sampler for property suites.  Raw engine draws are
/// reduced by modulus so sequences are identical across platforms.
class WordSampler {
public:
  explicit WordSampler(std::uint32_t seed) : rng_(seed) {}

  std::uint32_t next(std::uint32_t bound) { return rng_() % bound; }

  /// Word of the given length; letters are sigma/sigma_inv (and e when
  /// allow_e) with uniform random index.
  GenWord word(int strands, int length, bool allow_e) {
    std::vector<Generator> ls;
    ls.reserve(length);
    for (int i = 0; i < length; ++i) {
      int idx = 1 + static_cast<int>(next(strands - 1));
      switch (next(allow_e ? 3 : 2)) {
      case 0: ls.push_back(Generator::sigma(idx)); break;
      case 1: ls.push_back(Generator::sigma_inv(idx)); break;
      default: ls.push_back(Generator::e(idx)); break;
      }
    }
    return GenWord(strands, std::move(ls));
  }

private:
  std::mt19937 rng_;
};

} // namespace dnalg
