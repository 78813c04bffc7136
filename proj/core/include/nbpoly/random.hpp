#pragma once

#include <cstdint>
#include <random>

namespace nbpoly {

/// Unbiased draw from [0, bound) via rejection sampling. std::mt19937_64 has
/// a standard-fixed sequence, so results are identical on every platform
/// (the standard distributions are not).
inline std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do {
    x = rng();
  } while (x >= limit);
  return x % bound;
}

/// Uniform integer in [lo, hi], inclusive.
inline int uniform_int(std::mt19937_64& rng, int lo, int hi) {
  return lo + static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(hi - lo) + 1));
}

}  // namespace nbpoly
