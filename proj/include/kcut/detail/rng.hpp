#pragma once

#include <cstdint>
#include <random>

namespace kcut::detail {

// Unbiased draw from [0, n) via rejection. mt19937_64 output is fully
// specified by the standard, and this avoids the implementation-defined
// std::uniform_int_distribution, so streams are identical across platforms.
inline std::uint64_t rand_below(std::mt19937_64& rng, std::uint64_t n) {
  if (n <= 1) return 0;
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - (std::numeric_limits<std::uint64_t>::max() % n);
  for (;;) {
    std::uint64_t r = rng();
    if (r < limit) return r % n;
  }
}

}  // namespace kcut::detail
