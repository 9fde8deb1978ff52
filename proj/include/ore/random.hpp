#pragma once

#include <cstdint>
#include <random>

namespace ore {

using Rng = std::mt19937_64;

// std::uniform_int_distribution is implementation-defined; reports must be
// reproducible across standard libraries, so sampling is done by hand.
inline std::int64_t uniform_int(Rng& rng, std::int64_t lo, std::int64_t hi) {
  const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(rng());
  return lo + static_cast<std::int64_t>(rng() % span);
}

inline bool coin(Rng& rng) { return (rng() >> 63) != 0; }

}  // namespace ore
