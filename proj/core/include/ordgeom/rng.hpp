#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace ordgeom {

/// The repository PRNG: std::mt19937_64, whose output sequence is fixed by
/// the standard, drawn through rejection sampling below. Nothing in the
/// library draws randomness any other way, so every seeded run replays
/// identically on any platform.
using rng = std::mt19937_64;

inline rng seeded_rng(std::uint64_t seed) { return rng{seed}; }

/// Unbiased draw from [0, bound) by rejection.
inline std::uint64_t uniform_below(rng& gen, std::uint64_t bound) {
  if (bound == 0) return 0;
  const std::uint64_t limit = std::uint64_t(-1) - std::uint64_t(-1) % bound;
  std::uint64_t draw;
  do {
    draw = gen();
  } while (draw >= limit);
  return draw % bound;
}

/// Signed draw from [lo, hi] inclusive.
inline std::int64_t uniform_int(rng& gen, std::int64_t lo, std::int64_t hi) {
  return lo + static_cast<std::int64_t>(
                  uniform_below(gen, static_cast<std::uint64_t>(hi - lo) + 1));
}

/// Fisher-Yates shuffle written out so the permutation depends only on the
/// generator sequence, not on a library's unspecified std::shuffle.
template <typename T>
void deterministic_shuffle(std::vector<T>& v, rng& gen) {
  for (std::size_t i = v.size(); i > 1; --i) {
    const std::size_t j = static_cast<std::size_t>(uniform_below(gen, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace ordgeom
