#pragma once

#include <cstdint>

namespace syncav {

// SplitMix64 finalizer. All randomness in the toolkit is drawn as a pure
// function of (seed, index), so any coordinate of a realization can be
// evaluated out of order and still come out identical.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Independent sub-stream of a seed, keyed by a tag.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t tag) {
  return mix64(seed ^ mix64(tag));
}

// Uniform double in [0,1), keyed by (seed, index).
inline double unit_uniform(std::uint64_t seed, std::int64_t index) {
  const std::uint64_t h = mix64(mix64(seed) ^ static_cast<std::uint64_t>(index));
  return static_cast<double>(h >> 11) * 0x1.0p-53;
}

}  // namespace syncav
