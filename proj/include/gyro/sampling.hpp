#pragma once

#include <cstdint>
#include <random>

namespace gyro {

/// SplitMix64 step. Mixes a user seed with a stream index so that every sample
/// owns an independent generator regardless of how work is split across
/// threads.
constexpr std::uint64_t deriveSeed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::mt19937_64 streamEngine(std::uint64_t seed, std::uint64_t stream) {
  return std::mt19937_64(deriveSeed(seed, stream));
}

}  // namespace gyro
