#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace risadapt {

// SplitMix64 finalizer. All derived seeds in this project go through this mix
// so that related inputs (seed ^ index) give decorrelated engine states.
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ull;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
  return z ^ (z >> 31);
}

// Engine for item `index` of a run seeded with `seed`. This is the documented
// per-record seeding scheme: mt19937_64(mix64(seed ^ index)). It makes
// generation independent of worker count and schedule.
inline std::mt19937_64 record_rng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(mix64(seed ^ index));
}

// std::uniform_* distributions are implementation-defined; these helpers pin
// the exact bit-level mapping so artifacts are reproducible by contract.
inline double uniform01(std::mt19937_64& g) {
  return static_cast<double>(g() >> 11) * 0x1.0p-53;  // [0, 1)
}

inline double uniform(std::mt19937_64& g, double lo, double hi) {
  return lo + (hi - lo) * uniform01(g);
}

inline int fair_bit(std::mt19937_64& g) { return static_cast<int>(g() >> 63); }

// Unbiased-enough bounded draw (Lemire multiply-shift; bias < 2^-64).
inline std::uint64_t bounded(std::mt19937_64& g, std::uint64_t n) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(g()) * n) >> 64);
}

template <class T>
void shuffle_vec(std::vector<T>& v, std::mt19937_64& g) {
  for (std::size_t i = v.size(); i > 1; --i) {
    std::size_t j = static_cast<std::size_t>(bounded(g, i));
    std::swap(v[i - 1], v[j]);
  }
}

}  // namespace risadapt
