#ifndef MECSIM_RNG_HPP
#define MECSIM_RNG_HPP

#include <cmath>
#include <cstdint>

// Counter-based random number utilities. Every sample is a pure function of
// (seed, stream id, indices), so traces are reproducible bit-for-bit and a
// stream can be read in any order. Adding a base station or a user opens new
// keys without shifting anybody else's stream.

namespace mecsim::rng {

inline constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

// splitmix64 finalizer
constexpr std::uint64_t mix64(std::uint64_t z) {
  z += kGolden;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Derives an independent key from a seed, a stream tag and two indices by
// absorbing them sequentially through the mixer.
constexpr std::uint64_t derive(std::uint64_t seed, std::uint64_t tag,
                               std::uint64_t a = 0, std::uint64_t b = 0) {
  std::uint64_t k = mix64(seed ^ (tag * kGolden));
  k = mix64(k ^ (a * 0xd1342543de82ef95ULL));
  return mix64(k ^ (b * 0xaf251af3b0f025b5ULL));
}

// Uniform double in the open interval (0, 1).
inline double u01(std::uint64_t key) {
  return (static_cast<double>(key >> 11) + 0.5) * 0x1.0p-53;
}

// Unit-mean exponential. Strictly positive for every key.
inline double exp1(std::uint64_t key) { return -std::log1p(-u01(key)); }

inline bool bernoulli(std::uint64_t key, double p) { return u01(key) < p; }

inline double uniform(std::uint64_t key, double lo, double hi) {
  return lo + (hi - lo) * u01(key);
}

}  // namespace mecsim::rng

#endif  // MECSIM_RNG_HPP
