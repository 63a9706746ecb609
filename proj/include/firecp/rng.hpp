// Seedable RNG for the simulation engine: xoshiro256++ with splitmix64
// seeding, plus the replicate stream derivation used by all estimators.
//
// Replicate streams: replicate r of a batch with base seed s runs on
//   stream_seed(s, r) = mix64(s + (r + 1) * 0x9E3779B97F4A7C15)
// where mix64 is the splitmix64 finalizer. This makes the replicate->seed
// map independent of worker count and scheduling.

#ifndef FIRECP_RNG_HPP
#define FIRECP_RNG_HPP

#include <cmath>
#include <cstdint>

namespace firecp {

// splitmix64 finalizer (Vigna / Steele et al.).
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ull;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline std::uint64_t stream_seed(std::uint64_t base_seed, std::uint64_t index) {
  return mix64(base_seed + (index + 1) * 0x9E3779B97F4A7C15ull);
}

// xoshiro256++ (Blackman & Vigna, 2019). State seeded through splitmix64
// so any 64-bit seed, including 0, gives a valid nonzero state.
class Rng {
 public:
  explicit Rng(std::uint64_t seed = 0) { reseed(seed); }

  void reseed(std::uint64_t seed) {
    std::uint64_t x = seed;
    for (auto& w : s_) {
      x += 0x9E3779B97F4A7C15ull;
      std::uint64_t z = x;
      z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
      z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
      w = z ^ (z >> 31);
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(s_[0] + s_[3], 23) + s_[0];
    const std::uint64_t t = s_[1] << 17;
    s_[2] ^= s_[0];
    s_[3] ^= s_[1];
    s_[1] ^= s_[2];
    s_[0] ^= s_[3];
    s_[2] ^= t;
    s_[3] = rotl(s_[3], 45);
    return result;
  }

  // Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Uniform integer in [0, n). Lemire's multiply-shift with rejection.
  std::uint32_t below(std::uint32_t n) {
    std::uint64_t m = static_cast<std::uint64_t>(static_cast<std::uint32_t>(next())) * n;
    auto lo = static_cast<std::uint32_t>(m);
    if (lo < n) {
      const std::uint32_t threshold = (0u - n) % n;
      while (lo < threshold) {
        m = static_cast<std::uint64_t>(static_cast<std::uint32_t>(next())) * n;
        lo = static_cast<std::uint32_t>(m);
      }
    }
    return static_cast<std::uint32_t>(m >> 32);
  }

  // Exponential(rate) waiting time; -log(1-u) never sees log(0).
  double exponential(double rate) { return -std::log1p(-uniform()) / rate; }

 private:
  static std::uint64_t rotl(std::uint64_t x, int k) {
    return (x << k) | (x >> (64 - k));
  }
  std::uint64_t s_[4];
};

}  // namespace firecp

#endif  // FIRECP_RNG_HPP
