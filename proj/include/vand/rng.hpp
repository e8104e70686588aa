#pragma once

#include <cmath>
#include <cstdint>

namespace vand {

// SplitMix64 (Steele, Lea, Vigna): a tiny splittable generator.  Each
// experiment trial gets its own stream keyed by (seed, trial index), so a
// sweep produces identical output no matter how trials are scheduled.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t s = 0) : state(s) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0,1) with 53 random bits.
  double uniform() { return (double)(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Log-uniform on [lo, hi], lo > 0.
  double log_uniform(double lo, double hi) {
    return std::exp(uniform(std::log(lo), std::log(hi)));
  }

  // Uniform integer in [0, m).
  std::uint64_t below(std::uint64_t m) { return next() % m; }
};

// Stream for one trial: decorrelates (seed, trial) pairs by running the
// mixing function over both words.
inline SplitMix64 trial_stream(std::uint64_t seed, std::uint64_t trial) {
  SplitMix64 g(seed ^ (0xd1342543de82ef95ULL * (trial + 1)));
  std::uint64_t s = g.next();
  return SplitMix64(s);
}

inline const char* rng_name() { return "splitmix64"; }

}  // namespace vand
