#pragma once

#include <cmath>
#include <cstdint>

namespace recover {

// Counter-based generator: every draw is a pure function of
// (seed, stream, counter), so noise fields are reproducible regardless of
// evaluation order and can be regenerated per (row, column) position.
// The mixer is the splitmix64 finalizer.

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t stream)
      : key_(splitmix64(splitmix64(seed) ^ (stream * 0xD6E8FEB86659FD93ULL))) {}

  /// Uniform in [0, 1), 53-bit resolution.
  double uniform(std::uint64_t counter) const {
    const std::uint64_t bits = splitmix64(key_ + counter * 0x9E3779B97F4A7C15ULL);
    return static_cast<double>(bits >> 11) * 0x1.0p-53;
  }

  /// Integer uniform in [lo, hi] inclusive.
  long uniform_int(std::uint64_t counter, long lo, long hi) const {
    return lo + static_cast<long>(uniform(counter) * static_cast<double>(hi - lo + 1));
  }

  /// Standard normal via Box-Muller on counters (2c, 2c+1).
  double gaussian(std::uint64_t counter) const {
    const double u1 = uniform(2 * counter);
    const double u2 = uniform(2 * counter + 1);
    // Map u1 away from 0 so the log is finite.
    const double r = std::sqrt(-2.0 * std::log(1.0 - u1));
    return r * std::cos(2.0 * M_PI * u2);
  }

 private:
  std::uint64_t key_;
};

}  // namespace recover
