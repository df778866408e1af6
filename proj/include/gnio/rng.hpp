#pragma once

#include <cmath>
#include <cstdint>

namespace gnio {

// SplitMix64 (Steele/Lea/Flood): tiny, fast, full-period, and trivially
// splittable.  Every generator is a pure function of its 64-bit seed, so
// instances are reproducible across platforms; derived streams for distinct
// purposes (data / weights / lambda / mu) come from stream(), which hashes
// (seed, purpose) through the output mix so the streams do not overlap.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : seed_(seed), state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  // Independent generator for one purpose; depends only on the original
  // seed, never on how much this generator has been consumed.
  SplitMix64 stream(std::uint64_t purpose) const {
    return SplitMix64(mix(seed_ ^ (0x9E3779B97F4A7C15ull * (purpose + 1))));
  }

  // Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  // Box-Muller; caches the second deviate of each pair.
  double gaussian(double mean, double sigma) {
    if (have_spare_) {
      have_spare_ = false;
      return mean + sigma * spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();  // log(0) guard
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(theta);
    have_spare_ = true;
    return mean + sigma * r * std::cos(theta);
  }

 private:
  static std::uint64_t mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  std::uint64_t seed_;
  std::uint64_t state_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace gnio
