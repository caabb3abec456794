#ifndef FIPEFT_RNG_HPP
#define FIPEFT_RNG_HPP

#include <array>
#include <cmath>
#include <cstdint>

namespace fipeft {

/// xoshiro256++ generator seeded through splitmix64.
///
/// Synthetic data must be bit-for-bit reproducible across platforms and
/// standard-library versions, so no <random> engine or distribution is
/// used anywhere in the generation path. Uniform doubles take the top
/// 53 bits of the integer stream; Gaussian deviates come from the
/// Box-Muller transform with the log argument kept away from zero.
class Xoshiro256 {
 public:
  explicit Xoshiro256(std::uint64_t seed) {
    // splitmix64 expands the seed into the full 256-bit state; it cannot
    // produce the all-zero state xoshiro must avoid.
    std::uint64_t z = seed;
    for (auto& word : state_) {
      z += 0x9e3779b97f4a7c15ULL;
      std::uint64_t t = z;
      t = (t ^ (t >> 30)) * 0xbf58476d1ce4e5b9ULL;
      t = (t ^ (t >> 27)) * 0x94d049bb133111ebULL;
      word = t ^ (t >> 31);
    }
  }

  std::uint64_t next() {
    const std::uint64_t result = rotl(state_[0] + state_[3], 23) + state_[0];
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = rotl(state_[3], 45);
    return result;
  }

  /// Uniform double in [0, 1).
  double uniform01() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform double in [lo, hi).
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  /// Standard normal deviate. Each Box-Muller evaluation yields a pair;
  /// the second value is cached for the following call.
  double gaussian() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    // u1 lies in (0, 1] so log(u1) is finite.
    const double u1 = (static_cast<double>(next() >> 11) + 1.0) * 0x1.0p-53;
    const double u2 = uniform01();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 6.283185307179586476925286766559 * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  static std::uint64_t rotl(std::uint64_t v, int k) {
    return (v << k) | (v >> (64 - k));
  }

  std::array<std::uint64_t, 4> state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace fipeft

#endif  // FIPEFT_RNG_HPP
