#ifndef FIPEFT_LOMB_SCARGLE_HPP
#define FIPEFT_LOMB_SCARGLE_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fipeft/model.hpp"

namespace fipeft {

/// Frequency grid spanning half the smallest detectable frequency up to the
/// equidistant-sampling maximum, with fivefold oversampling: f_min = 0.5/T,
/// f_max = N/T, delta_f = 1/(5T) for T = x_N - x_1. Roughly 5N points.
struct FrequencyGrid {
  double f_min = 0.0;
  double f_max = 0.0;
  double delta_f = 0.0;
  std::size_t count = 0;

  double frequency(std::size_t k) const {
    return f_min + static_cast<double>(k) * delta_f;
  }
};

struct Periodogram {
  std::vector<double> frequencies;
  std::vector<double> power;
  std::size_t peak_index = 0;

  double peak_frequency() const { return frequencies[peak_index]; }
};

/// Throws std::domain_error when x_N = x_1.
FrequencyGrid frequency_grid(const SampledSignal& s);

/// Spectral power at angular frequency omega for observations centered by
/// a1_hat. Terms whose denominator falls below 1e-12 contribute zero.
double power_at(const SampledSignal& s, double omega, double a1_hat);

/// Power over the full grid; peak_index marks the maximum, ties broken
/// toward the lower frequency.
Periodogram compute_periodogram(const SampledSignal& s, double a1_hat);

/// Grid argmax without storing the periodogram. When `work` is given, it
/// accumulates the number of inner-loop iterations (2N per frequency) for
/// complexity instrumentation.
double peak_frequency(const SampledSignal& s, double a1_hat,
                      std::uint64_t* work = nullptr);

}  // namespace fipeft

#endif  // FIPEFT_LOMB_SCARGLE_HPP
