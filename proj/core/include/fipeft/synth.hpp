#ifndef FIPEFT_SYNTH_HPP
#define FIPEFT_SYNTH_HPP

#include <cstddef>
#include <cstdint>

#include "fipeft/model.hpp"

namespace fipeft {

/// Recipe for a synthetic record: a cosine sampled at an average rate with
/// jittered timestamps and additive Gaussian noise.
struct SynthConfig {
  ModelParams truth{10.0, 5.0, kTwoPi * 0.25, 1.0};
  double periods = 10.0;      ///< record length in oscillation periods
  double sample_rate = 20.0;  ///< average samples per x unit
  double sigma = 0.0;         ///< noise standard deviation
  std::uint64_t seed = 0;
  double jitter = 0.3;        ///< timestamp perturbation, fraction of the
                              ///< nominal spacing; must stay below 0.5

  /// Number of samples, round(periods * sample_rate / frequency).
  std::size_t sample_count() const;
};

/// Noise level that realizes a target SNR for amplitude a2.
/// Throws std::domain_error if a2 == 0.
double sigma_for_snr(double a2, double target_snr_db);

/// Draws a record from the recipe. Timestamps are the even grid
/// x_i = i / sample_rate plus a uniform offset within +-jitter/sample_rate,
/// sorted ascending; jitter < 0.5 keeps them strictly increasing.
/// Throws std::invalid_argument on non-positive rates or periods, jitter
/// outside [0, 0.5), negative sigma, or a recipe yielding fewer than two
/// samples.
SampledSignal generate(const SynthConfig& cfg);

}  // namespace fipeft

#endif  // FIPEFT_SYNTH_HPP
