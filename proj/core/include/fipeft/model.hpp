#ifndef FIPEFT_MODEL_HPP
#define FIPEFT_MODEL_HPP

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace fipeft {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// Parameters of the cosine model y = a1 + a2 * cos(a3 * x + a4).
struct ModelParams {
  double a1 = 0.0;  ///< offset
  double a2 = 0.0;  ///< amplitude
  double a3 = 0.0;  ///< angular frequency, rad per x unit
  double a4 = 0.0;  ///< phase, rad

  /// Ordinary frequency a3 / 2pi.
  double frequency() const { return a3 / kTwoPi; }
};

/// Observations (x_i, y_i) with x non-decreasing. Sampling may be uneven.
struct SampledSignal {
  std::vector<double> x;
  std::vector<double> y;

  std::size_t size() const { return x.size(); }
  double span() const { return x.back() - x.front(); }
};

/// Throws std::invalid_argument unless x and y have equal length >= 2 and
/// x is non-decreasing.
void check_signal(const SampledSignal& s);

double evaluate_model(const ModelParams& p, double x);

/// Sum of squared residuals of s against the model.
double chi_squared(const ModelParams& p, const SampledSignal& s);

/// Partial derivatives of the model value at x with respect to (a1,a2,a3,a4).
std::array<double, 4> jacobian_row(const ModelParams& p, double x);

/// Signal-to-noise ratio in dB for amplitude a2 against Gaussian noise of
/// standard deviation sigma: 10*log10(0.5*a2^2 / sigma^2).
/// Throws std::domain_error if sigma <= 0.
double snr_db(double a2, double sigma);

/// Wraps an angle into [0, 2pi).
double wrap_phase(double phi);

/// Result of one estimation run: the starting point produced by an
/// initializer and the parameters after refinement.
struct FitResult {
  ModelParams initial;
  ModelParams refined;
  double chi2 = 0.0;              ///< residual of the refined parameters
  int iterations = 0;             ///< refinement iterations spent
  std::uint64_t init_ns = 0;      ///< wall time of the initializer
  double frequency = 0.0;         ///< refined.a3 / 2pi
};

}  // namespace fipeft

#endif  // FIPEFT_MODEL_HPP
