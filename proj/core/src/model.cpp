#include "fipeft/model.hpp"

#include <cmath>
#include <stdexcept>

namespace fipeft {

void check_signal(const SampledSignal& s) {
  if (s.x.size() != s.y.size())
    throw std::invalid_argument("signal: x and y lengths differ");
  if (s.x.size() < 2)
    throw std::invalid_argument("signal: need at least two samples");
  for (std::size_t i = 1; i < s.x.size(); ++i)
    if (s.x[i] < s.x[i - 1])
      throw std::invalid_argument("signal: x must be non-decreasing");
}

double evaluate_model(const ModelParams& p, double x) {
  return p.a1 + p.a2 * std::cos(p.a3 * x + p.a4);
}

double chi_squared(const ModelParams& p, const SampledSignal& s) {
  double sum = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    const double r = s.y[i] - evaluate_model(p, s.x[i]);
    sum += r * r;
  }
  return sum;
}

std::array<double, 4> jacobian_row(const ModelParams& p, double x) {
  const double arg = p.a3 * x + p.a4;
  const double s = std::sin(arg);
  return {1.0, std::cos(arg), -p.a2 * x * s, -p.a2 * s};
}

double snr_db(double a2, double sigma) {
  if (sigma <= 0.0) throw std::domain_error("snr_db: sigma must be positive");
  return 10.0 * std::log10(0.5 * a2 * a2 / (sigma * sigma));
}

double wrap_phase(double phi) {
  double w = std::fmod(phi, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  // fmod keeps |w| < 2pi, but adding 2pi to a tiny negative value can
  // round back up to exactly 2pi.
  if (w >= kTwoPi) w = 0.0;
  return w;
}

}  // namespace fipeft
