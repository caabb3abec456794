#include "fipeft/lomb_scargle.hpp"

#include <cmath>
#include <stdexcept>

namespace fipeft {

FrequencyGrid frequency_grid(const SampledSignal& s) {
  check_signal(s);
  const double span = s.span();
  if (span <= 0.0)
    throw std::domain_error("frequency_grid: degenerate x span");
  FrequencyGrid g;
  g.f_min = 0.5 / span;
  g.f_max = static_cast<double>(s.size()) / span;
  g.delta_f = 1.0 / (5.0 * span);
  g.count =
      static_cast<std::size_t>(std::floor((g.f_max - g.f_min) / g.delta_f)) + 1;
  return g;
}

double power_at(const SampledSignal& s, double omega, double a1_hat) {
  const std::size_t n = s.size();

  double sin2 = 0.0;
  double cos2 = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    sin2 += std::sin(2.0 * omega * s.x[i]);
    cos2 += std::cos(2.0 * omega * s.x[i]);
  }
  const double phi = 0.5 * std::atan2(sin2, cos2);

  double yc = 0.0;
  double cc = 0.0;
  double ys = 0.0;
  double ss = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const double arg = omega * s.x[i] - phi;
    const double c = std::cos(arg);
    const double sn = std::sin(arg);
    const double yt = s.y[i] - a1_hat;
    yc += yt * c;
    cc += c * c;
    ys += yt * sn;
    ss += sn * sn;
  }

  double p = 0.0;
  if (cc >= 1e-12) p += yc * yc / cc;
  if (ss >= 1e-12) p += ys * ys / ss;
  return 0.5 * p;
}

Periodogram compute_periodogram(const SampledSignal& s, double a1_hat) {
  const FrequencyGrid g = frequency_grid(s);
  Periodogram out;
  out.frequencies.resize(g.count);
  out.power.resize(g.count);
  double best = -1.0;
  for (std::size_t k = 0; k < g.count; ++k) {
    const double f = g.frequency(k);
    const double p = power_at(s, kTwoPi * f, a1_hat);
    out.frequencies[k] = f;
    out.power[k] = p;
    if (p > best) {
      best = p;
      out.peak_index = k;
    }
  }
  return out;
}

double peak_frequency(const SampledSignal& s, double a1_hat,
                      std::uint64_t* work) {
  const FrequencyGrid g = frequency_grid(s);
  double best_f = g.f_min;
  double best_p = -1.0;
  for (std::size_t k = 0; k < g.count; ++k) {
    const double f = g.frequency(k);
    const double p = power_at(s, kTwoPi * f, a1_hat);
    // Strict comparison keeps the lowest frequency on ties.
    if (p > best_p) {
      best_p = p;
      best_f = f;
    }
  }
  if (work) *work += static_cast<std::uint64_t>(g.count) * 2u * s.size();
  return best_f;
}

}  // namespace fipeft
