#include "fipeft/synth.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "fipeft/rng.hpp"

namespace fipeft {

std::size_t SynthConfig::sample_count() const {
  const double f = truth.frequency();
  if (f <= 0.0) return 0;
  const double n = std::round(periods * sample_rate / f);
  return n < 0.0 ? 0 : static_cast<std::size_t>(n);
}

double sigma_for_snr(double a2, double target_snr_db) {
  if (a2 == 0.0) throw std::domain_error("sigma_for_snr: amplitude is zero");
  return std::sqrt(0.5 * a2 * a2 / std::pow(10.0, target_snr_db / 10.0));
}

SampledSignal generate(const SynthConfig& cfg) {
  if (cfg.sample_rate <= 0.0)
    throw std::invalid_argument("generate: sample_rate must be positive");
  if (cfg.periods <= 0.0)
    throw std::invalid_argument("generate: periods must be positive");
  if (cfg.jitter < 0.0 || cfg.jitter >= 0.5)
    throw std::invalid_argument("generate: jitter must lie in [0, 0.5)");
  if (cfg.sigma < 0.0)
    throw std::invalid_argument("generate: sigma must be non-negative");
  if (cfg.truth.a3 <= 0.0)
    throw std::invalid_argument("generate: truth.a3 must be positive");

  const std::size_t n = cfg.sample_count();
  if (n < 2)
    throw std::invalid_argument("generate: recipe yields fewer than two samples");

  Xoshiro256 rng(cfg.seed);
  const double spacing = 1.0 / cfg.sample_rate;
  const double reach = cfg.jitter * spacing;

  SampledSignal s;
  s.x.resize(n);
  s.y.resize(n);
  for (std::size_t i = 0; i < n; ++i)
    s.x[i] = static_cast<double>(i) * spacing + rng.uniform(-reach, reach);
  std::sort(s.x.begin(), s.x.end());
  for (std::size_t i = 0; i < n; ++i)
    s.y[i] = evaluate_model(cfg.truth, s.x[i]) + cfg.sigma * rng.gaussian();
  return s;
}

}  // namespace fipeft
