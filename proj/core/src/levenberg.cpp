#include "fipeft/levenberg.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace fipeft {

namespace {

void build_normal_equations(const SampledSignal& s, const ModelParams& p,
                            Mat4& jtj, Vec4& jtr) {
  jtj = Mat4{};
  jtr = Vec4{};
  for (std::size_t i = 0; i < s.size(); ++i) {
    const std::array<double, 4> row = jacobian_row(p, s.x[i]);
    const double r = s.y[i] - evaluate_model(p, s.x[i]);
    for (int j = 0; j < 4; ++j) {
      jtr[j] += row[j] * r;
      for (int k = j; k < 4; ++k) jtj[j][k] += row[j] * row[k];
    }
  }
  for (int j = 1; j < 4; ++j)
    for (int k = 0; k < j; ++k) jtj[j][k] = jtj[k][j];
}

}  // namespace

Vec4 solve_damped_step(const Mat4& jtj, const Vec4& jtr, double mu) {
  Eigen::Matrix4d m;
  for (int r = 0; r < 4; ++r)
    for (int c = 0; c < 4; ++c) m(r, c) = jtj[r][c];
  for (int r = 0; r < 4; ++r) m(r, r) += mu;
  const Eigen::Vector4d b(jtr[0], jtr[1], jtr[2], jtr[3]);

  Eigen::JacobiSVD<Eigen::Matrix4d> svd(
      m, Eigen::ComputeFullU | Eigen::ComputeFullV);
  const Eigen::Vector4d& sv = svd.singularValues();
  if (!(sv(0) > 0.0)) return Vec4{};

  const double cutoff = 1e-12 * sv(0);
  Eigen::Vector4d t = svd.matrixU().transpose() * b;
  for (int i = 0; i < 4; ++i) t(i) = sv(i) >= cutoff ? t(i) / sv(i) : 0.0;
  const Eigen::Vector4d x = svd.matrixV() * t;
  return {x(0), x(1), x(2), x(3)};
}

std::pair<ModelParams, LMTrace> lm_fit(const SampledSignal& s,
                                       const ModelParams& init,
                                       const LMConfig& cfg) {
  check_signal(s);
  ModelParams p = init;
  double chi2 = chi_squared(p, s);
  if (!std::isfinite(chi2))
    throw std::runtime_error("lm_fit: cost is not finite at the start");

  Mat4 jtj;
  Vec4 jtr;
  build_normal_equations(s, p, jtj, jtr);
  double max_diag = 0.0;
  for (int j = 0; j < 4; ++j) max_diag = std::max(max_diag, jtj[j][j]);
  double mu = cfg.mu_init_scale * max_diag;

  LMTrace trace;
  for (int iter = 1; iter <= cfg.max_iterations; ++iter) {
    trace.iterations = iter;
    const Vec4 delta = solve_damped_step(jtj, jtr, mu);

    double largest = 0.0;
    double norm2 = 0.0;
    for (double d : delta) {
      largest = std::max(largest, std::abs(d));
      norm2 += d * d;
    }
    // The tolerance is checked before applying, so a vanishing proposal
    // terminates without disturbing the current optimum.
    if (largest < cfg.step_tol) {
      trace.converged = true;
      break;
    }

    const ModelParams trial{p.a1 + delta[0], p.a2 + delta[1],
                            p.a3 + delta[2], p.a4 + delta[3]};
    const double trial_chi2 = chi_squared(trial, s);
    const bool accepted = std::isfinite(trial_chi2) && trial_chi2 < chi2;
    const double mu_used = mu;
    if (accepted) {
      p = trial;
      chi2 = trial_chi2;
      mu *= cfg.mu_decrease;
      build_normal_equations(s, p, jtj, jtr);
    } else {
      mu *= cfg.mu_increase;
    }
    trace.steps.push_back({mu_used, chi2, std::sqrt(norm2), accepted});
  }

  if (p.a2 < 0.0) {
    p.a2 = -p.a2;
    p.a4 += std::numbers::pi;
  }
  p.a4 = wrap_phase(p.a4);
  return {p, trace};
}

}  // namespace fipeft
