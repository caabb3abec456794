#ifndef FIPEFT_LEVENBERG_HPP
#define FIPEFT_LEVENBERG_HPP

#include <array>
#include <utility>
#include <vector>

#include "fipeft/model.hpp"

namespace fipeft {

using Vec4 = std::array<double, 4>;
using Mat4 = std::array<Vec4, 4>;

struct LMConfig {
  double mu_init_scale = 0.001;  ///< mu0 = scale * max diag(JtJ)
  double mu_decrease = 0.125;    ///< applied after an accepted step
  double mu_increase = 9.0;      ///< applied after a rejected step
  double step_tol = 1e-13;       ///< stop when every |delta_j| falls below
  int max_iterations = 500;
};

struct LMStep {
  double mu = 0.0;        ///< damping used to compute this step
  double chi2 = 0.0;      ///< cost of the current parameters after the decision
  double step_norm = 0.0; ///< Euclidean norm of the proposed step
  bool accepted = false;
};

struct LMTrace {
  std::vector<LMStep> steps;
  int iterations = 0;      ///< outer iterations spent, including the final check
  bool converged = false;  ///< step tolerance reached within the cap
};

/// Solves (JtJ + mu*I) delta = Jtr through an SVD pseudo-inverse; singular
/// values below 1e-12 of the largest are treated as zero. An all-zero
/// system yields a zero step.
Vec4 solve_damped_step(const Mat4& jtj, const Vec4& jtr, double mu);

/// Levenberg-Marquardt refinement. Steps are accepted only on strict cost
/// decrease; the damping is never re-initialized mid-run. The returned
/// parameters are the best seen, normalized to a2 >= 0 and a4 in [0, 2pi).
/// Throws std::runtime_error when the starting cost is not finite.
std::pair<ModelParams, LMTrace> lm_fit(const SampledSignal& s,
                                       const ModelParams& init,
                                       const LMConfig& cfg = {});

}  // namespace fipeft

#endif  // FIPEFT_LEVENBERG_HPP
