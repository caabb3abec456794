#ifndef FIPEFT_ESTIMATOR_HPP
#define FIPEFT_ESTIMATOR_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fipeft/model.hpp"

namespace fipeft {

/// Summary statistics of a record: running mean, extrema over the whole
/// range, and extrema restricted to the inner third of the x-range. The
/// inner extrema are seeded at the middle sample so they stay defined
/// even when no sample falls into the window.
struct SignalStats {
  double y_max = 0.0;
  double y_min = 0.0;
  std::size_t idx_max = 0;
  std::size_t idx_min = 0;
  double y_max2 = 0.0;   ///< maximum over x in [x1+0.333R, x1+0.667R]
  double y_min2 = 0.0;
  std::size_t idx_max2 = 0;
  std::size_t idx_min2 = 0;
  std::size_t count_mid = 0;  ///< samples inside the inner-third window
  double a1_hat = 0.0;        ///< mean of all y
  double a2_hat = 0.0;        ///< half the y range
};

/// Mean-crossing positions and, per segment between crossings, the average
/// absolute deviation of y from the mean (diagnostic only; never used for
/// classification).
struct CrossingSet {
  std::vector<double> positions;
  std::vector<double> mean_dev;

  std::size_t count() const { return positions.size(); }
};

/// Outcome of classifying inter-crossing distances and deriving the
/// representative half-period d*.
struct DistanceAnalysis {
  std::vector<double> distances;  ///< sorted ascending
  double d_ref = 0.0;             ///< reference separating good from spurious
  std::size_t ref_idx = 0;        ///< position of d_ref within `distances`
  double d_typ = 0.0;             ///< blended median/mean of the good class
  std::size_t num_good = 0;
  double sum_spurious = 0.0;      ///< total length of distances below the good range
  double d_star = 0.0;            ///< final half-period estimate
  bool long_distance_flag = false;
  bool used_three_step = false;   ///< classification ran (vs plain averaging)
};

/// Either a distance analysis or the conclusion that the record covers at
/// most a fraction of one oscillation.
struct DistanceSelection {
  bool single_crossing = false;
  DistanceAnalysis analysis;  ///< meaningful only when !single_crossing
};

/// Full trace of one initialization, kept for reporting and diagnostics.
struct InitialEstimate {
  ModelParams params;
  SignalStats raw_stats;    ///< offset/amplitude are reported from these
  SignalStats clean_stats;  ///< phase alignment uses the cleaned record
  CrossingSet crossings;    ///< crossings of the cleaned record
  DistanceSelection selection;
  double d_star = 0.0;      ///< half-period actually used (span fallback included)
  std::uint64_t freq_ops = 0;  ///< loop iterations spent in the frequency stage
};

SignalStats prepare_stats(const SampledSignal& s);

/// Replaces interior samples that sit on the opposite side of a1_hat from
/// both neighbors and deviate less than either neighbor; the replacement is
/// the neighbor value closest to a1_hat. Reads only the original y, so
/// replacements never cascade. x and the boundary samples are copied.
SampledSignal remove_spikes(const SampledSignal& s, double a1_hat);

/// Detects positions where adjacent samples straddle a1_hat strictly and
/// interpolates the crossing on the connecting line. Pairs closer than
/// 1e-8 in x take the right-hand x instead of interpolating.
CrossingSet find_crossings(const SampledSignal& s, double a1_hat);

struct ReferenceDistance {
  double d_ref = 0.0;
  std::size_t ref_idx = 0;
};

/// Partitions [0, max distance] into 2..5 equal-width bins until at least
/// two bins individually satisfy max < 2*min, then anchors d_ref on those
/// bins (merged mean, combined median, or upper-bin median). If no second
/// candidate bin appears, the maximum distance is assumed to be the only
/// good one.
ReferenceDistance get_reference_distance(const std::vector<double>& sorted_distances);

struct TypicalDistance {
  double d_typ = 0.0;
  std::size_t num_good = 0;
  bool long_distance_flag = false;
  std::size_t good_idx = 0;  ///< first index of the good range
  double d_ref = 0.0;        ///< possibly reassigned by the sanity check
  std::size_t ref_idx = 0;
};

TypicalDistance get_typical_distance(const std::vector<double>& sorted_distances,
                                     double d_ref, std::size_t ref_idx);

/// Algorithm over a crossing set: builds consecutive distances, rejects
/// implausibly short totals, and either averages directly or runs the
/// three-step classification with the capped spurious-mass correction.
DistanceSelection select_best_distance(const CrossingSet& crossings,
                                       double x_first, double x_last);

/// a3_hat = pi / d_star, or pi / (x_last - x_first) in the single-crossing
/// case. Throws std::domain_error when the fallback span is zero.
double estimate_frequency(const DistanceSelection& sel, double x_first,
                          double x_last);

/// Aligns the phase with a strong extremum. Uses the inner-third extrema
/// when the record has at least 10 samples, at least 10 of them inside the
/// window, and covers roughly three or more periods (estimated from
/// d_star); otherwise the global extrema.
double estimate_phase(const SampledSignal& s, const SignalStats& stats,
                      double a3_hat, double d_star);

/// Full pipeline with all intermediate products exposed.
InitialEstimate estimate_initial(const SampledSignal& s);

/// Convenience wrapper returning only the parameter vector.
ModelParams estimate_initial_params(const SampledSignal& s);

}  // namespace fipeft

#endif  // FIPEFT_ESTIMATOR_HPP
