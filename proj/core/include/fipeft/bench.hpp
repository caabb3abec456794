#ifndef FIPEFT_BENCH_HPP
#define FIPEFT_BENCH_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fipeft/model.hpp"

namespace fipeft {

enum class InitMethod { fipeft, lombscargle };

std::string_view to_string(InitMethod m);
std::optional<InitMethod> parse_init_method(std::string_view name);

/// Initial parameters from the chosen method plus the iteration count of
/// its frequency stage (instrumentation for the complexity comparison).
/// Offset, amplitude and phase are derived identically for both methods;
/// only the frequency estimate differs.
struct InitOutcome {
  ModelParams params;
  std::uint64_t freq_ops = 0;
};

InitOutcome run_initializer(const SampledSignal& s, InitMethod method);

/// One benchmark table cell: a (noise level, sampling frequency) setting
/// aggregated over independently seeded trials. Success means the relative
/// frequency error stays within 2%.
struct BenchCell {
  InitMethod method = InitMethod::fipeft;
  double sigma = 0.0;
  double snr_db = 0.0;
  double fs = 0.0;
  double periods = 0.0;
  int seeds = 0;
  double init_median_f = 0.0;
  double init_success = 0.0;
  double fit_median_f = 0.0;
  double fit_success = 0.0;
};

struct BenchOptions {
  std::string table = "p10";  ///< p10, p5, p2, p1 or p05 (periods covered)
  int seeds = 1;
  std::vector<InitMethod> methods{InitMethod::fipeft};
  std::uint64_t seed_base = 1;  ///< trial k uses seed_base + k
  bool noise_free = false;      ///< replace the noise grid by sigma = 0
};

/// Runs the table's noise grid (sigma 0.25 .. 3.5) against its sampling
/// frequency columns; rows are ordered by (method, sigma, fs) and fully
/// determined by the options. Throws std::invalid_argument on an unknown
/// table name or seeds < 1.
std::vector<BenchCell> run_bench(const BenchOptions& opt);

void write_bench_csv(const std::filesystem::path& path,
                     const std::vector<BenchCell>& cells);

/// Wall time of the frequency stage of both methods at one record length,
/// aggregated over the noise grid: median for the crossing-based stage,
/// minimum for the periodogram.
struct TimingRow {
  std::size_t n = 0;
  double fipeft_ns = 0.0;
  double lombscargle_ns = 0.0;
  double ratio = 0.0;  ///< lombscargle_ns / fipeft_ns
};

/// Lengths are realized as P=10 signals with fs = N/40. Runs strictly
/// sequentially. repeats >= 1 averages the per-call time.
std::vector<TimingRow> run_timing(const std::vector<std::size_t>& lengths,
                                  int repeats);

void write_timing_csv(const std::filesystem::path& path,
                      const std::vector<TimingRow>& rows);

/// Noise levels whose SNR labels the benchmark tables row by row.
const std::vector<double>& bench_sigma_grid();

}  // namespace fipeft

#endif  // FIPEFT_BENCH_HPP
