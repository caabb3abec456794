// Command-line front end: signal synthesis, curve fitting with either
// initializer, periodogram export, benchmark tables, and timing runs.
//
// Exit codes: 0 success, 1 usage error, 2 data error, 3 fit did not
// converge within the iteration cap.

#include <chrono>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "fipeft/bench.hpp"
#include "fipeft/estimator.hpp"
#include "fipeft/io.hpp"
#include "fipeft/levenberg.hpp"
#include "fipeft/lomb_scargle.hpp"
#include "fipeft/synth.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;
constexpr int kExitNoConvergence = 3;

struct SynthArgs {
  double periods = 10.0;
  double fs = 20.0;
  std::optional<double> snr;
  std::uint64_t seed = 1;
  double jitter = 0.3;
  std::string out;
};

struct FitArgs {
  std::string in;
  std::string init = "fipeft";
  std::string out;  // report path, optional
};

struct PeriodogramArgs {
  std::string in;
  std::string out;
};

struct BenchArgs {
  std::string table = "p10";
  int seeds = 1;
  std::vector<std::string> init{"fipeft"};
  std::uint64_t seed_base = 1;
  bool noise_free = false;
  std::string out;
};

struct TimingArgs {
  std::vector<std::size_t> lengths{80, 160, 320, 640};
  int repeats = 20;
  std::string out;
};

int run_synth(const SynthArgs& args) {
  fipeft::SynthConfig cfg;
  cfg.periods = args.periods;
  cfg.sample_rate = args.fs;
  cfg.seed = args.seed;
  cfg.jitter = args.jitter;
  if (args.snr) cfg.sigma = fipeft::sigma_for_snr(cfg.truth.a2, *args.snr);
  const fipeft::SampledSignal s = fipeft::generate(cfg);
  fipeft::write_signal_csv(args.out, s);
  std::cout << "wrote " << s.size() << " samples to " << args.out << '\n';
  return kExitOk;
}

int run_fit(const FitArgs& args) {
  const auto method = fipeft::parse_init_method(args.init);
  if (!method) {
    std::cerr << "error: unknown init method '" << args.init << "'\n";
    return kExitUsage;
  }
  const fipeft::SampledSignal s = fipeft::read_signal_csv(args.in);
  fipeft::check_signal(s);

  const auto t0 = std::chrono::steady_clock::now();
  const fipeft::InitOutcome init = fipeft::run_initializer(s, *method);
  const auto t1 = std::chrono::steady_clock::now();

  const auto [refined, trace] = fipeft::lm_fit(s, init.params);

  fipeft::FitReport report;
  report.initial = init.params;
  report.refined = refined;
  report.frequency = refined.frequency();
  report.chi2 = fipeft::chi_squared(refined, s);
  report.iterations = trace.iterations;
  report.converged = trace.converged;
  report.initializer = std::string(fipeft::to_string(*method));
  report.init_ns = static_cast<std::uint64_t>(
      std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count());

  if (!args.out.empty()) fipeft::write_fit_report(args.out, report);
  std::cout << "f_hat=" << fipeft::format_double(report.frequency)
            << " chi2=" << fipeft::format_double(report.chi2) << '\n';
  return trace.converged ? kExitOk : kExitNoConvergence;
}

int run_periodogram(const PeriodogramArgs& args) {
  const fipeft::SampledSignal s = fipeft::read_signal_csv(args.in);
  fipeft::check_signal(s);
  const fipeft::SignalStats stats = fipeft::prepare_stats(s);
  const fipeft::Periodogram p = fipeft::compute_periodogram(s, stats.a1_hat);
  fipeft::write_periodogram_csv(args.out, p);
  std::cout << "peak_frequency=" << fipeft::format_double(p.peak_frequency())
            << '\n';
  return kExitOk;
}

int run_bench(const BenchArgs& args) {
  fipeft::BenchOptions opt;
  opt.table = args.table;
  opt.seeds = args.seeds;
  opt.seed_base = args.seed_base;
  opt.noise_free = args.noise_free;
  opt.methods.clear();
  for (const std::string& name : args.init) {
    if (name == "both") {
      opt.methods = {fipeft::InitMethod::fipeft,
                     fipeft::InitMethod::lombscargle};
      break;
    }
    const auto method = fipeft::parse_init_method(name);
    if (!method) {
      std::cerr << "error: unknown init method '" << name << "'\n";
      return kExitUsage;
    }
    opt.methods.push_back(*method);
  }

  const std::vector<fipeft::BenchCell> cells = fipeft::run_bench(opt);
  fipeft::write_bench_csv(args.out, cells);
  std::cout << "wrote " << cells.size() << " cells to " << args.out << '\n';
  return kExitOk;
}

int run_timing(const TimingArgs& args) {
  const std::vector<fipeft::TimingRow> rows =
      fipeft::run_timing(args.lengths, args.repeats);
  fipeft::write_timing_csv(args.out, rows);
  for (const fipeft::TimingRow& r : rows)
    std::cout << "n=" << r.n
              << " ratio=" << fipeft::format_double(r.ratio) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cosine parameter estimation from unevenly sampled data"};
  app.require_subcommand(1);

  SynthArgs synth_args;
  CLI::App* synth = app.add_subcommand(
      "synth", "Generate a noisy cosine record and write it as CSV");
  synth->add_option("--periods", synth_args.periods, "Oscillation periods covered")
      ->capture_default_str();
  synth->add_option("--fs", synth_args.fs, "Average samples per x unit")
      ->capture_default_str();
  synth->add_option("--snr", synth_args.snr,
                    "Target SNR in dB; omit for a noise-free record");
  synth->add_option("--seed", synth_args.seed, "PRNG seed")
      ->capture_default_str();
  synth->add_option("--jitter", synth_args.jitter,
                    "Timestamp jitter as a fraction of the spacing, below 0.5")
      ->capture_default_str();
  synth->add_option("--out", synth_args.out, "Output CSV path")->required();

  FitArgs fit_args;
  CLI::App* fit = app.add_subcommand(
      "fit", "Estimate initial parameters from a CSV record and refine them");
  fit->add_option("--in", fit_args.in, "Input CSV with x,y rows")->required();
  fit->add_option("--init", fit_args.init,
                  "Initializer: fipeft or lombscargle")
      ->capture_default_str();
  fit->add_option("--out", fit_args.out, "Write the fit report here");

  PeriodogramArgs pg_args;
  CLI::App* pg = app.add_subcommand(
      "periodogram", "Write the full periodogram of a CSV record");
  pg->add_option("--in", pg_args.in, "Input CSV with x,y rows")->required();
  pg->add_option("--out", pg_args.out, "Output CSV path")->required();

  BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand(
      "bench", "Reproduce a benchmark table over seeded noise trials");
  bench->add_option("--table", bench_args.table,
                    "Table layout: p10, p5, p2, p1 or p05")
      ->capture_default_str();
  bench->add_option("--seeds", bench_args.seeds, "Trials per cell")
      ->capture_default_str();
  bench->add_option("--init", bench_args.init,
                    "Initializer(s): fipeft, lombscargle or both")
      ->capture_default_str();
  bench->add_option("--seed-base", bench_args.seed_base,
                    "Seed of the first trial")
      ->capture_default_str();
  bench->add_flag("--noise-free", bench_args.noise_free,
                  "Replace the noise grid by a single sigma=0 row");
  bench->add_option("--out", bench_args.out, "Output CSV path")->required();

  TimingArgs timing_args;
  CLI::App* timing = app.add_subcommand(
      "timing", "Compare frequency-stage wall time of both methods");
  timing->add_option("--lengths", timing_args.lengths, "Record lengths N")
      ->delimiter(',')
      ->capture_default_str();
  timing->add_option("--repeats", timing_args.repeats,
                     "Calls averaged per measurement")
      ->capture_default_str();
  timing->add_option("--out", timing_args.out, "Output CSV path")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (synth->parsed()) return run_synth(synth_args);
    if (fit->parsed()) return run_fit(fit_args);
    if (pg->parsed()) return run_periodogram(pg_args);
    if (bench->parsed()) return run_bench(bench_args);
    if (timing->parsed()) return run_timing(timing_args);
  } catch (const fipeft::CsvError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitData;
  }
  return kExitUsage;
}
