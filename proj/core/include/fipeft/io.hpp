#ifndef FIPEFT_IO_HPP
#define FIPEFT_IO_HPP

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>

#include "fipeft/lomb_scargle.hpp"
#include "fipeft/model.hpp"

namespace fipeft {

/// Parse failure carrying the 1-based line number of the offending row.
class CsvError : public std::runtime_error {
 public:
  CsvError(const std::string& message, std::size_t line)
      : std::runtime_error(message + " (line " + std::to_string(line) + ")"),
        line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

/// Shortest representation that parses back to the identical double.
std::string format_double(double v);

/// Fixed 17 significant digits, also round-trip exact.
std::string format_double_full(double v);

/// Two-column CSV with header `x,y`, 17 significant digits, rows ascending
/// in x. Throws std::runtime_error when the file cannot be written.
void write_signal_csv(const std::filesystem::path& path,
                      const SampledSignal& s);

/// Reads `x,y` rows. A leading non-numeric line is accepted as header;
/// lines starting with '#' and empty lines are skipped. The result is
/// sorted by x when the file is not. Malformed rows raise CsvError.
SampledSignal read_signal_csv(const std::filesystem::path& path);

/// Two-column CSV (frequency, power) preceded by a comment line flagging
/// the peak frequency.
void write_periodogram_csv(const std::filesystem::path& path,
                           const Periodogram& p);

/// Outcome of one `fit` run, serializable as flat key=value lines.
struct FitReport {
  ModelParams initial;
  ModelParams refined;
  double frequency = 0.0;  ///< refined.a3 / 2pi
  double chi2 = 0.0;
  int iterations = 0;
  bool converged = false;
  std::string initializer;  ///< "fipeft" or "lombscargle"
  std::uint64_t init_ns = 0;
};

void write_fit_report(const std::filesystem::path& path, const FitReport& r);

/// Inverse of write_fit_report; all fields round-trip exactly.
FitReport read_fit_report(const std::filesystem::path& path);

}  // namespace fipeft

#endif  // FIPEFT_IO_HPP
