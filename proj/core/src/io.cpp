#include "fipeft/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <system_error>
#include <vector>

namespace fipeft {

namespace {

std::string to_chars_string(double v, int precision) {
  char buf[64];
  std::to_chars_result res =
      precision < 0
          ? std::to_chars(buf, buf + sizeof buf, v)
          : std::to_chars(buf, buf + sizeof buf, v,
                          std::chars_format::general, precision);
  return std::string(buf, res.ptr);
}

bool parse_double(std::string_view text, double& out) {
  while (!text.empty() && (text.front() == ' ' || text.front() == '\t'))
    text.remove_prefix(1);
  while (!text.empty() && (text.back() == ' ' || text.back() == '\t' ||
                           text.back() == '\r'))
    text.remove_suffix(1);
  const std::from_chars_result res =
      std::from_chars(text.data(), text.data() + text.size(), out);
  return res.ec == std::errc{} && res.ptr == text.data() + text.size();
}

bool parse_row(const std::string& line, double& x, double& y) {
  const std::size_t comma = line.find(',');
  if (comma == std::string::npos) return false;
  return parse_double(std::string_view(line).substr(0, comma), x) &&
         parse_double(std::string_view(line).substr(comma + 1), y);
}

std::ofstream open_for_write(const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out)
    throw std::runtime_error("cannot write file: " + path.string());
  return out;
}

}  // namespace

std::string format_double(double v) { return to_chars_string(v, -1); }

std::string format_double_full(double v) { return to_chars_string(v, 17); }

void write_signal_csv(const std::filesystem::path& path,
                      const SampledSignal& s) {
  std::ofstream out = open_for_write(path);
  out << "x,y\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    out << format_double_full(s.x[i]) << ',' << format_double_full(s.y[i])
        << '\n';
  if (!out)
    throw std::runtime_error("write failed: " + path.string());
}

SampledSignal read_signal_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path.string());

  SampledSignal s;
  std::string line;
  std::size_t line_no = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line.front() == '#') continue;
    if (line.size() == 1 && line.front() == '\r') continue;
    double x = 0.0;
    double y = 0.0;
    if (!parse_row(line, x, y)) {
      // A single non-numeric line before any data is the column header.
      if (header_allowed) {
        header_allowed = false;
        continue;
      }
      throw CsvError("malformed CSV row", line_no);
    }
    header_allowed = false;
    s.x.push_back(x);
    s.y.push_back(y);
  }

  if (s.x.empty())
    throw CsvError("no data rows", line_no == 0 ? 1 : line_no);

  if (!std::is_sorted(s.x.begin(), s.x.end())) {
    std::vector<std::size_t> order(s.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&s](std::size_t a,
                                                      std::size_t b) {
      return s.x[a] < s.x[b];
    });
    SampledSignal sorted;
    sorted.x.reserve(s.size());
    sorted.y.reserve(s.size());
    for (std::size_t k : order) {
      sorted.x.push_back(s.x[k]);
      sorted.y.push_back(s.y[k]);
    }
    return sorted;
  }
  return s;
}

void write_periodogram_csv(const std::filesystem::path& path,
                           const Periodogram& p) {
  std::ofstream out = open_for_write(path);
  out << "# peak_frequency=" << format_double(p.peak_frequency()) << '\n';
  out << "frequency,power\n";
  for (std::size_t i = 0; i < p.frequencies.size(); ++i)
    out << format_double_full(p.frequencies[i]) << ','
        << format_double_full(p.power[i]) << '\n';
  if (!out)
    throw std::runtime_error("write failed: " + path.string());
}

void write_fit_report(const std::filesystem::path& path, const FitReport& r) {
  std::ofstream out = open_for_write(path);
  out << "initializer=" << r.initializer << '\n';
  out << "converged=" << (r.converged ? 1 : 0) << '\n';
  out << "iterations=" << r.iterations << '\n';
  out << "chi2=" << format_double(r.chi2) << '\n';
  out << "frequency=" << format_double(r.frequency) << '\n';
  out << "init_ns=" << r.init_ns << '\n';
  out << "initial.a1=" << format_double(r.initial.a1) << '\n';
  out << "initial.a2=" << format_double(r.initial.a2) << '\n';
  out << "initial.a3=" << format_double(r.initial.a3) << '\n';
  out << "initial.a4=" << format_double(r.initial.a4) << '\n';
  out << "refined.a1=" << format_double(r.refined.a1) << '\n';
  out << "refined.a2=" << format_double(r.refined.a2) << '\n';
  out << "refined.a3=" << format_double(r.refined.a3) << '\n';
  out << "refined.a4=" << format_double(r.refined.a4) << '\n';
  if (!out)
    throw std::runtime_error("write failed: " + path.string());
}

FitReport read_fit_report(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read file: " + path.string());

  std::map<std::string, std::string> kv;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line.front() == '#') continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos)
      throw CsvError("malformed report line", line_no);
    kv[line.substr(0, eq)] = line.substr(eq + 1);
  }

  auto need = [&kv](const std::string& key) -> const std::string& {
    auto it = kv.find(key);
    if (it == kv.end())
      throw std::runtime_error("fit report misses key: " + key);
    return it->second;
  };
  auto as_double = [&need](const std::string& key) {
    double v = 0.0;
    if (!parse_double(need(key), v))
      throw std::runtime_error("fit report has non-numeric value for " + key);
    return v;
  };

  FitReport r;
  r.initializer = need("initializer");
  r.converged = need("converged") == "1";
  r.iterations = static_cast<int>(as_double("iterations"));
  r.chi2 = as_double("chi2");
  r.frequency = as_double("frequency");
  r.init_ns = static_cast<std::uint64_t>(std::stoull(need("init_ns")));
  r.initial = {as_double("initial.a1"), as_double("initial.a2"),
               as_double("initial.a3"), as_double("initial.a4")};
  r.refined = {as_double("refined.a1"), as_double("refined.a2"),
               as_double("refined.a3"), as_double("refined.a4")};
  return r;
}

}  // namespace fipeft
