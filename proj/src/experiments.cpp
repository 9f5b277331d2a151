#include "ratbez/experiments.hpp"

#include <chrono>
#include <charconv>
#include <cmath>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include <fmt/format.h>

#include "ratbez/bounds.hpp"
#include "ratbez/derivative.hpp"

namespace ratbez {

namespace {

template <typename T>
T parse_field(std::string_view field, std::size_t line) {
  T value{};
  const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
  if (ec != std::errc{} || ptr != field.data() + field.size()) {
    throw std::invalid_argument(fmt::format("table csv line {}: cannot parse '{}'", line, field));
  }
  return value;
}

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const auto pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

}  // namespace

std::string_view to_string(Verdict v) { return v == Verdict::Violated ? "violated" : "holds"; }

RationalBezierCurve counterexample_family(int n) {
  if (n < 2) throw std::domain_error(fmt::format("counterexample family needs n >= 2, got {}", n));
  RationalBezierCurve curve;
  curve.degree = n;
  for (int i = 0; i <= n; ++i) {
    curve.points.push_back(Eigen::Vector2d(i, 0.0));
    curve.weights.push_back(std::ldexp(1.0, i < n ? -i : -(n - 2)));
  }
  return curve;
}

Table1Row table1_row(int n, const ExperimentOptions& options) {
  const RationalBezierCurve curve = counterexample_family(n);
  const MaximizerResult peak = maximize_derivative_norm(curve, options.maximizer);
  const BoundReport conjecture = conjecture_bound(curve);

  const auto start = std::chrono::steady_clock::now();
  const BoundReport elevation = elevation_bound(build_derivative_form(curve), options.elevation_steps);
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;

  Table1Row row;
  row.degree = n;
  row.max_first_derivative = peak.max_value;
  row.argmax_t = peak.argmax_t;
  row.conjectured_bound = conjecture.value;
  row.elevation_bound = elevation.value;
  row.elevation_steps = options.elevation_steps;
  row.runtime_seconds = elapsed.count();
  row.verdict = peak.max_value > conjecture.value ? Verdict::Violated : Verdict::Holds;
  return row;
}

std::vector<Table1Row> run_table1(int n_min, int n_max, const ExperimentOptions& options) {
  if (n_min < 2 || n_max > 30 || n_min > n_max) {
    throw std::domain_error(fmt::format("degree range [{}, {}] must satisfy 2 <= n_min <= n_max <= 30", n_min, n_max));
  }
  std::vector<Table1Row> rows;
  for (int n = n_min; n <= n_max; ++n) {
    try {
      rows.push_back(table1_row(n, options));
    } catch (const std::exception& ex) {
      throw std::runtime_error(fmt::format("table row n = {} failed: {}", n, ex.what()));
    }
  }
  return rows;
}

ConjectureVerdict conjecture_verdict(const RationalBezierCurve& curve, MaximizerOptions options) {
  const double bound = conjecture_bound(curve).value;
  const double peak = maximize_derivative_norm(curve, options).max_value;
  ConjectureVerdict out;
  out.margin = bound - peak;
  out.verdict = out.margin < 0.0 ? Verdict::Violated : Verdict::Holds;
  return out;
}

void write_table1_csv(std::ostream& out, const std::vector<Table1Row>& rows) {
  out << kTable1CsvHeader << '\n';
  for (const auto& r : rows) {
    out << fmt::format("{},{:.6f},{:.6f},{:.6f},{:.6f},{},{:.6f},{}\n", r.degree, r.max_first_derivative, r.argmax_t,
                       r.conjectured_bound, r.elevation_bound, r.elevation_steps, r.runtime_seconds,
                       to_string(r.verdict));
  }
}

std::string table1_csv(const std::vector<Table1Row>& rows) {
  std::ostringstream out;
  write_table1_csv(out, rows);
  return out.str();
}

std::vector<Table1Row> read_table1_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kTable1CsvHeader) {
    throw std::invalid_argument("table csv: missing or unexpected header");
  }
  std::vector<Table1Row> rows;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 8) throw std::invalid_argument(fmt::format("table csv line {}: expected 8 fields", line_no));
    Table1Row r;
    r.degree = parse_field<int>(f[0], line_no);
    r.max_first_derivative = parse_field<double>(f[1], line_no);
    r.argmax_t = parse_field<double>(f[2], line_no);
    r.conjectured_bound = parse_field<double>(f[3], line_no);
    r.elevation_bound = parse_field<double>(f[4], line_no);
    r.elevation_steps = parse_field<int>(f[5], line_no);
    r.runtime_seconds = parse_field<double>(f[6], line_no);
    if (f[7] == "violated") {
      r.verdict = Verdict::Violated;
    } else if (f[7] == "holds") {
      r.verdict = Verdict::Holds;
    } else {
      throw std::invalid_argument(fmt::format("table csv line {}: unknown verdict '{}'", line_no, f[7]));
    }
    rows.push_back(r);
  }
  return rows;
}

}  // namespace ratbez
