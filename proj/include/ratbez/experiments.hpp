#pragma once

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "ratbez/bezier.hpp"
#include "ratbez/maximizer.hpp"

namespace ratbez {

enum class Verdict { Holds, Violated };
std::string_view to_string(Verdict v);

/// Degree-n member of the collinear counterexample family:
/// ω_i = 2^-i for i < n, ω_n = 2^-(n-2), p_i = (i, 0). Requires n >= 2.
RationalBezierCurve counterexample_family(int n);

struct Table1Row {
  int degree = 0;
  double max_first_derivative = 0.0;
  double argmax_t = 0.0;
  double conjectured_bound = 0.0;
  double elevation_bound = 0.0;
  int elevation_steps = 0;
  double runtime_seconds = 0.0;  // wall clock of the elevation bound alone
  Verdict verdict = Verdict::Holds;
};

struct ExperimentOptions {
  int elevation_steps = 1000;
  MaximizerOptions maximizer{};
};

Table1Row table1_row(int n, const ExperimentOptions& options = {});

/// One row per degree in [n_min, n_max], in order. The range must lie
/// within [2, 30]. A failing row is rethrown with its degree attached.
std::vector<Table1Row> run_table1(int n_min, int n_max, const ExperimentOptions& options = {});

struct ConjectureVerdict {
  Verdict verdict = Verdict::Holds;
  double margin = 0.0;  // conjectured bound minus located maximum
};

ConjectureVerdict conjecture_verdict(const RationalBezierCurve& curve, MaximizerOptions options = {});

/// CSV with header n,max_deriv,t,conjecture,elevation_bound,e,runtime_s,verdict
/// and six-decimal fixed values.
inline constexpr std::string_view kTable1CsvHeader = "n,max_deriv,t,conjecture,elevation_bound,e,runtime_s,verdict";

void write_table1_csv(std::ostream& out, const std::vector<Table1Row>& rows);
std::string table1_csv(const std::vector<Table1Row>& rows);

/// Parses the CSV produced by write_table1_csv. Throws std::invalid_argument
/// on a bad header or malformed row.
std::vector<Table1Row> read_table1_csv(std::istream& in);

}  // namespace ratbez
