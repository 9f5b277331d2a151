#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "ratbez/bezier.hpp"
#include "ratbez/experiments.hpp"

namespace ratbez::cli {

/// Process exit codes. No other values are ever returned.
enum ExitCode : int { kOk = 0, kInputError = 2, kIoError = 3 };

/// Raised for unreadable inputs and unwritable outputs (exit code 3).
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class PlotKind { Curve, DerivativeNorm, BoundComparison, Runtime };

/// Throws std::invalid_argument for unknown names.
PlotKind parse_plot_kind(std::string_view name);

struct PlotSpec {
  PlotKind kind = PlotKind::Curve;
  int samples = 1001;
  std::string output_path;
  std::optional<double> overlay_bound;
};

/// Plot of a curve (kinds Curve and DerivativeNorm).
std::string render_curve_plot(const RationalBezierCurve& curve, const PlotSpec& spec);

/// Plot of a table (kinds BoundComparison and Runtime).
std::string render_table_plot(const std::vector<Table1Row>& rows, const PlotSpec& spec);

/// Runs the command line `args` (args[0] is the program name). Curve paths of
/// "-" read from `in`. Normal output goes to `out`, diagnostics to `err`.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace ratbez::cli
