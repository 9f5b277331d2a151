#include "ratbez/cli.hpp"

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "ratbez/bounds.hpp"
#include "ratbez/curve_json.hpp"
#include "ratbez/derivative.hpp"
#include "ratbez/maximizer.hpp"
#include "ratbez/svg_chart.hpp"

namespace ratbez::cli {

namespace {

// Twelve significant digits, never "-0".
std::string sig12(double v) { return fmt::format("{:.12g}", v == 0.0 ? 0.0 : v); }

RationalBezierCurve load_curve(const std::string& path, std::istream& in) {
  RationalBezierCurve curve;
  if (path == "-") {
    curve = read_curve_json(in);
  } else {
    std::ifstream file(path);
    if (!file) throw IoError("cannot open curve file '" + path + "'");
    curve = read_curve_json(file);
  }
  require_valid(curve);
  return curve;
}

std::vector<Table1Row> load_table(const std::string& path, std::istream& in) {
  if (path == "-") return read_table1_csv(in);
  std::ifstream file(path);
  if (!file) throw IoError("cannot open table file '" + path + "'");
  return read_table1_csv(file);
}

void write_text(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty() || path == "-") {
    out << text;
    return;
  }
  std::ofstream file(path, std::ios::binary);
  if (!file) throw IoError("cannot write '" + path + "'");
  file << text;
  file.close();
  if (!file) throw IoError("error while writing '" + path + "'");
}

std::string violation_summary(const std::vector<Table1Row>& rows) {
  std::vector<int> violated;
  for (const auto& r : rows) {
    if (r.verdict == Verdict::Violated) violated.push_back(r.degree);
  }
  if (violated.empty()) return "0 violations";
  std::string which;
  const bool contiguous = violated.back() - violated.front() + 1 == static_cast<int>(violated.size());
  if (violated.size() == 1) {
    which = fmt::format("n = {}", violated.front());
  } else if (contiguous) {
    which = fmt::format("n = {}..{}", violated.front(), violated.back());
  } else {
    which = fmt::format("n = {}", fmt::join(violated, ", "));
  }
  return fmt::format("{} violation{} ({})", violated.size(), violated.size() == 1 ? "" : "s", which);
}

std::vector<double> uniform_parameters(int samples) {
  std::vector<double> ts(samples);
  for (int k = 0; k < samples; ++k) ts[k] = k == samples - 1 ? 1.0 : static_cast<double>(k) / (samples - 1);
  return ts;
}

}  // namespace

PlotKind parse_plot_kind(std::string_view name) {
  if (name == "curve") return PlotKind::Curve;
  if (name == "derivative_norm") return PlotKind::DerivativeNorm;
  if (name == "bound_comparison") return PlotKind::BoundComparison;
  if (name == "runtime") return PlotKind::Runtime;
  throw std::invalid_argument(fmt::format("unknown plot kind '{}'", name));
}

std::string render_curve_plot(const RationalBezierCurve& curve, const PlotSpec& spec) {
  require_valid(curve);
  if (spec.samples < 2) throw std::invalid_argument("plot needs at least 2 samples");
  const auto ts = uniform_parameters(spec.samples);
  Chart chart;
  if (spec.kind == PlotKind::Curve) {
    ChartSeries r{"r(t)", {}, {}};
    ChartSeries polygon{"control polygon", {}, {}, "#7f7f7f", true, true};
    const bool planar = curve.dimension() >= 2;
    for (double t : ts) {
      const Point p = eval_point(curve, t);
      r.x.push_back(planar ? p(0) : t);
      r.y.push_back(planar ? p(1) : p(0));
    }
    if (planar) {
      for (const auto& p : curve.points) {
        polygon.x.push_back(p(0));
        polygon.y.push_back(p(1));
      }
    }
    chart.title = fmt::format("Rational Bezier curve (n = {})", curve.degree);
    chart.x_label = planar ? "x" : "t";
    chart.y_label = planar ? "y" : "x";
    chart.series.push_back(std::move(r));
    if (planar) chart.series.push_back(std::move(polygon));
  } else if (spec.kind == PlotKind::DerivativeNorm) {
    const DerivativeForm form = build_derivative_form(curve);
    const Eigen::MatrixXd net = form.homogeneous_net();
    Eigen::MatrixXd scratch;
    ChartSeries norm{"|r'(t)|", {}, {}};
    for (double t : ts) {
      norm.x.push_back(t);
      norm.y.push_back(eval_derivative_explicit(net, t, scratch).norm());
    }
    chart.title = fmt::format("Derivative norm (n = {})", curve.degree);
    chart.x_label = "t";
    chart.y_label = "|r'(t)|";
    chart.series.push_back(std::move(norm));
    if (spec.overlay_bound) {
      chart.reference = ReferenceLine{*spec.overlay_bound, fmt::format("bound {:.6g}", *spec.overlay_bound)};
    }
  } else {
    throw std::invalid_argument("plot kind needs a table CSV, not a curve");
  }
  return render_svg_chart(chart);
}

std::string render_table_plot(const std::vector<Table1Row>& rows, const PlotSpec& spec) {
  Chart chart;
  chart.x_label = "n";
  if (spec.kind == PlotKind::BoundComparison) {
    ChartSeries max{"max |r'(t)|", {}, {}, "#1f77b4", false, true};
    ChartSeries conj{"conjectured bound", {}, {}, "#d62728", true, true};
    ChartSeries elev{"elevation bound", {}, {}, "#2ca02c", false, true};
    for (const auto& r : rows) {
      for (auto* s : {&max, &conj, &elev}) s->x.push_back(r.degree);
      max.y.push_back(r.max_first_derivative);
      conj.y.push_back(r.conjectured_bound);
      elev.y.push_back(r.elevation_bound);
    }
    chart.title = "Derivative maximum and bounds";
    chart.y_label = "value";
    chart.series = {std::move(max), std::move(conj), std::move(elev)};
  } else if (spec.kind == PlotKind::Runtime) {
    ChartSeries runtime{"elevation bound runtime", {}, {}, "#9467bd", false, true};
    for (const auto& r : rows) {
      runtime.x.push_back(r.degree);
      runtime.y.push_back(r.runtime_seconds);
    }
    chart.title = "Running time";
    chart.y_label = "seconds";
    chart.series.push_back(std::move(runtime));
  } else {
    throw std::invalid_argument("plot kind needs a curve file, not a table");
  }
  return render_svg_chart(chart);
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Rational Bezier derivative bounds"};
  app.require_subcommand(1);

  std::string curve_path;
  double t = 0.0;
  auto* eval_cmd = app.add_subcommand("eval", "Evaluate r(t)");
  eval_cmd->add_option("curve", curve_path, "Curve JSON file or -")->required();
  eval_cmd->add_option("t", t, "Parameter in [0, 1]")->required();

  std::string method = "elevation";
  int elevation_steps = 1000;
  std::string norm_name = "2";
  auto* bound_cmd = app.add_subcommand("bound", "Upper bound on |r'(t)|");
  bound_cmd->add_option("curve", curve_path, "Curve JSON file or -")->required();
  bound_cmd->add_option("--method", method, "conjecture or elevation")
      ->check(CLI::IsMember({"conjecture", "elevation"}))
      ->capture_default_str();
  bound_cmd->add_option("--e", elevation_steps, "Degree elevation steps")->capture_default_str();
  bound_cmd->add_option("--p-norm", norm_name, "Vector norm: 1, 2 or inf")->capture_default_str();

  MaximizerOptions max_options;
  auto* max_cmd = app.add_subcommand("maximize", "Locate the maximum of |r'(t)|");
  max_cmd->add_option("curve", curve_path, "Curve JSON file or -")->required();
  max_cmd->add_option("--grid", max_options.grid_size, "Uniform grid cells")->capture_default_str();
  max_cmd->add_option("--tol", max_options.tol, "Golden-section bracket width")->capture_default_str();

  int n_min = 2, n_max = 20;
  std::string out_path;
  ExperimentOptions experiment;
  auto* table_cmd = app.add_subcommand("table1", "Run the counterexample family and write CSV");
  table_cmd->add_option("n_min", n_min, "Smallest degree")->required();
  table_cmd->add_option("n_max", n_max, "Largest degree")->required();
  table_cmd->add_option("--e", experiment.elevation_steps, "Degree elevation steps")->capture_default_str();
  table_cmd->add_option("--grid", experiment.maximizer.grid_size, "Maximizer grid cells")->capture_default_str();
  table_cmd->add_option("--tol", experiment.maximizer.tol, "Maximizer tolerance")->capture_default_str();
  table_cmd->add_option("--out", out_path, "CSV output path (default stdout)");

  int family_n = 11;
  auto* family_cmd = app.add_subcommand("family", "Write a counterexample family curve as JSON");
  family_cmd->add_option("n", family_n, "Degree >= 2")->required();
  family_cmd->add_option("--out", out_path, "JSON output path (default stdout)");

  std::string kind_name, input_path;
  PlotSpec plot;
  double overlay = 0.0;
  auto* plot_cmd = app.add_subcommand("plot", "Write an SVG plot");
  plot_cmd->add_option("kind", kind_name, "curve, derivative_norm, bound_comparison or runtime")->required();
  plot_cmd->add_option("input", input_path, "Curve JSON or table CSV (or -)")->required();
  plot_cmd->add_option("--out", plot.output_path, "SVG output path")->required();
  plot_cmd->add_option("--samples", plot.samples, "Samples along t")->capture_default_str();
  auto* overlay_opt = plot_cmd->add_option("--overlay-bound", overlay, "Horizontal reference line");

  std::vector<const char*> argv;
  argv.reserve(args.size());
  for (const auto& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  }

  try {
    if (*eval_cmd) {
      const auto curve = load_curve(curve_path, in);
      const Point p = eval_point(curve, t);
      for (Eigen::Index k = 0; k < p.size(); ++k) out << (k ? " " : "") << sig12(p(k));
      out << '\n';
    } else if (*bound_cmd) {
      const auto curve = load_curve(curve_path, in);
      const NormOrder p = parse_norm_order(norm_name);
      if (method == "conjecture") {
        const BoundReport r = conjecture_bound(curve, p);
        out << fmt::format("conjecture {:.6f} p={} weight_ratio={}\n", r.value, to_string(p), sig12(*r.weight_ratio));
      } else {
        const BoundReport r = elevation_bound(build_derivative_form(curve), elevation_steps, p);
        out << fmt::format("elevation {:.6f} p={} e={} argmax_index={}\n", r.value, to_string(p), r.elevation_steps,
                           *r.argmax_index);
      }
    } else if (*max_cmd) {
      const auto curve = load_curve(curve_path, in);
      const MaximizerResult r = maximize_derivative_norm(curve, max_options);
      out << fmt::format("{:.6f} @ t={:.6f}\n", r.max_value, r.argmax_t);
    } else if (*table_cmd) {
      const auto rows = run_table1(n_min, n_max, experiment);
      write_text(out_path, table1_csv(rows), out);
      (out_path.empty() || out_path == "-" ? err : out) << violation_summary(rows) << '\n';
    } else if (*family_cmd) {
      write_text(out_path, curve_to_json(counterexample_family(family_n)) + "\n", out);
    } else if (*plot_cmd) {
      plot.kind = parse_plot_kind(kind_name);
      if (overlay_opt->count() > 0) plot.overlay_bound = overlay;
      if (plot.samples < 2) throw std::invalid_argument("--samples must be >= 2");
      std::string svg;
      if (plot.kind == PlotKind::Curve || plot.kind == PlotKind::DerivativeNorm) {
        svg = render_curve_plot(load_curve(input_path, in), plot);
      } else {
        svg = render_table_plot(load_table(input_path, in), plot);
      }
      write_text(plot.output_path, svg, out);
    }
  } catch (const IoError& ex) {
    err << "error: " << ex.what() << '\n';
    return kIoError;
  } catch (const std::exception& ex) {
    err << "error: " << ex.what() << '\n';
    return kInputError;
  }
  return kOk;
}

}  // namespace ratbez::cli
