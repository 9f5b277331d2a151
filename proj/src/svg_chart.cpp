#include "ratbez/svg_chart.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

#include <fmt/format.h>

namespace ratbez {

namespace {

struct Range {
  double lo = std::numeric_limits<double>::infinity();
  double hi = -std::numeric_limits<double>::infinity();

  void include(double v) {
    if (!std::isfinite(v)) return;
    lo = std::min(lo, v);
    hi = std::max(hi, v);
  }

  void pad(double fraction) {
    if (!(lo <= hi)) {
      lo = 0.0;
      hi = 1.0;
      return;
    }
    if (hi == lo) {
      const double half = lo == 0.0 ? 1.0 : 0.5 * std::abs(lo);
      lo -= half;
      hi += half;
      return;
    }
    const double extra = fraction * (hi - lo);
    lo -= extra;
    hi += extra;
  }

  double span() const { return hi - lo; }
};

std::string escape(const std::string& text) {
  std::string out;
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string render_svg_chart(const Chart& chart) {
  Range xr, yr;
  for (const auto& s : chart.series) {
    if (s.x.size() != s.y.size()) throw std::invalid_argument("chart series '" + s.label + "' has mismatched x/y");
    for (double v : s.x) xr.include(v);
    for (double v : s.y) yr.include(v);
  }
  if (chart.reference) yr.include(chart.reference->y);
  xr.pad(0.0);
  yr.pad(0.05);

  const double left = 80, right = 170, top = 40, bottom = 60;
  const double plot_w = chart.width - left - right;
  const double plot_h = chart.height - top - bottom;
  const double sx = plot_w / xr.span();
  const double sy = -plot_h / yr.span();
  const double tx = left - xr.lo * sx;
  const double ty = top + plot_h - yr.lo * sy;
  const auto px = [&](double x) { return tx + sx * x; };
  const auto py = [&](double y) { return ty + sy * y; };

  std::string svg;
  svg += fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\" "
      "font-family=\"sans-serif\" font-size=\"12\">\n",
      chart.width, chart.height);
  svg += fmt::format("<rect width=\"{}\" height=\"{}\" fill=\"white\"/>\n", chart.width, chart.height);
  if (!chart.title.empty()) {
    svg += fmt::format("<text class=\"title\" x=\"{}\" y=\"24\" text-anchor=\"middle\" font-size=\"15\">{}</text>\n",
                       left + plot_w / 2, escape(chart.title));
  }

  // Axes and ticks.
  svg += "<g class=\"axes\" stroke=\"black\" stroke-width=\"1\">\n";
  svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\"/>\n", left, top + plot_h, left + plot_w);
  svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{0}\" y2=\"{2}\"/>\n", left, top, top + plot_h);
  svg += "</g>\n<g class=\"ticks\" text-anchor=\"middle\">\n";
  constexpr int kTicks = 5;
  for (int k = 0; k <= kTicks; ++k) {
    const double xv = xr.lo + xr.span() * k / kTicks;
    const double yv = yr.lo + yr.span() * k / kTicks;
    svg += fmt::format("<line x1=\"{0:.2f}\" y1=\"{1}\" x2=\"{0:.2f}\" y2=\"{2}\" stroke=\"black\"/>", px(xv),
                       top + plot_h, top + plot_h + 5);
    svg += fmt::format("<text x=\"{:.2f}\" y=\"{}\">{:.4g}</text>\n", px(xv), top + plot_h + 18, xv);
    svg += fmt::format("<line x1=\"{0}\" y1=\"{1:.2f}\" x2=\"{2}\" y2=\"{1:.2f}\" stroke=\"black\"/>", left - 5,
                       py(yv), left);
    svg += fmt::format("<text x=\"{}\" y=\"{:.2f}\" text-anchor=\"end\">{:.4g}</text>\n", left - 8, py(yv) + 4, yv);
  }
  svg += "</g>\n";
  if (!chart.x_label.empty()) {
    svg += fmt::format("<text class=\"x-label\" x=\"{}\" y=\"{}\" text-anchor=\"middle\">{}</text>\n",
                       left + plot_w / 2, chart.height - 15, escape(chart.x_label));
  }
  if (!chart.y_label.empty()) {
    svg += fmt::format(
        "<text class=\"y-label\" x=\"20\" y=\"{0}\" text-anchor=\"middle\" transform=\"rotate(-90 20 {0})\">{1}</text>\n",
        top + plot_h / 2, escape(chart.y_label));
  }

  // Data-space content.
  svg += fmt::format("<g class=\"plot-area\" transform=\"matrix({:.17g} 0 0 {:.17g} {:.17g} {:.17g})\">\n", sx, sy,
                     tx, ty);
  if (chart.reference) {
    svg += fmt::format(
        "<line class=\"reference\" x1=\"{:.17g}\" y1=\"{:.17g}\" x2=\"{:.17g}\" y2=\"{:.17g}\" stroke=\"{}\" "
        "stroke-width=\"1.5\" stroke-dasharray=\"6 4\" vector-effect=\"non-scaling-stroke\"/>\n",
        xr.lo, chart.reference->y, xr.hi, chart.reference->y, chart.reference->color);
  }
  for (const auto& s : chart.series) {
    std::string points;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      if (i) points += ' ';
      points += fmt::format("{:.12g},{:.12g}", s.x[i], s.y[i]);
    }
    svg += fmt::format(
        "<polyline class=\"series\" data-label=\"{}\" fill=\"none\" stroke=\"{}\" stroke-width=\"2\"{} "
        "vector-effect=\"non-scaling-stroke\" points=\"{}\"/>\n",
        escape(s.label), s.color, s.dashed ? " stroke-dasharray=\"4 3\"" : "", points);
  }
  svg += "</g>\n";

  // Markers are drawn in pixel space so they stay round.
  for (const auto& s : chart.series) {
    if (!s.markers) continue;
    svg += fmt::format("<g class=\"markers\" fill=\"{}\">", s.color);
    for (std::size_t i = 0; i < s.x.size(); ++i) {
      svg += fmt::format("<circle cx=\"{:.2f}\" cy=\"{:.2f}\" r=\"2.5\"/>", px(s.x[i]), py(s.y[i]));
    }
    svg += "</g>\n";
  }

  // Legend.
  svg += "<g class=\"legend\">\n";
  double ly = top + 10;
  const double lx = left + plot_w + 15;
  const auto legend_entry = [&](const std::string& label, const std::string& color, bool dashed) {
    svg += fmt::format("<line x1=\"{0}\" y1=\"{1}\" x2=\"{2}\" y2=\"{1}\" stroke=\"{3}\" stroke-width=\"2\"{4}/>",
                       lx, ly, lx + 24, color, dashed ? " stroke-dasharray=\"4 3\"" : "");
    svg += fmt::format("<text x=\"{}\" y=\"{}\">{}</text>\n", lx + 30, ly + 4, escape(label));
    ly += 20;
  };
  for (const auto& s : chart.series) legend_entry(s.label, s.color, s.dashed);
  if (chart.reference && !chart.reference->label.empty()) {
    legend_entry(chart.reference->label, chart.reference->color, true);
  }
  svg += "</g>\n</svg>\n";
  return svg;
}

}  // namespace ratbez
