#pragma once

#include <optional>
#include <string>
#include <vector>

namespace ratbez {

struct ChartSeries {
  std::string label;
  std::vector<double> x;
  std::vector<double> y;
  std::string color = "#1f77b4";
  bool dashed = false;
  bool markers = false;
};

struct ReferenceLine {
  double y = 0.0;
  std::string label;
  std::string color = "#d62728";
};

struct Chart {
  std::string title;
  std::string x_label;
  std::string y_label;
  std::vector<ChartSeries> series;
  std::optional<ReferenceLine> reference;
  int width = 720;
  int height = 480;
};

/// Renders a standalone SVG line chart with linear axes.
///
/// Each series becomes one <polyline class="series"> whose points attribute
/// holds data-space coordinates; the enclosing <g class="plot-area"> carries
/// the affine transform to pixels. The optional reference line is a
/// <line class="reference"> in the same data space. Legend entries are <text>
/// elements.
std::string render_svg_chart(const Chart& chart);

}  // namespace ratbez
