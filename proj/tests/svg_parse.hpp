#pragma once

#include <cmath>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

namespace ratbez::testing {

struct ParsedSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

/// Value of attribute `name` inside the element text [begin, end).
inline std::string attribute(const std::string& svg, std::size_t begin, std::size_t end, const std::string& name) {
  const std::string key = " " + name + "=\"";
  const auto at = svg.find(key, begin);
  if (at == std::string::npos || at >= end) return {};
  const auto value = at + key.size();
  return svg.substr(value, svg.find('"', value) - value);
}

inline std::vector<ParsedSeries> parse_polylines(const std::string& svg) {
  std::vector<ParsedSeries> out;
  const std::string tag = "<polyline class=\"series\"";
  for (auto pos = svg.find(tag); pos != std::string::npos; pos = svg.find(tag, pos + 1)) {
    const auto end = svg.find("/>", pos);
    ParsedSeries s{attribute(svg, pos, end, "data-label"), {}};
    std::istringstream pts(attribute(svg, pos, end, "points"));
    std::string pair;
    while (pts >> pair) {
      const auto comma = pair.find(',');
      s.points.emplace_back(std::stod(pair.substr(0, comma)), std::stod(pair.substr(comma + 1)));
    }
    out.push_back(std::move(s));
  }
  return out;
}

/// y of the reference line, or NaN if absent.
inline double parse_reference_y(const std::string& svg) {
  const auto pos = svg.find("<line class=\"reference\"");
  if (pos == std::string::npos) return std::nan("");
  return std::stod(attribute(svg, pos, svg.find("/>", pos), "y1"));
}

}  // namespace ratbez::testing
