#include <doctest.h>

#include <sstream>

#include "ratbez/curve_json.hpp"
#include "ratbez/experiments.hpp"
#include "ratbez/svg_chart.hpp"
#include "svg_parse.hpp"

using namespace ratbez;

TEST_CASE("curve json round trip") {
  for (int n : {2, 7, 11, 20}) {
    const auto c = counterexample_family(n);
    std::stringstream buf;
    write_curve_json(buf, c);
    const auto back = read_curve_json(buf);
    REQUIRE(back.degree == c.degree);
    REQUIRE(back.weights == c.weights);
    REQUIRE(back.points.size() == c.points.size());
    for (std::size_t i = 0; i < c.points.size(); ++i) REQUIRE(back.points[i] == c.points[i]);
    for (double t : {0.1, 0.5, 0.888645}) REQUIRE(eval_point(back, t) == eval_point(c, t));
  }

  RationalBezierCurve odd;
  odd.degree = 1;
  odd.points = {Eigen::Vector3d(0.1, 1.0 / 3.0, -2e-300), Eigen::Vector3d(1e10, 0.7, 3)};
  odd.weights = {0.1 + 0.2, 1.0 / 7.0};
  const auto back = parse_curve_json(curve_to_json(odd));
  CHECK(back.points[0] == odd.points[0]);
  CHECK(back.points[1] == odd.points[1]);
  CHECK(back.weights == odd.weights);
}

TEST_CASE("curve json errors") {
  CHECK_THROWS_AS(parse_curve_json("{not json"), CurveFormatError);
  CHECK_THROWS_AS(parse_curve_json("[1, 2]"), CurveFormatError);
  CHECK_THROWS_AS(parse_curve_json(R"({"degree": 1, "points": [[0,0],[1,0]]})"), CurveFormatError);
  CHECK_THROWS_AS(parse_curve_json(R"({"degree": 1.5, "points": [], "weights": []})"), CurveFormatError);
  CHECK_THROWS_AS(parse_curve_json(R"({"degree": 1, "points": [[0,"a"],[1,0]], "weights": [1,1]})"), CurveFormatError);

  // Structurally fine but invalid: left for validate().
  const auto c = parse_curve_json(R"({"degree": 2, "points": [[0,0],[1,0]], "weights": [1,-1]})");
  const auto problems = validate(c);
  CHECK(problems.size() == 2);
}

TEST_CASE("svg chart") {
  Chart chart;
  chart.title = "a < b";
  chart.series.push_back({"one", {0, 1, 2}, {1, 4, 2}});
  chart.series.push_back({"two", {0, 2}, {0, 0}, "#000", true});
  chart.reference = ReferenceLine{3.5, "ref"};
  const std::string svg = render_svg_chart(chart);
  CHECK(svg.rfind("<svg xmlns=\"http://www.w3.org/2000/svg\"", 0) == 0);
  CHECK(svg.find("a &lt; b") != std::string::npos);
  const auto series = ratbez::testing::parse_polylines(svg);
  REQUIRE(series.size() == 2);
  CHECK(series[0].label == "one");
  REQUIRE(series[0].points.size() == 3);
  CHECK(series[0].points[1] == std::pair<double, double>(1, 4));
  CHECK(ratbez::testing::parse_reference_y(svg) == 3.5);
  CHECK(svg.find(">ref</text>") != std::string::npos);

  Chart bad;
  bad.series.push_back({"x", {0, 1}, {1}});
  CHECK_THROWS_AS(render_svg_chart(bad), std::invalid_argument);

  Chart flat;
  flat.series.push_back({"flat", {0, 1}, {2, 2}});
  CHECK(render_svg_chart(flat).find("nan") == std::string::npos);
}
