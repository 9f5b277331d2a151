#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "ratbez/bounds.hpp"
#include "ratbez/experiments.hpp"
#include "ratbez/maximizer.hpp"

using namespace ratbez;
namespace rt = ratbez::testing;

namespace {

RationalBezierCurve two_point_curve() {
  RationalBezierCurve c;
  c.degree = 1;
  c.points = {Eigen::Vector2d(0, 0), Eigen::Vector2d(1, 0)};
  c.weights = {1.0, 2.0};
  return c;
}

RationalBezierCurve straight_line(int n) {
  RationalBezierCurve c;
  c.degree = n;
  for (int i = 0; i <= n; ++i) {
    c.points.push_back(Eigen::Vector2d(i, 0));
    c.weights.push_back(1.0);
  }
  return c;
}

double grid_max(const RationalBezierCurve& c, int cells) {
  double best = 0.0;
  for (int k = 0; k <= cells; ++k) {
    best = std::max(best, rt::quotient_rule_derivative(c, static_cast<double>(k) / cells).norm());
  }
  return best;
}

}  // namespace

TEST_CASE("weight_ratio") {
  CHECK(weight_ratio(straight_line(5)) == 1.0);
  CHECK(weight_ratio(counterexample_family(11)) == 2.0);
  RationalBezierCurve c = straight_line(2);
  c.weights = {1, 3, 1};
  CHECK(weight_ratio(c) == 3.0);
  c.weights = {1, 0.25, 0.5};
  CHECK(weight_ratio(c) == 4.0);
}

TEST_CASE("conjecture_bound") {
  const auto r11 = conjecture_bound(counterexample_family(11));
  CHECK(r11.value == 22.0);
  CHECK(r11.method == BoundMethod::Conjecture);
  CHECK(r11.weight_ratio == 2.0);
  CHECK(!r11.argmax_index);
  CHECK(conjecture_bound(counterexample_family(2)).value == 4.0);
  for (int n = 1; n <= 10; ++n) CHECK(conjecture_bound(straight_line(n)).value == n);

  RationalBezierCurve diag = straight_line(1);
  diag.points[1] = Eigen::Vector2d(3, 4);
  CHECK(conjecture_bound(diag, NormOrder::L1).value == 7.0);
  CHECK(conjecture_bound(diag, NormOrder::L2).value == 5.0);
  CHECK(conjecture_bound(diag, NormOrder::Linf).value == 4.0);
}

TEST_CASE("elevation_bound") {
  const auto form = build_derivative_form(two_point_curve());
  const auto b0 = elevation_bound(form, 0);
  CHECK(b0.value == 2.0);
  CHECK(b0.argmax_index == 0);
  CHECK(b0.method == BoundMethod::Elevation);
  CHECK(b0.elevation_steps == 0);

  const auto b2 = elevation_bound(build_derivative_form(counterexample_family(2)), 1000);
  CHECK(std::abs(b2.value - 2.669326) < 1e-6);
  const auto b11 = elevation_bound(build_derivative_form(counterexample_family(11)), 1000);
  CHECK(std::abs(b11.value - 22.285016) < 1e-6);
  CHECK(*b11.argmax_index >= 0);
  CHECK(*b11.argmax_index <= 22 + 1000);

  CHECK_THROWS_AS(elevation_bound(form, -1), std::domain_error);

  SUBCASE("ties resolve to the smallest index") {
    const auto form1 = build_derivative_form(straight_line(1));
    const auto line = elevation_bound(form1, 0);
    CHECK(line.argmax_index == 0);
    CHECK(line.value == 1.0);
    CHECK(elevation_bound(build_derivative_form(straight_line(4)), 3).value == doctest::Approx(4.0).epsilon(1e-14));
  }
}

TEST_CASE("elevation bound equals the closed-form binomial expression for small e") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 1 + trial % 5;
    const auto form = build_derivative_form(rt::random_curve(rng, n, 2));
    for (int e = 0; e <= 8; ++e) {
      const Eigen::MatrixXd num = rt::closed_form_elevation(form.numerator_points, e);
      const Eigen::MatrixXd w = rt::closed_form_elevation(BernsteinCoefficients::scalar(form.weights1).coefficients, e);
      double expected = 0.0;
      for (Eigen::Index i = 0; i < num.cols(); ++i) expected = std::max(expected, n * num.col(i).norm() / w(0, i));
      REQUIRE(elevation_bound(form, e).value == doctest::Approx(expected).epsilon(1e-13));
    }
  }
}

TEST_CASE("bound_profile") {
  const auto form = build_derivative_form(two_point_curve());
  const std::vector<int> es{0, 10, 100};
  const auto profile = bound_profile(form, es);
  REQUIRE(profile.size() == 3);
  for (const auto& [e, v] : profile) CHECK(std::abs(v - 2.0) < 1e-12);

  const auto f11 = build_derivative_form(counterexample_family(11));
  const std::vector<int> es11{0, 10, 100, 1000};
  const auto p11 = bound_profile(f11, es11);
  REQUIRE(p11.size() == 4);
  for (std::size_t k = 1; k < p11.size(); ++k) CHECK(p11[k].second <= p11[k - 1].second + 1e-12);
  CHECK(std::abs(p11.back().second - 22.285016) < 1e-6);
  for (const auto& [e, v] : p11) CHECK(v == elevation_bound(f11, e).value);

  CHECK(bound_profile(form, std::vector<int>{}).empty());
  CHECK_THROWS_AS(bound_profile(form, std::vector<int>{5, 5}), std::domain_error);
  CHECK_THROWS_AS(bound_profile(form, std::vector<int>{10, 3}), std::domain_error);
}

TEST_CASE("elevation bound is sound and monotone") {
  std::vector<RationalBezierCurve> corpus;
  for (int n = 2; n <= 20; n += 3) corpus.push_back(counterexample_family(n));
  std::mt19937_64 rng(404);
  for (int k = 0; k < 6; ++k) corpus.push_back(rt::random_curve(rng, 1 + k * 2, 1 + k % 3));

  std::vector<int> steps(101);
  for (int e = 0; e <= 100; ++e) steps[e] = e;
  for (const auto& c : corpus) {
    const double observed = grid_max(c, 10000);
    const auto profile = bound_profile(build_derivative_form(c), steps);
    for (std::size_t k = 0; k < profile.size(); ++k) {
      REQUIRE(profile[k].second >= observed - 1e-12 * observed);
      if (k > 0) REQUIRE(profile[k].second <= profile[k - 1].second + 1e-12);
    }
  }
}

TEST_CASE("elevation bound converges on the counterexample family") {
  // The excess over the true maximum decays like 1/e, so doubling e halves it.
  for (int n = 2; n <= 20; ++n) {
    const auto c = counterexample_family(n);
    const double peak = maximize_derivative_norm(c, {20000, 1e-12}).max_value;
    const std::vector<int> es{1000, 2000, 4000};
    const auto p = bound_profile(build_derivative_form(c), es);
    CAPTURE(n);
    const double gap1 = p[0].second - peak;
    const double gap2 = p[1].second - peak;
    const double gap4 = p[2].second - peak;
    REQUIRE(gap4 > 0.0);
    CHECK(gap1 / gap2 == doctest::Approx(2.0).epsilon(0.05));
    CHECK(gap2 / gap4 == doctest::Approx(2.0).epsilon(0.05));
    CHECK(gap4 < 1.2e-1);
  }
}

TEST_CASE("norm orders coincide in one dimension") {
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    const auto c = rt::random_curve(rng, 1 + trial % 9, 1);
    const auto f = build_derivative_form(c);
    for (int e : {0, 7, 50}) {
      const double l1 = elevation_bound(f, e, NormOrder::L1).value;
      const double l2 = elevation_bound(f, e, NormOrder::L2).value;
      const double li = elevation_bound(f, e, NormOrder::Linf).value;
      REQUIRE(std::abs(l1 - l2) <= 1e-12 * l2);
      REQUIRE(std::abs(li - l2) <= 1e-12 * l2);
    }
    const double c1 = conjecture_bound(c, NormOrder::L1).value;
    REQUIRE(std::abs(conjecture_bound(c, NormOrder::Linf).value - c1) <= 1e-12 * c1);
  }
}

TEST_CASE("norm order parsing") {
  CHECK(parse_norm_order("1") == NormOrder::L1);
  CHECK(parse_norm_order("2") == NormOrder::L2);
  CHECK(parse_norm_order("inf") == NormOrder::Linf);
  CHECK_THROWS_AS(parse_norm_order("3"), std::invalid_argument);
  CHECK(to_string(NormOrder::Linf) == "inf");
}
