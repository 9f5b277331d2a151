#include "ratbez/bezier.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <utility>

#include <fmt/format.h>

namespace ratbez {

namespace {

__extension__ typedef unsigned __int128 uint128;

std::string join_problems(const std::vector<std::string>& problems) {
  std::string out = "invalid curve: ";
  for (std::size_t i = 0; i < problems.size(); ++i) {
    if (i) out += "; ";
    out += problems[i];
  }
  return out;
}

}  // namespace

InvalidCurve::InvalidCurve(std::vector<std::string> problems)
    : std::invalid_argument(join_problems(problems)), problems_(std::move(problems)) {}

BernsteinCoefficients BernsteinCoefficients::scalar(const std::vector<double>& values) {
  BernsteinCoefficients out;
  out.coefficients = Eigen::Map<const Eigen::RowVectorXd>(values.data(), static_cast<Eigen::Index>(values.size()));
  return out;
}

std::uint64_t binomial(int n, int k) {
  if (n < 0 || k < 0 || k > n) {
    throw std::domain_error(fmt::format("binomial({}, {}): need 0 <= k <= n", n, k));
  }
  k = std::min(k, n - k);
  // result * (n - k + i) is always divisible by i, and the intermediate
  // product fits comfortably in 128 bits whenever the result fits in 64.
  uint128 result = 1;
  for (int i = 1; i <= k; ++i) {
    result = result * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
    if (result > std::numeric_limits<std::uint64_t>::max()) {
      throw std::overflow_error(fmt::format("binomial({}, {}) exceeds 64 bits", n, k));
    }
  }
  return static_cast<std::uint64_t>(result);
}

double bernstein(int n, int i, double t) {
  if (n < 0 || i < 0 || i > n) {
    throw std::domain_error(fmt::format("bernstein: index {} outside [0, {}]", i, n));
  }
  require_unit_parameter(t);
  // std::pow(0.0, 0) == 1, which gives the exact endpoint values.
  return static_cast<double>(binomial(n, i)) * std::pow(t, i) * std::pow(1.0 - t, n - i);
}

void require_unit_parameter(double t) {
  if (!(t >= 0.0 && t <= 1.0)) {
    throw std::domain_error(fmt::format("parameter t = {} outside [0, 1]", t));
  }
}

std::vector<std::string> validate(const RationalBezierCurve& curve) {
  std::vector<std::string> problems;
  if (curve.degree < 0) {
    problems.push_back(fmt::format("negative degree {}", curve.degree));
  }
  const auto expected = static_cast<std::size_t>(std::max(curve.degree, 0)) + 1;
  if (curve.points.size() != expected || curve.weights.size() != expected) {
    problems.push_back(fmt::format("length mismatch: degree {} needs {} points and weights, got {} points and {} weights",
                                   curve.degree, expected, curve.points.size(), curve.weights.size()));
  }
  for (std::size_t i = 0; i < curve.weights.size(); ++i) {
    const double w = curve.weights[i];
    if (!std::isfinite(w)) {
      problems.push_back(fmt::format("non-finite weight at {}", i));
    } else if (w <= 0.0) {
      problems.push_back(fmt::format("nonpositive weight at {}", i));
    }
  }
  if (!curve.points.empty() && curve.points.front().size() == 0) {
    problems.push_back("points have dimension 0");
  }
  for (std::size_t i = 0; i < curve.points.size(); ++i) {
    const auto& p = curve.points[i];
    if (p.size() != curve.points.front().size()) {
      problems.push_back(fmt::format("dimension mismatch at point {}: {} vs {}", i, p.size(), curve.points.front().size()));
    }
    if (!p.allFinite()) {
      problems.push_back(fmt::format("non-finite coordinate in point {}", i));
    }
  }
  return problems;
}

void require_valid(const RationalBezierCurve& curve) {
  auto problems = validate(curve);
  if (!problems.empty()) throw InvalidCurve(std::move(problems));
}

Eigen::VectorXd de_casteljau(const Eigen::MatrixXd& coeffs, double t, Eigen::MatrixXd& scratch) {
  if (coeffs.cols() == 0) throw std::domain_error("de_casteljau: empty coefficient list");
  scratch = coeffs;
  const double s = 1.0 - t;
  for (Eigen::Index level = coeffs.cols() - 1; level > 0; --level) {
    for (Eigen::Index i = 0; i < level; ++i) {
      scratch.col(i) = s * scratch.col(i) + t * scratch.col(i + 1);
    }
  }
  return scratch.col(0);
}

Eigen::VectorXd de_casteljau(const BernsteinCoefficients& coeffs, double t) {
  Eigen::MatrixXd scratch;
  return de_casteljau(coeffs.coefficients, t, scratch);
}

Eigen::MatrixXd homogeneous_net(const RationalBezierCurve& curve) {
  const int d = curve.dimension();
  Eigen::MatrixXd net(d + 1, curve.degree + 1);
  for (int i = 0; i <= curve.degree; ++i) {
    net.col(i).head(d) = curve.weights[i] * curve.points[i];
    net(d, i) = curve.weights[i];
  }
  return net;
}

double eval_weight(const RationalBezierCurve& curve, double t) {
  require_valid(curve);
  require_unit_parameter(t);
  return de_casteljau(BernsteinCoefficients::scalar(curve.weights), t)(0);
}

Point eval_point(const RationalBezierCurve& curve, double t) {
  require_valid(curve);
  require_unit_parameter(t);
  // Endpoints interpolate exactly; the homogeneous division would otherwise
  // round ω_0 p_0 / ω_0.
  if (t == 0.0) return curve.points.front();
  if (t == 1.0) return curve.points.back();
  Eigen::MatrixXd scratch;
  const Eigen::VectorXd h = de_casteljau(homogeneous_net(curve), t, scratch);
  const int d = curve.dimension();
  return h.head(d) / h(d);
}

BernsteinCoefficients elevate_once(const BernsteinCoefficients& coeffs) {
  const Eigen::Index cols = coeffs.coefficients.cols();
  if (cols == 0) throw std::domain_error("elevate_once: empty coefficient list");
  const Eigen::Index m = cols - 1;
  BernsteinCoefficients out;
  out.coefficients.resize(coeffs.coefficients.rows(), m + 2);
  out.coefficients.col(0) = coeffs.coefficients.col(0);
  out.coefficients.col(m + 1) = coeffs.coefficients.col(m);
  const double denom = static_cast<double>(m + 1);
  for (Eigen::Index i = 1; i <= m; ++i) {
    const double a = static_cast<double>(i) / denom;
    out.coefficients.col(i) = a * coeffs.coefficients.col(i - 1) + (1.0 - a) * coeffs.coefficients.col(i);
  }
  return out;
}

}  // namespace ratbez
