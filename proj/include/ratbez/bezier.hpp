#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace ratbez {

using Point = Eigen::VectorXd;

/// Rational Bezier curve of degree n in R^d.
///
/// The struct is a plain value so that malformed input (e.g. parsed from a
/// file) can be held and reported on by validate(). Every evaluating
/// operation validates its argument and throws InvalidCurve on failure.
struct RationalBezierCurve {
  int degree = 0;
  std::vector<Point> points;
  std::vector<double> weights;

  int dimension() const { return points.empty() ? 0 : static_cast<int>(points.front().size()); }
};

/// Coefficients of a polynomial in Bernstein form of degree m.
///
/// Stored column-wise: column i is the i-th coefficient. Scalar polynomials
/// use a single row, vector-valued ones one row per coordinate.
struct BernsteinCoefficients {
  Eigen::MatrixXd coefficients;

  int degree() const { return static_cast<int>(coefficients.cols()) - 1; }
  int rows() const { return static_cast<int>(coefficients.rows()); }

  static BernsteinCoefficients scalar(const std::vector<double>& values);
};

class InvalidCurve : public std::invalid_argument {
 public:
  explicit InvalidCurve(std::vector<std::string> problems);
  const std::vector<std::string>& problems() const { return problems_; }

 private:
  std::vector<std::string> problems_;
};

/// Exact binomial coefficient C(n, k).
/// Throws std::domain_error if k > n and std::overflow_error if the value
/// does not fit in 64 bits.
std::uint64_t binomial(int n, int k);

/// B_i^n(t) with 0^0 = 1, so endpoints are exact.
double bernstein(int n, int i, double t);

/// Lists every violated curve invariant; an empty list means the curve is valid.
std::vector<std::string> validate(const RationalBezierCurve& curve);

/// Throws InvalidCurve if validate() reports anything.
void require_valid(const RationalBezierCurve& curve);

/// ω(t) = Σ ω_i B_i^n(t), via de Casteljau.
double eval_weight(const RationalBezierCurve& curve, double t);

/// r(t) via rational de Casteljau on homogeneous coordinates (ω_i p_i, ω_i).
Point eval_point(const RationalBezierCurve& curve, double t);

/// Evaluates a Bernstein-form polynomial at t by repeated convex combination.
Eigen::VectorXd de_casteljau(const BernsteinCoefficients& coeffs, double t);

/// Same as above, reusing `scratch` to avoid allocation in tight loops.
Eigen::VectorXd de_casteljau(const Eigen::MatrixXd& coeffs, double t, Eigen::MatrixXd& scratch);

/// Rewrites a degree-m Bernstein form as the identical degree-(m+1) form.
BernsteinCoefficients elevate_once(const BernsteinCoefficients& coeffs);

/// Homogeneous control net: rows 0..d-1 hold ω_i p_i, row d holds ω_i.
Eigen::MatrixXd homogeneous_net(const RationalBezierCurve& curve);

/// Throws std::domain_error unless 0 <= t <= 1.
void require_unit_parameter(double t);

}  // namespace ratbez
