#pragma once

#include "ratbez/bezier.hpp"

namespace ratbez {

/// Numerator of the degree-(2n-2) hodograph form
///
///   r'(t) = Σ_i B_i^{2n-2}(t) D_i / ω(t)^2.
///
/// terms.col(i) holds D_i.
struct SederbergNumerator {
  int degree = 0;
  Eigen::MatrixXd terms;
};

/// Degree-2n rational representation of r'(t):
///
///   r'(t) = n Σ P̂_i B_i^{2n}(t) / Σ ω1_i B_i^{2n}(t)
///         = Σ Q_i ω1_i B_i^{2n}(t) / Σ ω1_i B_i^{2n}(t).
///
/// ω1 are the Bernstein coefficients of ω(t)^2. P̂ is the degree-2n elevation
/// of the degree-(2n-1) intermediate points. All point sequences are stored
/// column-wise.
struct DerivativeForm {
  int source_degree = 0;
  std::vector<double> weights1;
  Eigen::MatrixXd intermediate_points;  // d x 2n
  Eigen::MatrixXd numerator_points;     // d x (2n+1), P̂
  Eigen::MatrixXd control_points;       // d x (2n+1), Q

  int degree() const { return 2 * source_degree; }
  int dimension() const { return static_cast<int>(numerator_points.rows()); }

  /// Homogeneous net (n P̂_i, ω1_i), the input to evaluation and elevation.
  Eigen::MatrixXd homogeneous_net() const;

  /// The form as a curve of degree 2n with points Q and weights ω1.
  RationalBezierCurve as_curve() const;
};

/// D_i for i = 0..2n-2. Throws std::domain_error for n = 0.
///
/// Uses the difference (p_{i-j+1} - p_j); the frequently reprinted variant
/// with p_i in place of p_j agrees only for n = 1.
SederbergNumerator sederberg_terms(const RationalBezierCurve& curve);

Point eval_derivative_sederberg(const RationalBezierCurve& curve, double t);

/// Degree-2n Bernstein coefficients of ω(t)^2.
std::vector<double> derivative_weights(const RationalBezierCurve& curve);

/// P_j for j = 0..2n-1, column-wise.
Eigen::MatrixXd intermediate_points(const RationalBezierCurve& curve);

DerivativeForm build_derivative_form(const RationalBezierCurve& curve);

/// Rational de Casteljau on (n P̂_i, ω1_i).
Point eval_derivative_explicit(const DerivativeForm& form, double t);

/// Allocation-free variant for repeated evaluation of the same net.
Point eval_derivative_explicit(const Eigen::MatrixXd& homogeneous_net, double t, Eigen::MatrixXd& scratch);

/// Central difference (r(t+h) - r(t-h)) / 2h; second-order one-sided
/// stencils where the central stencil would leave [0, 1].
Point finite_difference(const RationalBezierCurve& curve, double t, double h);

}  // namespace ratbez
