#include "ratbez/derivative.hpp"

#include <algorithm>
#include <stdexcept>

#include <fmt/format.h>

namespace ratbez {

namespace {

double binom(int n, int k) { return static_cast<double>(binomial(n, k)); }

void require_differentiable(const RationalBezierCurve& curve) {
  require_valid(curve);
  if (curve.degree < 1) throw std::domain_error("derivative of a point (degree 0 curve)");
}

}  // namespace

Eigen::MatrixXd DerivativeForm::homogeneous_net() const {
  const int d = dimension();
  Eigen::MatrixXd net(d + 1, numerator_points.cols());
  net.topRows(d) = static_cast<double>(source_degree) * numerator_points;
  net.row(d) = Eigen::Map<const Eigen::RowVectorXd>(weights1.data(), static_cast<Eigen::Index>(weights1.size()));
  return net;
}

RationalBezierCurve DerivativeForm::as_curve() const {
  RationalBezierCurve curve;
  curve.degree = degree();
  curve.weights = weights1;
  for (Eigen::Index i = 0; i < control_points.cols(); ++i) curve.points.emplace_back(control_points.col(i));
  return curve;
}

SederbergNumerator sederberg_terms(const RationalBezierCurve& curve) {
  require_differentiable(curve);
  const int n = curve.degree;
  const auto& w = curve.weights;
  const auto& p = curve.points;
  SederbergNumerator out;
  out.degree = 2 * n - 2;
  out.terms = Eigen::MatrixXd::Zero(curve.dimension(), 2 * n - 1);
  for (int i = 0; i <= 2 * n - 2; ++i) {
    for (int j = std::max(0, i - n + 1); j <= i / 2; ++j) {
      const int k = i - j + 1;
      const double c = (i - 2 * j + 1) * binom(n, j) * binom(n, k) * w[j] * w[k];
      out.terms.col(i) += c * (p[k] - p[j]);
    }
    out.terms.col(i) /= binom(2 * n - 2, i);
  }
  return out;
}

Point eval_derivative_sederberg(const RationalBezierCurve& curve, double t) {
  const SederbergNumerator numer = sederberg_terms(curve);
  const double w = eval_weight(curve, t);
  Eigen::MatrixXd scratch;
  return de_casteljau(numer.terms, t, scratch) / (w * w);
}

std::vector<double> derivative_weights(const RationalBezierCurve& curve) {
  require_differentiable(curve);
  const int n = curve.degree;
  const auto& w = curve.weights;
  std::vector<double> out(2 * n + 1, 0.0);
  for (int i = 0; i <= 2 * n; ++i) {
    for (int j = std::max(0, i - n); j <= std::min(i, n); ++j) {
      out[i] += binom(n, j) * binom(n, i - j) / binom(2 * n, i) * w[j] * w[i - j];
    }
  }
  return out;
}

Eigen::MatrixXd intermediate_points(const RationalBezierCurve& curve) {
  require_differentiable(curve);
  const int n = curve.degree;
  const auto& w = curve.weights;
  const auto& p = curve.points;
  Eigen::MatrixXd out = Eigen::MatrixXd::Zero(curve.dimension(), 2 * n);
  for (int j = 0; j <= 2 * n - 1; ++j) {
    for (int h = std::max(0, j - n); h <= std::min(n - 1, j); ++h) {
      const double c = binom(n - 1, h) * binom(n, j - h) / binom(2 * n - 1, j);
      const int k = j - h;
      out.col(j) += c * (w[h + 1] * w[k] * (p[h + 1] - p[k]) + w[h] * w[k] * (p[k] - p[h]));
    }
  }
  return out;
}

DerivativeForm build_derivative_form(const RationalBezierCurve& curve) {
  DerivativeForm form;
  form.source_degree = curve.degree;
  form.weights1 = derivative_weights(curve);
  form.intermediate_points = intermediate_points(curve);
  form.numerator_points = elevate_once(BernsteinCoefficients{form.intermediate_points}).coefficients;
  form.control_points.resize(form.numerator_points.rows(), form.numerator_points.cols());
  for (Eigen::Index i = 0; i < form.numerator_points.cols(); ++i) {
    form.control_points.col(i) = static_cast<double>(curve.degree) * form.numerator_points.col(i) / form.weights1[i];
  }
  return form;
}

Point eval_derivative_explicit(const Eigen::MatrixXd& homogeneous_net, double t, Eigen::MatrixXd& scratch) {
  require_unit_parameter(t);
  const Eigen::VectorXd h = de_casteljau(homogeneous_net, t, scratch);
  const Eigen::Index d = h.size() - 1;
  return h.head(d) / h(d);
}

Point eval_derivative_explicit(const DerivativeForm& form, double t) {
  Eigen::MatrixXd scratch;
  return eval_derivative_explicit(form.homogeneous_net(), t, scratch);
}

Point finite_difference(const RationalBezierCurve& curve, double t, double h) {
  if (!(h > 0.0)) throw std::domain_error(fmt::format("finite_difference: step h = {} must be positive", h));
  require_unit_parameter(t);
  const auto r = [&](double s) { return eval_point(curve, s); };
  if (t - h >= 0.0 && t + h <= 1.0) {
    return (r(t + h) - r(t - h)) / (2.0 * h);
  }
  if (t + 2.0 * h <= 1.0) {
    return (-3.0 * r(t) + 4.0 * r(t + h) - r(t + 2.0 * h)) / (2.0 * h);
  }
  if (t - 2.0 * h >= 0.0) {
    return (3.0 * r(t) - 4.0 * r(t - h) + r(t - 2.0 * h)) / (2.0 * h);
  }
  throw std::domain_error(fmt::format("finite_difference: step h = {} too large for [0, 1]", h));
}

}  // namespace ratbez
