#include "ratbez/maximizer.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

#include "ratbez/derivative.hpp"

namespace ratbez {

MaximizerResult maximize_derivative_norm(const RationalBezierCurve& curve, MaximizerOptions options) {
  if (options.grid_size < 3) {
    throw std::domain_error(fmt::format("grid_size = {} must be >= 3", options.grid_size));
  }
  if (!(options.tol > 0.0 && options.tol < 1.0)) {
    throw std::domain_error(fmt::format("tol = {} must lie in (0, 1)", options.tol));
  }
  const DerivativeForm form = build_derivative_form(curve);
  const Eigen::MatrixXd net = form.homogeneous_net();
  Eigen::MatrixXd scratch;
  const auto g = [&](double t) { return eval_derivative_explicit(net, t, scratch).norm(); };

  MaximizerResult result;
  result.grid_size = options.grid_size;
  const double spacing = 1.0 / options.grid_size;
  int best_k = 0;
  double best_value = -1.0;
  for (int k = 0; k <= options.grid_size; ++k) {
    const double value = g(k == options.grid_size ? 1.0 : k * spacing);
    if (value > best_value) {
      best_value = value;
      best_k = k;
    }
  }
  const double best_t = best_k == options.grid_size ? 1.0 : best_k * spacing;
  result.max_value = best_value;
  result.argmax_t = best_t;

  // Golden section on the two cells around the best sample, clamped to [0, 1].
  constexpr double inv_phi = 0.6180339887498949;
  double a = std::max(0.0, best_t - spacing);
  double b = std::min(1.0, best_t + spacing);
  double c = b - inv_phi * (b - a);
  double d = a + inv_phi * (b - a);
  double gc = g(c);
  double gd = g(d);
  while (b - a >= options.tol) {
    if (gc >= gd) {
      b = d;
      d = c;
      gd = gc;
      c = b - inv_phi * (b - a);
      gc = g(c);
    } else {
      a = c;
      c = d;
      gc = gd;
      d = a + inv_phi * (b - a);
      gd = g(d);
    }
    ++result.iterations;
  }
  const double t_refined = 0.5 * (a + b);
  const double g_refined = g(t_refined);
  result.refined = true;
  if (g_refined >= result.max_value) {
    result.max_value = g_refined;
    result.argmax_t = t_refined;
  }
  return result;
}

}  // namespace ratbez
