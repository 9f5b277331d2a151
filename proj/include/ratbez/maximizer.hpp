#pragma once

#include "ratbez/bezier.hpp"

namespace ratbez {

struct MaximizerResult {
  double max_value = 0.0;
  double argmax_t = 0.0;
  int grid_size = 0;
  bool refined = false;
  int iterations = 0;  // golden-section iterations
};

struct MaximizerOptions {
  int grid_size = 100000;
  double tol = 1e-10;
};

/// Locates sup_{t in [0,1]} ‖r'(t)‖₂.
///
/// Samples the derivative norm on grid_size + 1 uniform points, then runs a
/// golden-section search on the grid cells adjacent to the best sample until
/// the bracket is narrower than tol. Deterministic. Throws std::domain_error
/// for grid_size < 3 or tol outside (0, 1).
MaximizerResult maximize_derivative_norm(const RationalBezierCurve& curve, MaximizerOptions options = {});

}  // namespace ratbez
