#pragma once

#include <optional>
#include <span>
#include <string_view>
#include <utility>
#include <vector>

#include "ratbez/bezier.hpp"
#include "ratbez/derivative.hpp"

namespace ratbez {

enum class NormOrder { L1, L2, Linf };

double vector_norm(const Eigen::Ref<const Eigen::VectorXd>& v, NormOrder p);

/// Parses "1", "2", "inf" (also "infinity"); throws std::invalid_argument.
NormOrder parse_norm_order(std::string_view text);
std::string_view to_string(NormOrder p);

enum class BoundMethod { Conjecture, Elevation };
std::string_view to_string(BoundMethod m);

/// An upper bound on ‖r'(t)‖ over [0, 1] and how it was obtained.
struct BoundReport {
  double value = 0.0;
  BoundMethod method = BoundMethod::Conjecture;
  NormOrder norm_order = NormOrder::L2;
  int elevation_steps = 0;               // elevation only
  std::optional<int> argmax_index;       // elevation only
  std::optional<double> weight_ratio;    // conjecture only
};

/// Largest ratio of adjacent weights, taken in both directions; always >= 1.
double weight_ratio(const RationalBezierCurve& curve);

/// n · weight_ratio · max_i ‖p_{i+1} - p_i‖.
BoundReport conjecture_bound(const RationalBezierCurve& curve, NormOrder p = NormOrder::L2);

/// Max over the control net of the e-times elevated derivative form of
/// ‖n P̂_i‖ / ω1_i. Sound for every e >= 0 and non-increasing in e; ties in
/// the max resolve to the smallest index.
BoundReport elevation_bound(const DerivativeForm& form, int e, NormOrder p = NormOrder::L2);

/// elevation_bound at each entry of a strictly increasing list of e,
/// computed with a single incremental elevation pass.
std::vector<std::pair<int, double>> bound_profile(const DerivativeForm& form, std::span<const int> e_list,
                                                  NormOrder p = NormOrder::L2);

}  // namespace ratbez
