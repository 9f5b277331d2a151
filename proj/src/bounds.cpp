#include "ratbez/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <fmt/format.h>

namespace ratbez {

namespace {

struct NetMax {
  double value;
  int index;
};

// Max of ‖numerator_i‖_p / weight_i over a homogeneous net; first index wins ties.
NetMax net_max(const Eigen::MatrixXd& net, NormOrder p) {
  const Eigen::Index d = net.rows() - 1;
  NetMax best{-1.0, 0};
  for (Eigen::Index i = 0; i < net.cols(); ++i) {
    const double ratio = vector_norm(net.col(i).head(d), p) / net(d, i);
    if (ratio > best.value) best = {ratio, static_cast<int>(i)};
  }
  return best;
}

}  // namespace

double vector_norm(const Eigen::Ref<const Eigen::VectorXd>& v, NormOrder p) {
  switch (p) {
    case NormOrder::L1: return v.lpNorm<1>();
    case NormOrder::L2: return v.norm();
    case NormOrder::Linf: return v.size() ? v.lpNorm<Eigen::Infinity>() : 0.0;
  }
  return v.norm();
}

NormOrder parse_norm_order(std::string_view text) {
  if (text == "1") return NormOrder::L1;
  if (text == "2") return NormOrder::L2;
  if (text == "inf" || text == "infinity") return NormOrder::Linf;
  throw std::invalid_argument(fmt::format("unknown norm order '{}' (expected 1, 2 or inf)", text));
}

std::string_view to_string(NormOrder p) {
  switch (p) {
    case NormOrder::L1: return "1";
    case NormOrder::L2: return "2";
    case NormOrder::Linf: return "inf";
  }
  return "?";
}

std::string_view to_string(BoundMethod m) {
  return m == BoundMethod::Conjecture ? "conjecture" : "elevation";
}

double weight_ratio(const RationalBezierCurve& curve) {
  require_valid(curve);
  if (curve.degree < 1) throw std::domain_error("weight_ratio needs degree >= 1");
  double ratio = 1.0;
  for (int i = 0; i < curve.degree; ++i) {
    const double a = curve.weights[i];
    const double b = curve.weights[i + 1];
    ratio = std::max({ratio, a / b, b / a});
  }
  return ratio;
}

BoundReport conjecture_bound(const RationalBezierCurve& curve, NormOrder p) {
  const double ratio = weight_ratio(curve);
  double max_leg = 0.0;
  for (int i = 0; i < curve.degree; ++i) {
    max_leg = std::max(max_leg, vector_norm(curve.points[i + 1] - curve.points[i], p));
  }
  BoundReport report;
  report.method = BoundMethod::Conjecture;
  report.norm_order = p;
  report.weight_ratio = ratio;
  report.value = curve.degree * ratio * max_leg;
  return report;
}

BoundReport elevation_bound(const DerivativeForm& form, int e, NormOrder p) {
  if (e < 0) throw std::domain_error(fmt::format("elevation steps e = {} must be >= 0", e));
  BernsteinCoefficients net{form.homogeneous_net()};
  for (int step = 0; step < e; ++step) net = elevate_once(net);
  const NetMax best = net_max(net.coefficients, p);
  BoundReport report;
  report.method = BoundMethod::Elevation;
  report.norm_order = p;
  report.elevation_steps = e;
  report.argmax_index = best.index;
  report.value = best.value;
  return report;
}

std::vector<std::pair<int, double>> bound_profile(const DerivativeForm& form, std::span<const int> e_list,
                                                  NormOrder p) {
  std::vector<std::pair<int, double>> out;
  out.reserve(e_list.size());
  BernsteinCoefficients net{form.homogeneous_net()};
  int current = 0;
  for (std::size_t k = 0; k < e_list.size(); ++k) {
    const int e = e_list[k];
    if (e < 0) throw std::domain_error(fmt::format("elevation steps e = {} must be >= 0", e));
    if (k > 0 && e <= e_list[k - 1]) throw std::domain_error("bound_profile: e_list must be strictly increasing");
    for (; current < e; ++current) net = elevate_once(net);
    out.emplace_back(e, net_max(net.coefficients, p).value);
  }
  return out;
}

}  // namespace ratbez
