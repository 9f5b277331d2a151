#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "ratbez/bezier.hpp"

namespace ratbez {

/// Raised when a curve document is not well-formed JSON of the expected shape.
/// Invariant violations (bad weights, mismatched lengths) are left to validate().
class CurveFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Reads { "degree": n, "points": [[x, y, ...], ...], "weights": [...] }.
RationalBezierCurve read_curve_json(std::istream& in);
RationalBezierCurve parse_curve_json(const std::string& text);

/// Writes the same format; doubles are emitted with round-trip precision.
void write_curve_json(std::ostream& out, const RationalBezierCurve& curve);
std::string curve_to_json(const RationalBezierCurve& curve);

}  // namespace ratbez
