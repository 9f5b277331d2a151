#include "ratbez/curve_json.hpp"

#include <istream>
#include <ostream>

#include <json.hpp>

namespace ratbez {

using nlohmann::json;

namespace {

RationalBezierCurve from_json(const json& doc) {
  if (!doc.is_object()) throw CurveFormatError("curve document must be a JSON object");
  for (const char* key : {"degree", "points", "weights"}) {
    if (!doc.contains(key)) throw CurveFormatError(std::string("curve document lacks \"") + key + "\"");
  }
  if (!doc["degree"].is_number_integer()) throw CurveFormatError("\"degree\" must be an integer");
  if (!doc["points"].is_array() || !doc["weights"].is_array()) {
    throw CurveFormatError("\"points\" and \"weights\" must be arrays");
  }
  RationalBezierCurve curve;
  curve.degree = doc["degree"].get<int>();
  for (const auto& w : doc["weights"]) {
    if (!w.is_number()) throw CurveFormatError("weights must be numbers");
    curve.weights.push_back(w.get<double>());
  }
  for (const auto& p : doc["points"]) {
    if (!p.is_array()) throw CurveFormatError("each point must be an array of coordinates");
    Point point(static_cast<Eigen::Index>(p.size()));
    for (std::size_t k = 0; k < p.size(); ++k) {
      if (!p[k].is_number()) throw CurveFormatError("coordinates must be numbers");
      point(static_cast<Eigen::Index>(k)) = p[k].get<double>();
    }
    curve.points.push_back(std::move(point));
  }
  return curve;
}

json to_json(const RationalBezierCurve& curve) {
  json points = json::array();
  for (const auto& p : curve.points) points.push_back(std::vector<double>(p.data(), p.data() + p.size()));
  return json{{"degree", curve.degree}, {"points", std::move(points)}, {"weights", curve.weights}};
}

}  // namespace

RationalBezierCurve read_curve_json(std::istream& in) {
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& ex) {
    throw CurveFormatError(std::string("malformed curve JSON: ") + ex.what());
  }
  return from_json(doc);
}

RationalBezierCurve parse_curve_json(const std::string& text) {
  json doc = json::parse(text, nullptr, false);
  if (doc.is_discarded()) throw CurveFormatError("malformed curve JSON");
  return from_json(doc);
}

void write_curve_json(std::ostream& out, const RationalBezierCurve& curve) { out << to_json(curve).dump() << '\n'; }

std::string curve_to_json(const RationalBezierCurve& curve) { return to_json(curve).dump(); }

}  // namespace ratbez
