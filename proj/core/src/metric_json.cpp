#include "interlace/metric_json.hpp"

#include <nlohmann/json.hpp>

namespace interlace {

namespace {

Rational rational_from_json(const nlohmann::json& v) {
  if (v.is_string()) return Rational::parse(v.get<std::string>());
  if (v.is_number_integer()) return Rational(v.get<std::int64_t>());
  throw Error(ErrorCode::kParseError, "distance entries must be rational strings, got " + v.dump());
}

}  // namespace

FiniteMetric parse_metric_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::kParseError, e.what());
  }
  if (!doc.is_object() || !doc.contains("labels") || !doc.contains("dist") ||
      !doc["labels"].is_array() || !doc["dist"].is_array()) {
    throw Error(ErrorCode::kParseError, "metric JSON needs array fields 'labels' and 'dist'");
  }
  std::vector<std::string> labels;
  for (const auto& l : doc["labels"]) {
    if (!l.is_string()) throw Error(ErrorCode::kParseError, "labels must be strings");
    labels.push_back(l.get<std::string>());
  }
  DistanceMatrix matrix;
  for (const auto& row : doc["dist"]) {
    if (!row.is_array()) throw Error(ErrorCode::kParseError, "'dist' rows must be arrays");
    auto& out = matrix.emplace_back();
    for (const auto& v : row) out.push_back(rational_from_json(v));
  }
  return validate_metric(std::move(labels), std::move(matrix));
}

std::string metric_to_json(const FiniteMetric& m) {
  nlohmann::json doc;
  doc["labels"] = m.labels();
  doc["dist"] = nlohmann::json::array();
  for (const auto& row : m.matrix()) {
    auto jrow = nlohmann::json::array();
    for (const auto& v : row) jrow.push_back(v.str());
    doc["dist"].push_back(std::move(jrow));
  }
  return doc.dump();
}

}  // namespace interlace
