#pragma once

#include <string>
#include <string_view>

#include "interlace/metric.hpp"

namespace interlace {

/// Reads {"labels": [...], "dist": [["0","2"],["2","0"]]}. Rationals are
/// "p" or "p/q" strings (bare JSON integers are accepted too) and are
/// normalized to lowest terms. Throws Error{kParseError} on malformed JSON
/// and MetricError when the matrix is not a metric.
FiniteMetric parse_metric_json(std::string_view text);

std::string metric_to_json(const FiniteMetric& m);

}  // namespace interlace
