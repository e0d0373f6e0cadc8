#include "interlace/metric.hpp"

#include <algorithm>
#include <set>

namespace interlace {

std::optional<std::size_t> FiniteMetric::index_of(const std::string& label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::optional<MetricViolation> find_metric_violation(std::span<const std::string> labels,
                                                     const DistanceMatrix& matrix) {
  const std::size_t n = labels.size();
  if (n == 0) {
    return MetricViolation{ErrorCode::kShapeMismatch, 0, 0, 0, "metric space has no points"};
  }
  if (matrix.size() != n) {
    return MetricViolation{ErrorCode::kShapeMismatch, 0, 0, 0,
                           "matrix has " + std::to_string(matrix.size()) + " rows for " +
                               std::to_string(n) + " labels"};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (matrix[i].size() != n) {
      return MetricViolation{ErrorCode::kShapeMismatch, i, 0, 0,
                             "row " + labels[i] + " has " + std::to_string(matrix[i].size()) +
                                 " entries, expected " + std::to_string(n)};
    }
  }
  if (std::set<std::string>(labels.begin(), labels.end()).size() != n) {
    return MetricViolation{ErrorCode::kShapeMismatch, 0, 0, 0, "labels are not distinct"};
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!matrix[i][i].is_zero()) {
      return MetricViolation{ErrorCode::kNonzeroDiagonal, i, i, 0,
                             "d(" + labels[i] + "," + labels[i] + ") = " + matrix[i][i].str()};
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix[i][j] != matrix[j][i]) {
        return MetricViolation{ErrorCode::kAsymmetric, i, j, 0,
                               "d(" + labels[i] + "," + labels[j] + ") = " + matrix[i][j].str() +
                                   " but d(" + labels[j] + "," + labels[i] +
                                   ") = " + matrix[j][i].str()};
      }
    }
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (matrix[i][j].sign() <= 0) {
        return MetricViolation{ErrorCode::kNonpositiveDistance, i, j, 0,
                               "d(" + labels[i] + "," + labels[j] + ") = " + matrix[i][j].str()};
      }
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t z = x + 1; z < n; ++z) {
      for (std::size_t y = 0; y < n; ++y) {
        if (y == x || y == z) continue;
        if (matrix[x][z] > matrix[x][y] + matrix[y][z]) {
          return MetricViolation{ErrorCode::kTriangleViolation, x, y, z,
                                 "(" + labels[x] + "," + labels[y] + "," + labels[z] + "): d(" +
                                     labels[x] + "," + labels[z] + ") = " + matrix[x][z].str() +
                                     " > " + (matrix[x][y] + matrix[y][z]).str()};
        }
      }
    }
  }
  return std::nullopt;
}

FiniteMetric validate_metric(std::vector<std::string> labels, DistanceMatrix matrix) {
  if (auto v = find_metric_violation(labels, matrix)) throw MetricError(std::move(*v));
  return FiniteMetric(std::move(labels), std::move(matrix));
}

namespace {

void require_two_points(const FiniteMetric& m) {
  if (m.size() < 2) {
    throw Error(ErrorCode::kSingletonSpace, "need at least two points, have " +
                                                std::to_string(m.size()));
  }
}

}  // namespace

Rational diam(const FiniteMetric& m) {
  require_two_points(m);
  Rational best = m.d(0, 1);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) best = std::max(best, m.d(i, j));
  return best;
}

Rational sep(const FiniteMetric& m) {
  require_two_points(m);
  Rational best = m.d(0, 1);
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) best = std::min(best, m.d(i, j));
  return best;
}

Rational aspect_ratio(const FiniteMetric& m) { return diam(m) / sep(m); }

}  // namespace interlace
