#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "interlace/error.hpp"
#include "interlace/rational.hpp"

namespace interlace {

using DistanceMatrix = std::vector<std::vector<Rational>>;

/// The first metric axiom a candidate matrix breaks. For a triangle
/// violation, (i, j, k) reads d(i, k) > d(i, j) + d(j, k).
struct MetricViolation {
  ErrorCode code;
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t k = 0;
  std::string message;
};

class MetricError : public Error {
 public:
  explicit MetricError(MetricViolation v) : Error(v.code, v.message), violation_(std::move(v)) {}
  const MetricViolation& violation() const noexcept { return violation_; }

 private:
  MetricViolation violation_;
};

/// A labeled finite metric space with exact distances. Only constructible
/// through validate_metric, so every instance satisfies the metric axioms.
class FiniteMetric {
 public:
  std::size_t size() const noexcept { return labels_.size(); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(const std::string& label) const;

  const Rational& d(std::size_t i, std::size_t j) const { return dist_[i][j]; }
  const DistanceMatrix& matrix() const noexcept { return dist_; }

  friend bool operator==(const FiniteMetric&, const FiniteMetric&) = default;

 private:
  friend FiniteMetric validate_metric(std::vector<std::string>, DistanceMatrix);
  FiniteMetric(std::vector<std::string> labels, DistanceMatrix dist)
      : labels_(std::move(labels)), dist_(std::move(dist)) {}

  std::vector<std::string> labels_;
  DistanceMatrix dist_;
};

/// Checks shape, zero diagonal, symmetry, positivity and every triangle, in
/// that order, and reports the first failure.
std::optional<MetricViolation> find_metric_violation(std::span<const std::string> labels,
                                                     const DistanceMatrix& matrix);

/// Throws MetricError carrying the first violation.
FiniteMetric validate_metric(std::vector<std::string> labels, DistanceMatrix matrix);

Rational diam(const FiniteMetric& m);
Rational sep(const FiniteMetric& m);
Rational aspect_ratio(const FiniteMetric& m);

}  // namespace interlace
