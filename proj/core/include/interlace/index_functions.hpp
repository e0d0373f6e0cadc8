#pragma once

#include <cstdint>
#include <vector>

#include "interlace/finset.hpp"

namespace interlace {

/// Finite prefix f(1..N) of a map in the class I: f(1) = 0 and
/// f(n) <= f(n+1) <= f(n) + 1. The condition f -> infinity cannot be checked
/// on a prefix; `tends_to_infinity` only records the caller's intent.
class IndexFunction {
 public:
  /// Throws Error{kNotInClass} if the prefix breaks a class condition.
  explicit IndexFunction(std::vector<std::int64_t> prefix, bool tends_to_infinity = true);

  /// f(n) for 1 <= n <= length().
  std::int64_t operator()(std::int64_t n) const;
  std::int64_t length() const noexcept { return static_cast<std::int64_t>(prefix_.size()); }
  const std::vector<std::int64_t>& prefix() const noexcept { return prefix_; }
  bool tends_to_infinity() const noexcept { return tends_to_infinity_; }

 private:
  std::vector<std::int64_t> prefix_;
  bool tends_to_infinity_;
};

/// Finite prefix f(0..N) of a map in the class J: f(0) = 0 and
/// f(n+1) >= f(n) + 1.
class StrictIndexFunction {
 public:
  /// Throws Error{kNotInClass} if the prefix breaks a class condition.
  explicit StrictIndexFunction(std::vector<std::int64_t> prefix);

  /// f(n) for 0 <= n <= length().
  std::int64_t operator()(std::int64_t n) const;
  /// Largest stored index N.
  std::int64_t length() const noexcept { return static_cast<std::int64_t>(prefix_.size()) - 1; }
  const std::vector<std::int64_t>& prefix() const noexcept { return prefix_; }

 private:
  std::vector<std::int64_t> prefix_;
};

/// {n : f(n+1) > f(n)} for 1 <= n < length().
FinSet j_of(const IndexFunction& f);

/// #{a in A : a < n}. Requires n >= 1.
std::int64_t j_inv(const FinSet& a, std::int64_t n);

/// Rebuilds the prefix f(1..length) from j_of(f).
IndexFunction j_inv_prefix(const FinSet& a, std::int64_t length);

/// The image {f(1), ..., f(N)}.
FinSet k_of(const StrictIndexFunction& f);

/// n-th smallest element of A, with k_inv(A, 0) = 0. Throws
/// Error{kPrecondition} if A has fewer than n elements.
std::int64_t k_inv(const FinSet& a, std::int64_t n);

}  // namespace interlace
