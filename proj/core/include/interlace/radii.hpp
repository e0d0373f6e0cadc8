#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "interlace/modulus.hpp"
#include "interlace/rational.hpp"

namespace interlace {

/// Integer radii 0 = r_0 < r_1 < ... < r_K with r_{n+1} >= 2 r_n. Negative
/// indices read as 0.
class RadiiLadder {
 public:
  /// Throws Error{kPrecondition} unless radii[0] == 0, the list is strictly
  /// increasing and each radius at least doubles the previous one.
  explicit RadiiLadder(std::vector<std::int64_t> radii);

  std::int64_t operator[](std::int64_t n) const;
  /// Largest valid index K.
  std::int64_t top() const noexcept { return static_cast<std::int64_t>(radii_.size()) - 1; }
  const std::vector<std::int64_t>& radii() const noexcept { return radii_; }

  /// rho(r_{n+1}) > 2 omega(r_n) for every consecutive pair.
  bool separates(const StepModulus& rho, const StepModulus& omega) const;

 private:
  std::vector<std::int64_t> radii_;
};

/// Greedy minimal ladder r_0 .. r_count: each r_{n+1} is the least integer
/// with r_{n+1} >= max(2 r_n, r_n + 1) and rho(r_{n+1}) > 2 omega(r_n).
/// Throws Error{kRhoBounded} when rho can never exceed 2 omega(r_n).
RadiiLadder choose_radii(const StepModulus& rho, const StepModulus& omega, std::size_t count);

/// Piecewise-linear bump a_n: 0 outside (r_{n-4}, r_n), rising linearly on
/// [r_{n-4}, r_{n-3}), equal to 1 on [r_{n-3}, r_{n-1}], falling linearly on
/// (r_{n-1}, r_n]. Requires 1 <= n <= top and t >= 0.
Rational bump(std::int64_t n, const RadiiLadder& ladder, const Rational& t);

}  // namespace interlace
