#pragma once

#include <optional>
#include <string>
#include <vector>

#include "interlace/rational.hpp"

namespace interlace {

/// A nondecreasing map [0, inf) -> [0, inf] used as a compression or
/// expansion modulus: a right-continuous step function plus an optional
/// linear term, or the constant +inf.
///
///   value(t) = (value of the last breakpoint with threshold <= t, or base)
///              + slope * t
class StepModulus {
 public:
  struct Breakpoint {
    Rational threshold;
    Rational value;
  };

  /// Throws Error{kPrecondition} if thresholds are not strictly increasing,
  /// step values decrease, or slope < 0.
  StepModulus(Rational base, std::vector<Breakpoint> breakpoints, Rational slope = 0);

  static StepModulus zero() { return StepModulus(0, {}); }
  static StepModulus linear(Rational slope) { return StepModulus(0, {}, std::move(slope)); }
  static StepModulus identity() { return linear(1); }
  static StepModulus infinite();

  bool is_infinite() const noexcept { return infinite_; }
  /// True when the modulus tends to +inf.
  bool is_unbounded() const noexcept { return infinite_ || slope_.sign() > 0; }
  /// Supremum of a bounded modulus; nullopt when unbounded.
  std::optional<Rational> supremum() const;

  /// nullopt encodes +inf.
  std::optional<Rational> value(const Rational& t) const;
  /// Finite value; throws Error{kPrecondition} on the infinite modulus.
  Rational operator()(const Rational& t) const;

  /// value(t) <= d
  bool at_most(const Rational& t, const Rational& d) const;
  /// d <= value(t)
  bool at_least(const Rational& t, const Rational& d) const;

  const Rational& base() const noexcept { return base_; }
  const std::vector<Breakpoint>& breakpoints() const noexcept { return breakpoints_; }
  const Rational& slope() const noexcept { return slope_; }

  std::string str() const;

 private:
  StepModulus() = default;

  Rational base_;
  std::vector<Breakpoint> breakpoints_;
  Rational slope_;
  bool infinite_ = false;
};

}  // namespace interlace
