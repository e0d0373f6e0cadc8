#include "interlace/modulus.hpp"

#include <algorithm>

#include "interlace/error.hpp"

namespace interlace {

StepModulus::StepModulus(Rational base, std::vector<Breakpoint> breakpoints, Rational slope)
    : base_(std::move(base)), breakpoints_(std::move(breakpoints)), slope_(std::move(slope)) {
  if (slope_.sign() < 0) throw Error(ErrorCode::kPrecondition, "modulus slope must be >= 0");
  if (base_.sign() < 0) throw Error(ErrorCode::kPrecondition, "modulus base must be >= 0");
  Rational prev = base_;
  for (std::size_t i = 0; i < breakpoints_.size(); ++i) {
    if (breakpoints_[i].threshold.sign() < 0 ||
        (i > 0 && breakpoints_[i].threshold <= breakpoints_[i - 1].threshold)) {
      throw Error(ErrorCode::kPrecondition, "modulus thresholds must be increasing and >= 0");
    }
    if (breakpoints_[i].value < prev) {
      throw Error(ErrorCode::kPrecondition, "modulus values must be nondecreasing");
    }
    prev = breakpoints_[i].value;
  }
}

StepModulus StepModulus::infinite() {
  StepModulus m;
  m.infinite_ = true;
  return m;
}

std::optional<Rational> StepModulus::supremum() const {
  if (is_unbounded()) return std::nullopt;
  return breakpoints_.empty() ? base_ : breakpoints_.back().value;
}

std::optional<Rational> StepModulus::value(const Rational& t) const {
  if (infinite_) return std::nullopt;
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t,
                             [](const Rational& x, const Breakpoint& b) { return x < b.threshold; });
  Rational step = it == breakpoints_.begin() ? base_ : std::prev(it)->value;
  if (slope_.is_zero()) return step;
  return step + slope_ * t;
}

Rational StepModulus::operator()(const Rational& t) const {
  auto v = value(t);
  if (!v) throw Error(ErrorCode::kPrecondition, "infinite modulus has no finite value");
  return *v;
}

bool StepModulus::at_most(const Rational& t, const Rational& d) const {
  auto v = value(t);
  return v && *v <= d;
}

bool StepModulus::at_least(const Rational& t, const Rational& d) const {
  auto v = value(t);
  return !v || d <= *v;
}

std::string StepModulus::str() const {
  if (infinite_) return "inf";
  std::string out = "step(base=" + base_.str();
  for (const auto& b : breakpoints_) out += ", " + b.threshold.str() + "->" + b.value.str();
  if (!slope_.is_zero()) out += ", slope=" + slope_.str();
  return out + ")";
}

}  // namespace interlace
