#include "interlace/radii.hpp"

#include "interlace/error.hpp"

namespace interlace {

RadiiLadder::RadiiLadder(std::vector<std::int64_t> radii) : radii_(std::move(radii)) {
  if (radii_.empty() || radii_.front() != 0) {
    throw Error(ErrorCode::kPrecondition, "ladder must start at r_0 = 0");
  }
  for (std::size_t i = 1; i < radii_.size(); ++i) {
    if (radii_[i] <= radii_[i - 1] || radii_[i] < 2 * radii_[i - 1]) {
      throw Error(ErrorCode::kPrecondition,
                  "ladder radii must increase and at least double: r_" + std::to_string(i) +
                      " = " + std::to_string(radii_[i]));
    }
  }
}

std::int64_t RadiiLadder::operator[](std::int64_t n) const {
  if (n <= 0) return 0;
  if (n > top()) {
    throw Error(ErrorCode::kLadderTooShort, "radius index " + std::to_string(n) +
                                                " beyond ladder top " + std::to_string(top()));
  }
  return radii_[static_cast<std::size_t>(n)];
}

bool RadiiLadder::separates(const StepModulus& rho, const StepModulus& omega) const {
  for (std::int64_t n = 0; n < top(); ++n) {
    auto upper = omega.value((*this)[n]);
    if (!upper) return false;
    if (rho.at_most((*this)[n + 1], Rational(2) * *upper)) return false;
  }
  return true;
}

namespace {

// Least integer r >= lo with rho(r) > target.
std::int64_t least_exceeding(const StepModulus& rho, const Rational& target, std::int64_t lo) {
  const auto exceeds = [&](std::int64_t r) { return !rho.at_most(r, target); };
  if (exceeds(lo)) return lo;
  if (!rho.is_unbounded() && *rho.supremum() <= target) {
    throw Error(ErrorCode::kRhoBounded, "compression modulus never exceeds " + target.str());
  }
  std::int64_t below = lo;
  std::int64_t above = lo;
  do {
    below = above;
    if (above > (std::int64_t{1} << 61)) {
      throw Error(ErrorCode::kRhoBounded, "ladder radius overflow while exceeding " + target.str());
    }
    above = above * 2 + 1;
  } while (!exceeds(above));
  while (above - below > 1) {
    const std::int64_t mid = below + (above - below) / 2;
    (exceeds(mid) ? above : below) = mid;
  }
  return above;
}

}  // namespace

RadiiLadder choose_radii(const StepModulus& rho, const StepModulus& omega, std::size_t count) {
  if (count < 1) throw Error(ErrorCode::kPrecondition, "ladder needs at least one radius");
  std::vector<std::int64_t> radii{0};
  for (std::size_t n = 0; n < count; ++n) {
    const std::int64_t prev = radii.back();
    auto upper = omega.value(prev);
    if (!upper) throw Error(ErrorCode::kRhoBounded, "expansion modulus is infinite");
    radii.push_back(least_exceeding(rho, Rational(2) * *upper, std::max(2 * prev, prev + 1)));
  }
  return RadiiLadder(std::move(radii));
}

Rational bump(std::int64_t n, const RadiiLadder& ladder, const Rational& t) {
  if (n < 1 || n > ladder.top()) {
    throw Error(ErrorCode::kLadderTooShort, "bump index " + std::to_string(n) +
                                                " outside 1.." + std::to_string(ladder.top()));
  }
  const Rational r4(ladder[n - 4]), r3(ladder[n - 3]), r1(ladder[n - 1]), r0(ladder[n]);
  if (t < r4 || t > r0) return 0;
  if (t < r3) return (t - r4) / (r3 - r4);
  if (t <= r1) return 1;
  return (r0 - t) / (r0 - r1);
}

}  // namespace interlace
