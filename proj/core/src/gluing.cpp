#include "interlace/gluing.hpp"

#include <random>

namespace interlace {

std::int64_t glue_window(const RadiiLadder& ladder, int coordinate, const Rational& t) {
  if (coordinate < 0 || coordinate > 3) {
    throw Error(ErrorCode::kPrecondition, "gluing coordinate must be in 0..3");
  }
  for (std::int64_t l = 0;; ++l) {
    const std::int64_t n = 4 * l + coordinate;
    if (n > ladder.top()) {
      throw Error(ErrorCode::kLadderTooShort,
                  "norm " + t.str() + " is beyond the ladder's coverage for coordinate " +
                      std::to_string(coordinate));
    }
    if (n >= 1 && Rational(ladder[n - 4]) <= t && t < Rational(ladder[n])) return n;
  }
}

LinearBallProvider::LinearBallProvider(std::size_t dimension, Rational factor, StepModulus rho,
                                       StepModulus omega)
    : dimension_(dimension), factor_(std::move(factor)), rho_(std::move(rho)),
      omega_(std::move(omega)) {
  if (dimension_ == 0) throw Error(ErrorCode::kPrecondition, "dimension must be positive");
}

Rational LinearBallProvider::norm(const Domain& x) const {
  Rational best = 0;
  for (const auto& c : x) best = std::max(best, abs(c));
  return best;
}

LinearBallProvider::Domain LinearBallProvider::scale(const Rational& s, const Domain& x) const {
  Domain out = x;
  for (auto& c : out) c *= s;
  return out;
}

LinearBallProvider::Domain LinearBallProvider::difference(const Domain& x, const Domain& y) const {
  if (x.size() != dimension_ || y.size() != dimension_) {
    throw Error(ErrorCode::kPrecondition, "point has the wrong dimension");
  }
  Domain out(dimension_);
  for (std::size_t i = 0; i < dimension_; ++i) out[i] = x[i] - y[i];
  return out;
}

LinearBallProvider::Target LinearBallProvider::embed(std::int64_t radius, const Domain& x) const {
  if (x.size() != dimension_) throw Error(ErrorCode::kPrecondition, "point has the wrong dimension");
  if (norm(x) > Rational(radius)) {
    throw Error(ErrorCode::kPrecondition, "point outside the ball of radius " + std::to_string(radius));
  }
  return scale(factor_, x);
}

Rational LinearBallProvider::distance(const Target& a, const Target& b) const {
  return norm(difference(a, b));
}

std::vector<std::pair<LinearBallProvider::Domain, LinearBallProvider::Domain>> sample_ball_pairs(
    std::size_t dimension, std::int64_t radius, std::size_t count, std::uint64_t seed) {
  if (radius < 0) throw Error(ErrorCode::kPrecondition, "radius must be nonnegative");
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::int64_t> den_dist(1, 8);
  const auto point = [&] {
    LinearBallProvider::Domain x(dimension);
    for (auto& c : x) {
      const std::int64_t den = den_dist(rng);
      std::uniform_int_distribution<std::int64_t> num_dist(-radius * den, radius * den);
      c = Rational(num_dist(rng), den);
    }
    return x;
  };
  std::vector<std::pair<LinearBallProvider::Domain, LinearBallProvider::Domain>> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    auto x = point();
    out.emplace_back(std::move(x), point());
  }
  return out;
}

}  // namespace interlace
