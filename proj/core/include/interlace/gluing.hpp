#pragma once

#include <algorithm>
#include <array>
#include <concepts>
#include <cstdint>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

#include "interlace/error.hpp"
#include "interlace/modulus.hpp"
#include "interlace/radii.hpp"
#include "interlace/rational.hpp"

namespace interlace {

/// Hypothesis of the gluing construction: for every radius R there is a map
/// h_R from the ball R*B_X into M with h_R(0) = m0 and
///   rho(|x-y|) <= d(h_R(x), h_R(y)) <= omega(|x-y|)   on that ball.
/// X needs a norm, scalar multiplication and differences; M a distance.
template <class P>
concept BallEmbeddingProvider =
    requires(const P& p, const typename P::Domain& x, const typename P::Target& m,
             const Rational& s, std::int64_t radius) {
      { p.norm(x) } -> std::convertible_to<Rational>;
      { p.scale(s, x) } -> std::convertible_to<typename P::Domain>;
      { p.difference(x, x) } -> std::convertible_to<typename P::Domain>;
      { p.embed(radius, x) } -> std::convertible_to<typename P::Target>;
      { p.distance(m, m) } -> std::convertible_to<Rational>;
      { p.basepoint() } -> std::convertible_to<typename P::Target>;
      { p.rho() } -> std::convertible_to<const StepModulus&>;
      { p.omega() } -> std::convertible_to<const StepModulus&>;
    };

/// Index n = 4l + i of the bump used by coordinate i at norm t: the unique
/// l >= 0 with r_{4(l-1)+i} <= t < r_{4l+i}. Throws
/// Error{kLadderTooShort} when the ladder ends first.
std::int64_t glue_window(const RadiiLadder& ladder, int coordinate, const Rational& t);

/// F(x) = (F0(x), F1(x), F2(x), F3(x)) with
///   F_i(x) = h_{r_n}(a_n(|x|) x),  n = glue_window(ladder, i, |x|).
template <BallEmbeddingProvider P>
std::array<typename P::Target, 4> glue(const P& provider, const RadiiLadder& ladder,
                                       const typename P::Domain& x) {
  const Rational t = provider.norm(x);
  std::array<typename P::Target, 4> out;
  for (int i = 0; i < 4; ++i) {
    const std::int64_t n = glue_window(ladder, i, t);
    out[static_cast<std::size_t>(i)] = provider.embed(ladder[n], provider.scale(bump(n, ladder, t), x));
  }
  return out;
}

/// Max-metric on M^4.
template <BallEmbeddingProvider P>
Rational glued_distance(const P& provider, const std::array<typename P::Target, 4>& a,
                        const std::array<typename P::Target, 4>& b) {
  Rational best = 0;
  for (std::size_t i = 0; i < 4; ++i) best = std::max(best, provider.distance(a[i], b[i]));
  return best;
}

struct GluePairResult {
  Rational norm_gap;  // t = |x - y|
  Rational distance;  // d_{M^4}(F(x), F(y))
  Rational lower;     // rho(t/2) / 2
  std::optional<Rational> upper;  // 8 omega(3t), nullopt when infinite
  std::optional<Rational> ratio;  // distance / t, when t > 0
  bool lower_ok = true;
  bool upper_ok = true;
};

struct GlueReport {
  std::vector<GluePairResult> pairs;
  std::vector<std::size_t> violations;  // indices into pairs

  bool passed() const noexcept { return violations.empty(); }
};

/// Checks rho(t/2)/2 <= d(F(x), F(y)) <= 8 omega(3t) for every sample pair.
/// Violations mean the provider does not meet its hypothesis, or a bug.
template <BallEmbeddingProvider P>
GlueReport verify_glue(const P& provider, const RadiiLadder& ladder,
                       const std::vector<std::pair<typename P::Domain, typename P::Domain>>& samples,
                       unsigned jobs = 1) {
  GlueReport report;
  report.pairs.resize(samples.size());
  const auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t k = begin; k < end; ++k) {
      const auto& [x, y] = samples[k];
      GluePairResult& r = report.pairs[k];
      r.norm_gap = provider.norm(provider.difference(x, y));
      r.distance = glued_distance(provider, glue(provider, ladder, x), glue(provider, ladder, y));
      r.lower = provider.rho()(r.norm_gap / Rational(2)) / Rational(2);
      r.lower_ok = r.lower <= r.distance;
      if (auto w = provider.omega().value(Rational(3) * r.norm_gap)) {
        r.upper = Rational(8) * *w;
        r.upper_ok = r.distance <= *r.upper;
      }
      if (r.norm_gap.sign() > 0) r.ratio = r.distance / r.norm_gap;
    }
  };
  jobs = std::max(1U, jobs);
  if (jobs == 1 || samples.size() < 2) {
    work(0, samples.size());
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (samples.size() + jobs - 1) / jobs;
    for (std::size_t begin = 0; begin < samples.size(); begin += chunk) {
      workers.emplace_back(work, begin, std::min(samples.size(), begin + chunk));
    }
  }
  for (std::size_t k = 0; k < report.pairs.size(); ++k) {
    if (!report.pairs[k].lower_ok || !report.pairs[k].upper_ok) report.violations.push_back(k);
  }
  return report;
}

/// X = M = Q^d with the max norm, h_R(x) = factor * x on every ball, and
/// declared moduli rho, omega. With factor 1 and rho = omega = identity the
/// hypothesis holds exactly; other factors make a deliberately dishonest
/// provider for negative tests.
class LinearBallProvider {
 public:
  using Domain = std::vector<Rational>;
  using Target = std::vector<Rational>;

  LinearBallProvider(std::size_t dimension, Rational factor = 1,
                     StepModulus rho = StepModulus::identity(),
                     StepModulus omega = StepModulus::identity());

  Rational norm(const Domain& x) const;
  Domain scale(const Rational& s, const Domain& x) const;
  Domain difference(const Domain& x, const Domain& y) const;
  /// Throws Error{kPrecondition} if x lies outside the ball of `radius`.
  Target embed(std::int64_t radius, const Domain& x) const;
  Rational distance(const Target& a, const Target& b) const;
  Target basepoint() const { return Target(dimension_, Rational(0)); }
  const StepModulus& rho() const noexcept { return rho_; }
  const StepModulus& omega() const noexcept { return omega_; }
  std::size_t dimension() const noexcept { return dimension_; }

 private:
  std::size_t dimension_;
  Rational factor_;
  StepModulus rho_;
  StepModulus omega_;
};

static_assert(BallEmbeddingProvider<LinearBallProvider>);

/// `count` pairs of points of Q^d with max-norm at most `radius`. Each
/// coordinate is p/q with q uniform in 1..8; fully determined by `seed`.
std::vector<std::pair<LinearBallProvider::Domain, LinearBallProvider::Domain>> sample_ball_pairs(
    std::size_t dimension, std::int64_t radius, std::size_t count, std::uint64_t seed);

}  // namespace interlace
