#include <random>

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "interlace/gluing.hpp"
#include "interlace/index_functions.hpp"
#include "interlace/radii.hpp"

using namespace interlace;

namespace {

using Point = LinearBallProvider::Domain;

// Piecewise-linear bump written out from its four breakpoints.
Rational ref_bump(const std::vector<std::int64_t>& r, std::int64_t n, const Rational& t) {
  const auto at = [&](std::int64_t k) { return Rational(k <= 0 ? 0 : r[static_cast<std::size_t>(k)]); };
  const Rational a = at(n - 4), b = at(n - 3), c = at(n - 1), d = at(n);
  if (t <= a || t >= d) return (t >= b && t <= c) ? Rational(1) : Rational(0);
  if (t < b) return (t - a) / (b - a);
  if (t <= c) return 1;
  return (d - t) / (d - c);
}

Point pt(std::initializer_list<Rational> xs) { return Point(xs); }

}  // namespace

TEST(Radii, IdentityLadder) {
  const auto l = choose_radii(StepModulus::identity(), StepModulus::identity(), 6);
  EXPECT_EQ(l.radii(), (std::vector<std::int64_t>{0, 1, 3, 7, 15, 31, 63}));
  EXPECT_TRUE(l.separates(StepModulus::identity(), StepModulus::identity()));
}

TEST(Radii, HalfRhoLadder) {
  const auto rho = StepModulus::linear(Rational(1, 2));
  const auto l = choose_radii(rho, StepModulus::identity(), 3);
  EXPECT_EQ(l.radii(), (std::vector<std::int64_t>{0, 1, 5, 21}));
  EXPECT_TRUE(l.separates(rho, StepModulus::identity()));
}

TEST(Radii, StepModuliAndErrors) {
  const StepModulus rho(0, {{Rational(10), Rational(50)}, {Rational(100), Rational(1000)}});
  const auto omega = StepModulus::linear(2);
  // Only the jumps of rho can beat 2 omega. After 400 the target 2 omega(400)
  // exceeds every value rho takes.
  EXPECT_EQ(choose_radii(rho, omega, 5).radii(), (std::vector<std::int64_t>{0, 10, 20, 100, 200, 400}));
  EXPECT_ERROR_CODE(choose_radii(rho, omega, 6), ErrorCode::kRhoBounded);
  EXPECT_ERROR_CODE(RadiiLadder({0, 2, 3}), ErrorCode::kPrecondition);
  EXPECT_ERROR_CODE(RadiiLadder({1, 2}), ErrorCode::kPrecondition);
}

TEST(Radii, LadderInvariants) {
  const std::vector<StepModulus> moduli{StepModulus::identity(), StepModulus::linear(3),
                                        StepModulus(0, {{Rational(1), Rational(2)}}, Rational(1, 3))};
  for (const auto& rho : moduli) {
    for (const auto& omega : moduli) {
      const auto l = choose_radii(rho, omega, 8);
      for (std::int64_t n = 0; n < l.top(); ++n) {
        EXPECT_GE(l[n + 1], 2 * l[n]);
        EXPECT_GT(rho(l[n + 1]), Rational(2) * omega(l[n]));
        // Minimality: the integer below fails one of the two conditions.
        const std::int64_t below = l[n + 1] - 1;
        EXPECT_TRUE(below < std::max(2 * l[n], l[n] + 1) || !(rho(below) > Rational(2) * omega(l[n])));
      }
    }
  }
}

TEST(Bump, Examples) {
  const RadiiLadder l({0, 1, 3, 7, 15, 31, 63});
  EXPECT_EQ(bump(5, l, 3), Rational(1));   // r_{n-3} = r_2 = 3
  EXPECT_EQ(bump(5, l, 31), Rational(0));  // r_n
  EXPECT_EQ(bump(5, l, 23), Rational(1, 2));
  EXPECT_EQ(bump(5, l, 1), Rational(0));
  EXPECT_EQ(bump(5, l, 2), Rational(1, 2));
  EXPECT_EQ(bump(1, l, 0), Rational(1));   // r_{-2} = r_0 = 0 plateau start
  EXPECT_ERROR_CODE(bump(0, l, 1), ErrorCode::kLadderTooShort);
  EXPECT_ERROR_CODE(bump(7, l, 1), ErrorCode::kLadderTooShort);
}

TEST(Bump, MatchesBreakpointFormula) {
  const RadiiLadder l({0, 1, 3, 7, 15, 31, 63, 127});
  for (std::int64_t n = 1; n <= l.top(); ++n) {
    for (std::int64_t num = 0; num <= 4 * 130; ++num) {
      const Rational t(num, 4);
      const Rational v = bump(n, l, t);
      ASSERT_EQ(v, ref_bump(l.radii(), n, t)) << n << ' ' << t;
      ASSERT_GE(v, Rational(0));
      ASSERT_LE(v, Rational(1));
    }
  }
}

TEST(Glue, WindowsTile) {
  const RadiiLadder l({0, 1, 3, 7, 15, 31, 63, 127, 255, 511, 1023});
  for (int i = 0; i < 4; ++i) {
    for (std::int64_t num = 0; num < 4 * 63; ++num) {
      const Rational t(num, 4);
      int hits = 0;
      for (std::int64_t ll = 0; 4 * ll + i <= l.top(); ++ll) {
        const std::int64_t n = 4 * ll + i;
        if (n >= 1 && Rational(l[n - 4]) <= t && t < Rational(l[n])) ++hits;
      }
      ASSERT_EQ(hits, 1) << i << ' ' << t;
      const auto n = glue_window(l, i, t);
      ASSERT_EQ(n % 4, i);
    }
  }
  EXPECT_ERROR_CODE(glue_window(l, 0, 1023), ErrorCode::kLadderTooShort);
}

TEST(Glue, BasepointAndPlateau) {
  const LinearBallProvider p(2);
  const auto l = choose_radii(p.rho(), p.omega(), 12);
  const auto zero = glue(p, l, pt({0, 0}));
  for (const auto& c : zero) EXPECT_EQ(c, p.basepoint());
  // |x| = 1 picks the bumps a_4, a_5, a_2, a_3; only a_5 vanishes there.
  const Point x = pt({1, Rational(1, 2)});
  const auto f = glue(p, l, x);
  const std::vector<std::int64_t> windows{4, 5, 2, 3};
  for (int i = 0; i < 4; ++i) EXPECT_EQ(glue_window(l, i, 1), windows[static_cast<std::size_t>(i)]);
  EXPECT_EQ(f[0], x);
  EXPECT_EQ(f[1], p.basepoint());
  EXPECT_EQ(f[2], x);
  EXPECT_EQ(f[3], x);
}

TEST(Glue, LineProviderMatchesDirectEvaluation) {
  const LinearBallProvider p(1);
  const auto l = choose_radii(p.rho(), p.omega(), 10);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<std::int64_t> num(-400, 400);
  for (int trial = 0; trial < 500; ++trial) {
    const Rational x(num(rng), 4), y(num(rng), 4);
    const auto fx = glue(p, l, pt({x}));
    const auto fy = glue(p, l, pt({y}));
    Rational want = 0;
    for (int i = 0; i < 4; ++i) {
      const auto nx = glue_window(l, i, abs(x)), ny = glue_window(l, i, abs(y));
      const Rational gx = ref_bump(l.radii(), nx, abs(x)) * x, gy = ref_bump(l.radii(), ny, abs(y)) * y;
      EXPECT_EQ(fx[static_cast<std::size_t>(i)][0], gx);
      want = std::max(want, abs(gx - gy));
    }
    const Rational d = glued_distance(p, fx, fy);
    EXPECT_EQ(d, want);
    const Rational t = abs(x - y);
    EXPECT_LE(t / Rational(4), d);
    EXPECT_LE(d, Rational(24) * t);
  }
}

TEST(VerifyGlue, IdentityProviderHasNoViolations) {
  const LinearBallProvider p(3);
  const auto l = choose_radii(p.rho(), p.omega(), 14);
  auto samples = sample_ball_pairs(3, 100, 2000, 123);
  samples.emplace_back(pt({1, 2, 3}), pt({1, 2, 3}));
  const auto report = verify_glue(p, l, samples, 4);
  EXPECT_TRUE(report.passed()) << report.violations.size();
  const auto& same = report.pairs.back();
  EXPECT_EQ(same.distance, Rational(0));
  EXPECT_EQ(same.lower, Rational(0));
  EXPECT_EQ(*same.upper, Rational(0));
  EXPECT_FALSE(same.ratio.has_value());
}

TEST(VerifyGlue, JobsDoNotChangeResults) {
  const LinearBallProvider p(2);
  const auto l = choose_radii(p.rho(), p.omega(), 12);
  const auto samples = sample_ball_pairs(2, 50, 300, 9);
  const auto a = verify_glue(p, l, samples, 1), b = verify_glue(p, l, samples, 3);
  ASSERT_EQ(a.pairs.size(), b.pairs.size());
  for (std::size_t k = 0; k < a.pairs.size(); ++k) EXPECT_EQ(a.pairs[k].distance, b.pairs[k].distance);
}

TEST(VerifyGlue, ContractingProviderIsReported) {
  const LinearBallProvider p(3, Rational(1, 100));
  const auto l = choose_radii(p.rho(), p.omega(), 14);
  const auto report = verify_glue(p, l, sample_ball_pairs(3, 100, 500, 4));
  EXPECT_FALSE(report.passed());
  for (auto k : report.violations) {
    EXPECT_FALSE(report.pairs[k].lower_ok);
    EXPECT_TRUE(report.pairs[k].upper_ok);
  }
}

TEST(VerifyGlue, SamplesStayInBall) {
  const LinearBallProvider p(4);
  for (const auto& [x, y] : sample_ball_pairs(4, 7, 500, 77)) {
    EXPECT_LE(p.norm(x), Rational(7));
    EXPECT_LE(p.norm(y), Rational(7));
  }
  EXPECT_EQ(sample_ball_pairs(2, 10, 5, 3)[4].first, sample_ball_pairs(2, 10, 5, 3)[4].first);
  EXPECT_ERROR_CODE(p.embed(1, pt({2, 0, 0, 0})), ErrorCode::kPrecondition);
}

TEST(IndexFunctions, JExamples) {
  const IndexFunction f({0, 0, 1, 1, 2});
  EXPECT_EQ(j_of(f), (FinSet{2, 4}));
  EXPECT_EQ(j_inv(FinSet{2, 4, 6, 8}, 5), 2);
  for (std::int64_t n = 1; n <= f.length(); ++n) EXPECT_EQ(j_inv(j_of(f), n), f(n));
  EXPECT_EQ(j_inv_prefix(j_of(f), 5).prefix(), f.prefix());
  EXPECT_ERROR_CODE(IndexFunction({1, 1}), ErrorCode::kNotInClass);
  EXPECT_ERROR_CODE(IndexFunction({0, 2}), ErrorCode::kNotInClass);
  EXPECT_ERROR_CODE(IndexFunction({0, 1, 0}), ErrorCode::kNotInClass);
  EXPECT_ERROR_CODE(IndexFunction({}), ErrorCode::kNotInClass);
}

TEST(IndexFunctions, KExamples) {
  const StrictIndexFunction f({0, 2, 3, 7});
  EXPECT_EQ(k_of(f), (FinSet{2, 3, 7}));
  for (std::int64_t n = 0; n <= f.length(); ++n) EXPECT_EQ(k_inv(k_of(f), n), f(n));
  EXPECT_ERROR_CODE(k_inv(FinSet{1}, 2), ErrorCode::kPrecondition);
  EXPECT_ERROR_CODE(StrictIndexFunction({0, 1, 1}), ErrorCode::kNotInClass);
  EXPECT_ERROR_CODE(StrictIndexFunction({1, 2}), ErrorCode::kNotInClass);
}
