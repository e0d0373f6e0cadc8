#include <algorithm>

#include <gtest/gtest.h>

#include "expect_error.hpp"
#include "interlace/ordinal.hpp"
#include "interlace/schreier.hpp"
#include "oracles.hpp"

using namespace interlace;
using interlace::testing::brute_schreier_member;
using interlace::testing::subsets_of;

namespace {

OrdinalCNF ord(const char* text) { return ordinal_parse(text); }

const std::vector<const char*> kAlphas{"0", "1", "2", "3", "w", "w+1", "w*2", "w^2"};

}  // namespace

TEST(Ordinal, ParseAndPrint) {
  const auto a = ord("w*2+3");
  EXPECT_EQ(a.str(), "w*2+3");
  EXPECT_FALSE(a.is_limit());
  EXPECT_TRUE(a.is_successor());
  EXPECT_EQ(ord("w^2*3+w+5").str(), "w^2*3+w+5");
  EXPECT_EQ(ord("0").str(), "0");
  EXPECT_TRUE(ord("w^3").is_limit());
  EXPECT_ERROR_CODE(ord("w^"), ErrorCode::kParseError);
  EXPECT_ERROR_CODE(ord("x"), ErrorCode::kParseError);
  EXPECT_ERROR_CODE(ord("w+"), ErrorCode::kParseError);
}

TEST(Ordinal, NormalizesWithWarning) {
  std::vector<std::string> warnings;
  EXPECT_EQ(ordinal_parse("1+w", &warnings), ord("w"));
  EXPECT_EQ(warnings.size(), 1U);
  warnings.clear();
  EXPECT_EQ(ordinal_parse("w+w", &warnings), ord("w*2"));
  EXPECT_EQ(warnings.size(), 1U);
  warnings.clear();
  ordinal_parse("w*2+1", &warnings);
  ordinal_parse("0", &warnings);
  EXPECT_TRUE(warnings.empty());
}

TEST(Ordinal, Comparison) {
  EXPECT_TRUE(ord("5") < ord("w"));
  EXPECT_TRUE(ord("w*3+7") < ord("w^2"));
  EXPECT_TRUE(ord("w^2+1") > ord("w^2"));
  EXPECT_EQ(ordinal_cmp(ord("w+1"), ord("w+1")), std::strong_ordering::equal);
  for (std::size_t i = 0; i + 1 < kAlphas.size(); ++i) EXPECT_LT(ord(kAlphas[i]), ord(kAlphas[i + 1]));
}

TEST(Ordinal, FundamentalSequences) {
  EXPECT_EQ(fundamental_seq(ord("w"), 4), OrdinalCNF::finite(4));
  EXPECT_EQ(fundamental_seq(ord("w^2"), 3), ord("w*3"));
  EXPECT_EQ(fundamental_seq(ord("w*2"), 5), ord("w+5"));
  EXPECT_EQ(fundamental_seq(ord("w^3*2"), 2), ord("w^3+w^2*2"));
  EXPECT_EQ(fundamental_seq(ord("w^2+w"), 6), ord("w^2+6"));
  EXPECT_ERROR_CODE(fundamental_seq(ord("w+1"), 2), ErrorCode::kNotLimit);
  EXPECT_ERROR_CODE(fundamental_seq(ord("0"), 2), ErrorCode::kNotLimit);
  for (std::uint64_t n = 1; n < 6; ++n) {
    EXPECT_LT(fundamental_seq(ord("w^2*2"), n), fundamental_seq(ord("w^2*2"), n + 1));
    EXPECT_LT(fundamental_seq(ord("w^2*2"), n), ord("w^2*2"));
  }
}

TEST(Ordinal, Arithmetic) {
  EXPECT_EQ(ord("3") + ord("w"), ord("w"));
  EXPECT_EQ(ord("w") + ord("3"), ord("w+3"));
  EXPECT_EQ(ord("w*2+1").predecessor(), ord("w*2"));
}

TEST(SchreierMember, Examples) {
  EXPECT_TRUE(schreier_member(FinSet{2, 3}, ord("1")));
  EXPECT_FALSE(schreier_member(FinSet{1, 2}, ord("1")));
  EXPECT_TRUE(schreier_member(FinSet{2, 3, 4, 5}, ord("2")));
  for (const char* a : kAlphas) {
    EXPECT_TRUE(schreier_member(FinSet{}, ord(a)));
    for (std::int64_t n = 1; n <= 9; ++n) EXPECT_TRUE(schreier_member(FinSet{n}, ord(a)));
  }
  EXPECT_TRUE(schreier_member(FinSet{3, 4, 5}, ord("w")));
  EXPECT_FALSE(schreier_member(FinSet{1, 2}, ord("w")));
}

TEST(SchreierMember, MatchesBruteUnfolding) {
  for (const char* a : kAlphas) {
    const auto alpha = ord(a);
    for (const auto& s : subsets_of(8)) {
      ASSERT_EQ(schreier_member(FinSet::from_sorted(s), alpha), brute_schreier_member(s, alpha))
          << a << ' ' << FinSet::from_sorted(s);
    }
  }
}

TEST(SchreierEnumerate, Examples) {
  EXPECT_EQ(schreier_enumerate(ord("0"), 3), (std::vector<FinSet>{FinSet{}, FinSet{1}, FinSet{2}, FinSet{3}}));
  EXPECT_EQ(schreier_enumerate(ord("1"), 3),
            (std::vector<FinSet>{FinSet{}, FinSet{1}, FinSet{2}, FinSet{2, 3}, FinSet{3}}));
  for (std::int64_t n = 1; n <= 10; ++n) EXPECT_EQ(schreier_enumerate(ord("1"), n).size(), interlace::testing::count_s1(n));
  EXPECT_ERROR_CODE(schreier_enumerate(ord("w"), 12, 10), ErrorCode::kBudgetExceeded);
}

TEST(SchreierEnumerate, AgreesWithMembershipFilter) {
  for (const char* a : kAlphas) {
    const auto alpha = ord(a);
    for (std::int64_t n = 1; n <= 8; ++n) {
      std::vector<FinSet> want;
      for (const auto& s : subsets_of(n)) {
        if (schreier_member(FinSet::from_sorted(s), alpha)) want.push_back(FinSet::from_sorted(s));
      }
      std::sort(want.begin(), want.end());
      ASSERT_EQ(schreier_enumerate(alpha, n), want) << a << " N=" << n;
    }
  }
}

TEST(SchreierMember, HereditaryUnderSpreads) {
  const auto sets = subsets_of(8);
  for (const char* a : kAlphas) {
    const auto alpha = ord(a);
    std::vector<bool> in(sets.size());
    for (std::size_t i = 0; i < sets.size(); ++i) in[i] = schreier_member(FinSet::from_sorted(sets[i]), alpha);
    for (std::size_t i = 0; i < sets.size(); ++i) {
      if (!in[i]) continue;
      for (std::size_t j = 0; j < sets.size(); ++j) {
        if (sets[j].size() != sets[i].size()) continue;
        bool spread = true;
        for (std::size_t k = 0; k < sets[i].size(); ++k) spread = spread && sets[j][k] >= sets[i][k];
        if (spread) ASSERT_TRUE(in[j]) << a << ' ' << FinSet::from_sorted(sets[j]);
      }
    }
  }
}

TEST(Spreading, Examples) {
  const std::vector<std::int64_t> id{1, 2, 3};
  const bool identity_ok = spreading_check(id, ord("1"), ord("2"), 3);
  // S_1 on {1..3} lies inside S_2 already.
  EXPECT_TRUE(identity_ok);
  const auto l = spreading_search(ord("1"), ord("2"), 3);
  EXPECT_TRUE(spreading_check(l, ord("1"), ord("2"), 3));
  EXPECT_EQ(spreading_search(ord("0"), ord("w"), 1), std::vector<std::int64_t>{1});
  EXPECT_ERROR_CODE(spreading_check(id, ord("2"), ord("2"), 3), ErrorCode::kPrecondition);
  EXPECT_ERROR_CODE(spreading_search(ord("w"), ord("2"), 3), ErrorCode::kPrecondition);
}

TEST(Spreading, SearchOutputAlwaysChecks) {
  const std::vector<std::pair<const char*, const char*>> pairs{
      {"0", "1"}, {"1", "2"}, {"2", "3"}, {"1", "w"}, {"w", "w+1"}, {"w+1", "w*2"}, {"w*2", "w^2"}};
  for (const auto& [a, b] : pairs) {
    for (std::int64_t n = 1; n <= 6; ++n) {
      const auto l = spreading_search(ord(a), ord(b), n);
      ASSERT_GE(l.size(), static_cast<std::size_t>(n));
      EXPECT_TRUE(spreading_check(l, ord(a), ord(b), n)) << a << ' ' << b << ' ' << n;
    }
  }
}

TEST(Spreading, CheckRejectsBadMap) {
  // {2..8} lies in S_3 but not in S_w, so the identity does not spread S_3
  // into S_w on {1..8}.
  EXPECT_TRUE(schreier_member(FinSet::interval(2, 8), ord("3")));
  EXPECT_FALSE(schreier_member(FinSet::interval(2, 8), ord("w")));
  const std::vector<std::int64_t> id{1, 2, 3, 4, 5, 6, 7, 8};
  EXPECT_FALSE(spreading_check(id, ord("3"), ord("w"), 8));
  const auto l = spreading_search(ord("3"), ord("w"), 8);
  EXPECT_TRUE(spreading_check(l, ord("3"), ord("w"), 8));
  EXPECT_NE(l, id);
}

TEST(SchreierPoints, DistanceAndCount) {
  SchreierPoint f, g;
  f.coords.set(2, 2);
  g.coords.set(3, -1);
  EXPECT_EQ(d_inf(f, g), Rational(2));
  EXPECT_EQ(d_inf(f, f), Rational(0));
  const auto pts = schreier_points(ord("0"), 2, 1);
  EXPECT_EQ(pts.size(), 5U);
  EXPECT_TRUE(pts.front().coords.is_zero());
  EXPECT_ERROR_CODE(schreier_points(ord("w"), 10, 3, 50), ErrorCode::kBudgetExceeded);
}

TEST(SchreierPoints, MetricAxioms) {
  const auto pts = schreier_points(ord("1"), 4, 2);
  for (const auto& p : pts) {
    EXPECT_TRUE(schreier_member(p.support(), ord("1")));
    for (const auto& [i, c] : p.coords.entries()) EXPECT_LE(abs(c), Rational(2));
  }
  for (const auto& a : pts) {
    for (const auto& b : pts) {
      const auto ab = d_inf(a, b);
      ASSERT_EQ(ab, d_inf(b, a));
      ASSERT_EQ(ab.is_zero(), a == b);
      for (const auto& c : pts) ASSERT_LE(d_inf(a, c), ab + d_inf(b, c));
    }
  }
}
