#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "interlace/finset.hpp"
#include "interlace/finsupp.hpp"
#include "interlace/ordinal.hpp"
#include "interlace/rational.hpp"

namespace interlace {

// Schreier families S_a for a < w^w:
//   S_0     = singletons
//   S_{a+1} = unions E_1 < ... < E_n of sets in S_a with n <= min E_1
//   S_b     = { A : A in S_{b[n]} for some n <= min A }   (b limit)
// with b[n] the canonical fundamental sequence of OrdinalCNF. The empty set
// belongs to every S_a.

inline constexpr std::size_t kDefaultEnumerationBudget = std::size_t{1} << 22;

/// Exact recursive membership test. Successor levels search over every
/// split of A into consecutive blocks; limit levels try n = 1 .. min A.
bool schreier_member(const FinSet& a, const OrdinalCNF& alpha);

/// S_a restricted to subsets of {1..N}, sorted. Built bottom-up from the
/// recursion (not by filtering the power set). Throws
/// Error{kBudgetExceeded} if any intermediate family exceeds `budget`.
std::vector<FinSet> schreier_enumerate(const OrdinalCNF& alpha, std::int64_t n,
                                       std::size_t budget = kDefaultEnumerationBudget);

/// True iff for every A in S_alpha with A within {1..N}, {l_a : a in A} is in
/// S_beta. Requires alpha < beta and l strictly increasing with length >= N
/// (Error{kPrecondition}).
bool spreading_check(std::span<const std::int64_t> l, const OrdinalCNF& alpha,
                     const OrdinalCNF& beta, std::int64_t n);

/// Greedy search for a prefix l_1 < ... < l_N that passes spreading_check:
/// each entry is the smallest that keeps every finished set inside S_beta.
/// When greedy gets stuck it restarts with the next larger l_1. Throws
/// Error{kSearchExhausted} once l_1 itself would exceed `element_bound`.
std::vector<std::int64_t> spreading_search(const OrdinalCNF& alpha, const OrdinalCNF& beta,
                                           std::int64_t n, std::int64_t element_bound = 4096);

/// A point sum_{i in G} c_i e_i of c_00 with support G in a Schreier family.
struct SchreierPoint {
  FinSuppSeq coords;

  FinSet support() const { return coords.support(); }
  friend bool operator==(const SchreierPoint&, const SchreierPoint&) = default;
};

/// Sup-norm distance max_i |f_i - g_i|.
Rational d_inf(const SchreierPoint& f, const SchreierPoint& g);

/// Every point with support in S_alpha within {1..N} and integer
/// coefficients in [-m, m] minus {0}; the zero point (empty support) comes
/// first. Throws Error{kBudgetExceeded} past `budget` points.
std::vector<SchreierPoint> schreier_points(const OrdinalCNF& alpha, std::int64_t n,
                                           std::int64_t m,
                                           std::size_t budget = kDefaultEnumerationBudget);

}  // namespace interlace
