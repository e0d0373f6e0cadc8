#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "interlace/finset.hpp"
#include "interlace/finsupp.hpp"
#include "interlace/rational.hpp"

namespace interlace {

/// Bimonotone summing norm: the largest |a_k + ... + a_m| over all index
/// intervals [k, m]. Computed as (max prefix sum) - (min prefix sum), with
/// the empty prefix included.
Rational summing_norm(const FinSuppSeq& a);

/// Same norm evaluated only over runs of constant sign: the sequence is cut
/// into maximal same-sign blocks and the sup is taken over unions of
/// consecutive blocks.
Rational summing_norm_sign_blocks(const FinSuppSeq& a);

/// Summing distance between finite sets:
/// max over intervals E of |#(A n E) - #(B n E)|, i.e.
/// summing_norm(1_A - 1_B). Linear in #(A u B).
std::int64_t d_sum(const FinSet& a, const FinSet& b);

/// d_sum evaluated over the intervals [x_i, x_j] whose endpoints lie in the
/// symmetric difference {x_1 < ... < x_l}. Quadratic; kept as a second route.
std::int64_t d_sum_endpoints(const FinSet& a, const FinSet& b);

/// Interlacing-graph adjacency. With A = {a_1..a_n}, B = {b_1..b_m}, A != B:
///   (i)   n = m+1, a_i <= b_i <= a_{i+1}         (1 <= i <= m)
///   (ii)  m = n+1, b_i <= a_i <= b_{i+1}         (1 <= i <= n)
///   (iii) n = m,   a_i <= b_i <= a_{i+1} (i < n), a_n <= b_n
///   (iv)  n = m,   b_i <= a_i <= b_{i+1} (i < n), b_n <= a_n
/// and the empty set is adjacent to every singleton.
bool is_adjacent(const FinSet& a, const FinSet& b);

/// All neighbours of `c` in the interlacing graph whose elements lie in
/// `universe` (sorted, and containing c). Generated from the adjacency rules
/// directly, without enumerating the universe's power set.
std::vector<FinSet> neighbours_within(const FinSet& c, const FinSet& universe);

/// Graph distance by breadth-first search over the subsets of A u B.
/// Throws Error{kBudgetExceeded} when #(A u B) exceeds kMaxBfsUniverse.
std::int64_t bfs_distance(const FinSet& a, const FinSet& b);
inline constexpr std::size_t kMaxBfsUniverse = 24;

struct GeodesicPath {
  std::vector<FinSet> vertices;

  std::size_t length() const noexcept { return vertices.empty() ? 0 : vertices.size() - 1; }
  const FinSet& front() const { return vertices.front(); }
  const FinSet& back() const { return vertices.back(); }
};

/// Shortest path from A to B in the interlacing graph, built one step at a
/// time by the shift construction:
///  - if one set contains the other, drop the largest element of the larger
///    set's excess (or, at the B end, of B's excess);
///  - otherwise orient so that min(A ^ B) lies on the moving side, shift
///    every x_i in A with x_{i+1} in B one place right (onto x_{i+1}), and
///    also drop x_l when some tail [x_j, x_l] already realises the distance.
/// Each step lowers d_sum by exactly one, so length == d_sum(A, B); when
/// #A == #B every vertex keeps that cardinality.
GeodesicPath geodesic(const FinSet& a, const FinSet& b);

/// Appends the common tail {max+1, ..., max+(m-k)} to every set of an
/// equal-cardinality family, leaving pairwise d_sum unchanged.
/// Throws Error{kCardinalityMismatch} or Error{kMTooSmall}.
std::vector<FinSet> lift_cardinality(std::span<const FinSet> family, std::size_t m);

/// True iff #A == #A', A != A' and a_1 <= a'_1 <= a_2 <= ... <= a_n <= a'_n.
/// The name follows the literature; the elements move to larger values.
bool is_left_shift(const FinSet& a, const FinSet& shifted);

}  // namespace interlace
