#include "interlace/interlacing.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <stdexcept>

#include "interlace/error.hpp"

namespace interlace {

Rational summing_norm(const FinSuppSeq& a) {
  Rational prefix = 0;
  Rational hi = 0;
  Rational lo = 0;
  for (const auto& [i, v] : a.entries()) {
    prefix += v;
    if (prefix > hi) hi = prefix;
    if (prefix < lo) lo = prefix;
  }
  return hi - lo;
}

Rational summing_norm_sign_blocks(const FinSuppSeq& a) {
  std::vector<Rational> blocks;
  int last_sign = 0;
  for (const auto& [i, v] : a.entries()) {
    if (v.sign() == last_sign) {
      blocks.back() += v;
    } else {
      blocks.push_back(v);
      last_sign = v.sign();
    }
  }
  Rational best = 0;
  for (std::size_t k = 0; k < blocks.size(); ++k) {
    Rational run = 0;
    for (std::size_t l = k; l < blocks.size(); ++l) {
      run += blocks[l];
      best = std::max(best, abs(run));
    }
  }
  return best;
}

std::int64_t d_sum(const FinSet& a, const FinSet& b) {
  std::int64_t prefix = 0, hi = 0, lo = 0;
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && *ia < *ib)) {
      ++prefix;
      ++ia;
    } else if (ia == a.end() || *ib < *ia) {
      --prefix;
      ++ib;
    } else {
      ++ia;
      ++ib;
      continue;
    }
    hi = std::max(hi, prefix);
    lo = std::min(lo, prefix);
  }
  return hi - lo;
}

std::int64_t d_sum_endpoints(const FinSet& a, const FinSet& b) {
  const FinSet x = symmetric_difference(a, b);
  std::int64_t best = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i; j < x.size(); ++j) {
      const auto in_a = static_cast<std::int64_t>(a.count_in(x[i], x[j]));
      const auto in_b = static_cast<std::int64_t>(b.count_in(x[i], x[j]));
      best = std::max(best, in_a > in_b ? in_a - in_b : in_b - in_a);
    }
  }
  return best;
}

namespace {

// a interlaces b from below: a_i <= b_i <= a_{i+1} for every i where both
// sides exist, checked for i < bound.
bool interlaces(const FinSet& a, const FinSet& b, std::size_t bound) {
  for (std::size_t i = 0; i < bound; ++i) {
    if (a[i] > b[i]) return false;
    if (i + 1 < a.size() && b[i] > a[i + 1]) return false;
  }
  return true;
}

}  // namespace

bool is_adjacent(const FinSet& a, const FinSet& b) {
  if (a == b) return false;
  const std::size_t n = a.size(), m = b.size();
  if ((n == 0 && m == 1) || (n == 1 && m == 0)) return true;
  if (n == m + 1) return interlaces(a, b, m);  // (i)
  if (m == n + 1) return interlaces(b, a, n);  // (ii)
  if (n == m) {
    // (iii): a_i <= b_i <= a_{i+1} for i < n, and a_n <= b_n.
    if (interlaces(a, b, n)) return true;
    // (iv): the same with the roles swapped.
    return interlaces(b, a, n);
  }
  return false;
}

namespace {

using Mask = std::uint32_t;

// Candidate neighbours are strictly increasing position sequences with the
// i-th position in [lo[i], hi[i]] (inclusive, positions in the universe).
void enumerate_bounded(const std::vector<int>& lo, const std::vector<int>& hi, std::size_t idx,
                       int min_pos, Mask acc, std::vector<Mask>& out) {
  if (idx == lo.size()) {
    out.push_back(acc);
    return;
  }
  for (int p = std::max(lo[idx], min_pos); p <= hi[idx]; ++p) {
    enumerate_bounded(lo, hi, idx + 1, p + 1, acc | (Mask{1} << p), out);
  }
}

// Positions of c inside a universe of size u, as a neighbour list of masks.
void neighbour_masks(const std::vector<int>& c, int u, std::vector<Mask>& out) {
  const std::size_t n = c.size();
  const int top = u - 1;
  std::vector<int> lo, hi;
  const auto run = [&] { enumerate_bounded(lo, hi, 0, 0, 0, out); };

  if (n >= 1) {
    // (i): drop to n-1 elements with c_i <= b_i <= c_{i+1}.
    lo.assign(n - 1, 0);
    hi.assign(n - 1, 0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
      lo[i] = c[i];
      hi[i] = c[i + 1];
    }
    run();
    // (iii): same size, c_i <= b_i <= c_{i+1}, c_n <= b_n.
    lo.assign(n, 0);
    hi.assign(n, 0);
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = c[i];
      hi[i] = i + 1 < n ? c[i + 1] : top;
    }
    run();
    // (iv): same size, b_1 <= c_1, c_{i-1} <= b_i <= c_i.
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = i == 0 ? 0 : c[i - 1];
      hi[i] = c[i];
    }
    run();
  }
  // (ii): grow to n+1 elements, b_1 <= c_1, c_{i-1} <= b_i <= c_i, b_{n+1} >= c_n.
  // For n == 0 this is the empty-set-to-singleton rule.
  lo.assign(n + 1, 0);
  hi.assign(n + 1, top);
  for (std::size_t i = 0; i < n; ++i) {
    hi[i] = c[i];
    lo[i + 1] = c[i];
  }
  run();
}

std::vector<int> positions_of(const FinSet& s, const FinSet& universe) {
  std::vector<int> pos;
  pos.reserve(s.size());
  auto elems = universe.elements();
  for (auto x : s) {
    auto it = std::lower_bound(elems.begin(), elems.end(), x);
    if (it == elems.end() || *it != x) {
      throw Error(ErrorCode::kPrecondition, "set is not contained in the universe");
    }
    pos.push_back(static_cast<int>(it - elems.begin()));
  }
  return pos;
}

Mask mask_of(const std::vector<int>& pos) {
  Mask m = 0;
  for (int p : pos) m |= Mask{1} << p;
  return m;
}

std::vector<int> positions_of_mask(Mask m) {
  std::vector<int> pos;
  for (int p = 0; m; ++p, m >>= 1) {
    if (m & 1U) pos.push_back(p);
  }
  return pos;
}

}  // namespace

std::vector<FinSet> neighbours_within(const FinSet& c, const FinSet& universe) {
  if (universe.size() > kMaxBfsUniverse) {
    throw Error(ErrorCode::kBudgetExceeded, "universe larger than " +
                                                std::to_string(kMaxBfsUniverse) + " elements");
  }
  const auto own = positions_of(c, universe);
  const Mask self = mask_of(own);
  std::vector<Mask> masks;
  neighbour_masks(own, static_cast<int>(universe.size()), masks);
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<FinSet> out;
  for (Mask m : masks) {
    if (m != self) out.push_back(FinSet::from_mask(universe.elements(), m));
  }
  return out;
}

std::int64_t bfs_distance(const FinSet& a, const FinSet& b) {
  if (a == b) return 0;
  const FinSet universe = set_union(a, b);
  const std::size_t u = universe.size();
  if (u > kMaxBfsUniverse) {
    throw Error(ErrorCode::kBudgetExceeded, "BFS universe larger than " +
                                                std::to_string(kMaxBfsUniverse) + " elements");
  }
  const Mask start = mask_of(positions_of(a, universe));
  const Mask goal = mask_of(positions_of(b, universe));

  std::vector<std::int8_t> dist(std::size_t{1} << u, -1);
  std::deque<Mask> queue{start};
  dist[start] = 0;
  std::vector<Mask> scratch;
  while (!queue.empty()) {
    const Mask cur = queue.front();
    queue.pop_front();
    scratch.clear();
    neighbour_masks(positions_of_mask(cur), static_cast<int>(u), scratch);
    for (Mask next : scratch) {
      if (dist[next] >= 0) continue;
      dist[next] = static_cast<std::int8_t>(dist[cur] + 1);
      if (next == goal) return dist[next];
      queue.push_back(next);
    }
  }
  // The graph on subsets of a finite universe is connected through the empty
  // set, so the goal is always reached.
  throw std::logic_error("bfs_distance: goal unreachable");
}

namespace {

// One step of the shift construction. Requires min(a ^ b) in a and neither
// set containing the other.
FinSet shift_toward(const FinSet& a, const FinSet& b) {
  const FinSet x = symmetric_difference(a, b);
  const std::size_t l = x.size();
  const std::int64_t m = d_sum(a, b);

  std::vector<bool> in_a(l);
  for (std::size_t i = 0; i < l; ++i) in_a[i] = a.contains(x[i]);

  // Case 2: some tail [x_j, x_l] already has #A - #B == m.
  bool tail_realises = false;
  std::int64_t suffix = 0;
  for (std::size_t j = l; j-- > 0;) {
    suffix += in_a[j] ? 1 : -1;
    if (suffix == m) {
      tail_realises = true;
      break;
    }
  }

  std::vector<FinSet::Element> next(a.begin(), a.end());
  std::vector<FinSet::Element> removed, added;
  for (std::size_t i = 0; i + 1 < l; ++i) {
    if (in_a[i] && !in_a[i + 1]) {
      removed.push_back(x[i]);
      added.push_back(x[i + 1]);
    }
  }
  if (tail_realises) removed.push_back(x[l - 1]);

  std::erase_if(next, [&](FinSet::Element e) {
    return std::find(removed.begin(), removed.end(), e) != removed.end();
  });
  next.insert(next.end(), added.begin(), added.end());
  FinSet result(std::move(next));

  if (!is_adjacent(a, result) || d_sum(result, b) != m - 1) {
    throw std::logic_error("geodesic: shift step from " + a.str() + " toward " + b.str() +
                           " produced non-geodesic vertex " + result.str());
  }
  return result;
}

FinSet drop_largest_excess(const FinSet& larger, const FinSet& smaller) {
  const FinSet excess = set_difference(larger, smaller);
  std::vector<FinSet::Element> next(larger.begin(), larger.end());
  std::erase(next, excess.max());
  return FinSet::from_sorted(std::move(next));
}

}  // namespace

GeodesicPath geodesic(const FinSet& a, const FinSet& b) {
  std::vector<FinSet> front{a};
  std::vector<FinSet> back{b};
  while (front.back() != back.back()) {
    const FinSet& x = front.back();
    const FinSet& y = back.back();
    if (y.is_subset_of(x)) {
      front.push_back(drop_largest_excess(x, y));
    } else if (x.is_subset_of(y)) {
      back.push_back(drop_largest_excess(y, x));
    } else if (x.contains(symmetric_difference(x, y).min())) {
      front.push_back(shift_toward(x, y));
    } else {
      back.push_back(shift_toward(y, x));
    }
  }
  GeodesicPath path{std::move(front)};
  path.vertices.insert(path.vertices.end(), std::next(back.rbegin()), back.rend());
  return path;
}

std::vector<FinSet> lift_cardinality(std::span<const FinSet> family, std::size_t m) {
  if (family.empty()) return {};
  const std::size_t k = family.front().size();
  FinSet::Element top = 0;
  for (const auto& s : family) {
    if (s.size() != k) {
      throw Error(ErrorCode::kCardinalityMismatch,
                  "family mixes cardinalities " + std::to_string(k) + " and " +
                      std::to_string(s.size()));
    }
    if (!s.empty()) top = std::max(top, s.max());
  }
  if (m < k) {
    throw Error(ErrorCode::kMTooSmall,
                "target cardinality " + std::to_string(m) + " below " + std::to_string(k));
  }
  std::vector<FinSet> out;
  out.reserve(family.size());
  for (const auto& s : family) {
    std::vector<FinSet::Element> elems(s.begin(), s.end());
    for (std::size_t t = 1; t <= m - k; ++t) elems.push_back(top + static_cast<FinSet::Element>(t));
    out.push_back(FinSet::from_sorted(std::move(elems)));
  }
  return out;
}

bool is_left_shift(const FinSet& a, const FinSet& shifted) {
  if (a.size() != shifted.size() || a == shifted) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] > shifted[i]) return false;
    if (i + 1 < a.size() && shifted[i] > a[i + 1]) return false;
  }
  return true;
}

}  // namespace interlace
