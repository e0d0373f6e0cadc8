#include "oracles.hpp"

#include <algorithm>
#include <bit>
#include <functional>

namespace interlace::testing {

Rational brute_summing_norm(const FinSuppSeq& a) {
  if (a.is_zero()) return 0;
  const auto lo = a.entries().begin()->first;
  const auto hi = a.entries().rbegin()->first;
  Rational best = 0;
  for (auto k = lo; k <= hi; ++k) {
    for (auto m = k; m <= hi; ++m) {
      Rational s = 0;
      for (auto i = k; i <= m; ++i) s += a.at(i);
      best = std::max(best, abs(s));
    }
  }
  return best;
}

std::int64_t brute_d_sum(const FinSet& a, const FinSet& b) {
  std::int64_t top = 0;
  for (auto x : a) top = std::max(top, x);
  for (auto x : b) top = std::max(top, x);
  std::int64_t best = 0;
  for (std::int64_t k = 1; k <= top; ++k) {
    for (std::int64_t m = k; m <= top; ++m) {
      std::int64_t ca = 0, cb = 0;
      for (auto x : a) ca += (x >= k && x <= m);
      for (auto x : b) cb += (x >= k && x <= m);
      best = std::max(best, ca > cb ? ca - cb : cb - ca);
    }
  }
  return best;
}

bool brute_is_metric(const DistanceMatrix& d) {
  const std::size_t n = d.size();
  for (const auto& row : d) {
    if (row.size() != n) return false;
  }
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (i == j && !d[i][j].is_zero()) return false;
      if (i != j && d[i][j].sign() <= 0) return false;
      if (d[i][j] != d[j][i]) return false;
      for (std::size_t k = 0; k < n; ++k) {
        if (d[i][k] > d[i][j] + d[j][k]) return false;
      }
    }
  }
  return true;
}

bool brute_schreier_member(const std::vector<std::int64_t>& a, const OrdinalCNF& alpha) {
  if (a.empty()) return true;
  if (alpha.is_zero()) return a.size() == 1;
  if (alpha.is_limit()) {
    for (std::int64_t n = 1; n <= a.front(); ++n) {
      if (brute_schreier_member(a, alpha.fundamental(static_cast<std::uint64_t>(n)))) return true;
    }
    return false;
  }
  const OrdinalCNF pred = alpha.predecessor();
  // Every composition of a into consecutive nonempty blocks.
  const std::size_t len = a.size();
  for (std::uint64_t cuts = 0; cuts < (std::uint64_t{1} << (len - 1)); ++cuts) {
    const auto blocks = static_cast<std::int64_t>(std::popcount(cuts)) + 1;
    if (blocks > a.front()) continue;
    bool ok = true;
    std::size_t start = 0;
    for (std::size_t i = 0; i < len && ok; ++i) {
      const bool cut_after = i + 1 == len || ((cuts >> i) & 1U);
      if (cut_after) {
        std::vector<std::int64_t> block(a.begin() + static_cast<std::ptrdiff_t>(start),
                                        a.begin() + static_cast<std::ptrdiff_t>(i + 1));
        ok = brute_schreier_member(block, pred);
        start = i + 1;
      }
    }
    if (ok) return true;
  }
  return false;
}

std::uint64_t count_s1(std::int64_t n) {
  const auto choose = [](std::int64_t top, std::int64_t k) {
    if (k < 0 || k > top) return std::uint64_t{0};
    std::uint64_t c = 1;
    for (std::int64_t i = 1; i <= k; ++i) c = c * static_cast<std::uint64_t>(top - k + i) / static_cast<std::uint64_t>(i);
    return c;
  };
  std::uint64_t total = 1;
  // min A = m, choose up to m-1 further elements from {m+1..n}.
  for (std::int64_t m = 1; m <= n; ++m) {
    for (std::int64_t j = 0; j <= m - 1; ++j) total += choose(n - m, j);
  }
  return total;
}

std::vector<std::vector<std::int64_t>> subsets_of(std::int64_t n) {
  std::vector<std::vector<std::int64_t>> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    std::vector<std::int64_t> s;
    for (std::int64_t i = 0; i < n; ++i) {
      if ((mask >> i) & 1U) s.push_back(i + 1);
    }
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> point_labels(std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back("x" + std::to_string(i + 1));
  return labels;
}

namespace {

DistanceMatrix close_paths(DistanceMatrix d) {
  const std::size_t n = d.size();
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
      }
    }
  }
  return d;
}

DistanceMatrix random_weights(std::size_t n, const std::function<Rational()>& draw) {
  DistanceMatrix d(n, std::vector<Rational>(n, Rational(0)));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) d[i][j] = d[j][i] = draw();
  }
  return d;
}

}  // namespace

FiniteMetric random_even_metric(std::mt19937_64& rng, std::size_t n, std::int64_t max_weight) {
  std::uniform_int_distribution<std::int64_t> half(1, max_weight / 2);
  auto d = close_paths(random_weights(n, [&] { return Rational(2 * half(rng)); }));
  return validate_metric(point_labels(n), std::move(d));
}

FiniteMetric random_rational_metric(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<std::int64_t> den(1, 6);
  auto d = close_paths(random_weights(n, [&] {
    const std::int64_t q = den(rng);
    std::uniform_int_distribution<std::int64_t> num(1, 8 * q);
    return Rational(num(rng), q);
  }));
  return validate_metric(point_labels(n), std::move(d));
}

std::vector<std::int64_t> random_index_prefix(std::mt19937_64& rng, std::size_t len) {
  std::bernoulli_distribution step(0.5);
  std::vector<std::int64_t> f;
  for (std::size_t i = 0; i < len; ++i) f.push_back(i == 0 ? 0 : f.back() + (step(rng) ? 1 : 0));
  return f;
}

}  // namespace interlace::testing
