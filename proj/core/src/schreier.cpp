#include "interlace/schreier.hpp"

#include <algorithm>
#include <optional>
#include <map>
#include <set>
#include <stdexcept>

#include "interlace/error.hpp"

namespace interlace {

namespace {

using Element = FinSet::Element;
using Seq = std::vector<Element>;

class MembershipOracle {
 public:
  bool member(std::span<const Element> a, const OrdinalCNF& alpha) {
    if (a.size() <= 1) return true;  // empty set and singletons belong to every S_a
    if (alpha.is_zero()) return false;
    auto key = std::make_pair(Seq(a.begin(), a.end()), alpha);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool result = alpha.is_successor() ? successor_member(a, alpha.predecessor())
                                             : limit_member(a, alpha);
    memo_.emplace(std::move(key), result);
    return result;
  }

 private:
  // Fewest consecutive blocks in S_prev covering a, compared with min a.
  bool successor_member(std::span<const Element> a, const OrdinalCNF& prev) {
    const std::size_t len = a.size();
    const auto allowed = static_cast<std::size_t>(a.front());
    constexpr std::size_t kInf = static_cast<std::size_t>(-1);
    std::vector<std::size_t> fewest(len + 1, kInf);
    fewest[0] = 0;
    for (std::size_t end = 1; end <= len; ++end) {
      for (std::size_t begin = 0; begin < end; ++begin) {
        if (fewest[begin] == kInf || fewest[begin] + 1 >= fewest[end]) continue;
        if (member(a.subspan(begin, end - begin), prev)) fewest[end] = fewest[begin] + 1;
      }
    }
    return fewest[len] <= allowed;
  }

  bool limit_member(std::span<const Element> a, const OrdinalCNF& alpha) {
    const auto top = static_cast<std::uint64_t>(a.front());
    for (std::uint64_t n = 1; n <= top; ++n) {
      if (member(a, alpha.fundamental(n))) return true;
    }
    return false;
  }

  std::map<std::pair<Seq, OrdinalCNF>, bool> memo_;
};

class Enumerator {
 public:
  Enumerator(Element n, std::size_t budget) : n_(n), budget_(budget) {}

  const std::vector<Seq>& family(const OrdinalCNF& alpha) {
    if (auto it = memo_.find(alpha); it != memo_.end()) return it->second;
    std::set<Seq> out;
    if (alpha.is_zero()) {
      out.insert(Seq{});
      for (Element x = 1; x <= n_; ++x) out.insert(Seq{x});
    } else if (alpha.is_successor()) {
      build_successor(family(alpha.predecessor()), out);
    } else {
      for (Element k = 1; k <= n_; ++k) {
        for (const auto& s : family(alpha.fundamental(static_cast<std::uint64_t>(k)))) {
          if (s.empty() || s.front() >= k) insert(out, s);
        }
      }
    }
    std::vector<Seq> sorted(out.begin(), out.end());
    return memo_.emplace(alpha, std::move(sorted)).first->second;
  }

 private:
  void insert(std::set<Seq>& out, const Seq& s) {
    out.insert(s);
    if (out.size() > budget_) {
      throw Error(ErrorCode::kBudgetExceeded,
                  "Schreier enumeration exceeded " + std::to_string(budget_) + " sets");
    }
  }

  void build_successor(const std::vector<Seq>& blocks, std::set<Seq>& out) {
    std::map<Element, std::vector<const Seq*>> by_min;
    for (const auto& b : blocks) {
      if (!b.empty()) by_min[b.front()].push_back(&b);
    }
    out.insert(Seq{});
    Seq acc;
    for (const auto& [first_min, firsts] : by_min) {
      for (const Seq* first : firsts) {
        acc = *first;
        extend(by_min, acc, static_cast<std::size_t>(first_min) - 1, out);
      }
    }
  }

  // Adds acc, then every extension by up to `remaining` further blocks that
  // start after acc ends.
  void extend(const std::map<Element, std::vector<const Seq*>>& by_min, Seq& acc,
              std::size_t remaining, std::set<Seq>& out) {
    insert(out, acc);
    if (remaining == 0) return;
    for (auto it = by_min.upper_bound(acc.back()); it != by_min.end(); ++it) {
      for (const Seq* next : it->second) {
        const std::size_t old = acc.size();
        acc.insert(acc.end(), next->begin(), next->end());
        extend(by_min, acc, remaining - 1, out);
        acc.resize(old);
      }
    }
  }

  Element n_;
  std::size_t budget_;
  std::map<OrdinalCNF, std::vector<Seq>> memo_;
};

}  // namespace

bool schreier_member(const FinSet& a, const OrdinalCNF& alpha) {
  MembershipOracle oracle;
  return oracle.member(a.elements(), alpha);
}

std::vector<FinSet> schreier_enumerate(const OrdinalCNF& alpha, std::int64_t n,
                                       std::size_t budget) {
  if (n < 1) throw Error(ErrorCode::kPrecondition, "N must be >= 1");
  Enumerator e(n, budget);
  std::vector<FinSet> out;
  for (const auto& s : e.family(alpha)) out.push_back(FinSet::from_sorted(s));
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

void check_spreading_preconditions(std::span<const std::int64_t> l, const OrdinalCNF& alpha,
                                   const OrdinalCNF& beta, std::int64_t n) {
  if (!(alpha < beta)) {
    throw Error(ErrorCode::kPrecondition,
                "spreading requires alpha < beta, got " + alpha.str() + " and " + beta.str());
  }
  if (n < 1 || static_cast<std::int64_t>(l.size()) < n) {
    throw Error(ErrorCode::kPrecondition, "spreading sequence shorter than N");
  }
  for (std::size_t i = 0; i < l.size(); ++i) {
    if (l[i] < 1 || (i > 0 && l[i] <= l[i - 1])) {
      throw Error(ErrorCode::kPrecondition, "spreading sequence must be strictly increasing");
    }
  }
}

FinSet image_of(const FinSet& a, std::span<const std::int64_t> l) {
  std::vector<Element> out;
  out.reserve(a.size());
  for (auto x : a) out.push_back(l[static_cast<std::size_t>(x - 1)]);
  return FinSet::from_sorted(std::move(out));
}

}  // namespace

bool spreading_check(std::span<const std::int64_t> l, const OrdinalCNF& alpha,
                     const OrdinalCNF& beta, std::int64_t n) {
  check_spreading_preconditions(l, alpha, beta, n);
  MembershipOracle oracle;
  for (const auto& a : all_subsets(n)) {
    if (!oracle.member(a.elements(), alpha)) continue;
    if (!oracle.member(image_of(a, l).elements(), beta)) return false;
  }
  return true;
}

std::vector<std::int64_t> spreading_search(const OrdinalCNF& alpha, const OrdinalCNF& beta,
                                           std::int64_t n, std::int64_t element_bound) {
  if (!(alpha < beta)) {
    throw Error(ErrorCode::kPrecondition,
                "spreading requires alpha < beta, got " + alpha.str() + " and " + beta.str());
  }
  if (n < 1) throw Error(ErrorCode::kPrecondition, "N must be >= 1");
  MembershipOracle oracle;
  const auto subsets = all_subsets(n);
  // Sets in S_alpha grouped by their largest element: only those depend on
  // the entry chosen at that position.
  std::vector<std::vector<const FinSet*>> pending(static_cast<std::size_t>(n) + 1);
  for (const auto& a : subsets) {
    if (!a.empty() && oracle.member(a.elements(), alpha)) pending[static_cast<std::size_t>(a.max())].push_back(&a);
  }
  // Plain greedy can paint itself into a corner (early entries too small for
  // a later set), so it is restarted with a larger first entry.
  const auto greedy = [&](std::int64_t first) -> std::optional<std::vector<std::int64_t>> {
    std::vector<std::int64_t> l;
    for (std::int64_t pos = 1; pos <= n; ++pos) {
      const auto& sets = pending[static_cast<std::size_t>(pos)];
      l.push_back(l.empty() ? first : l.back() + 1);
      for (;; ++l.back()) {
        if (l.back() > element_bound) return std::nullopt;
        const bool ok = std::all_of(sets.begin(), sets.end(), [&](const FinSet* a) {
          return oracle.member(image_of(*a, l).elements(), beta);
        });
        if (ok) break;
      }
    }
    return l;
  };
  std::vector<std::int64_t> l;
  for (std::int64_t first = 1;; ++first) {
    if (first > element_bound) {
      throw Error(ErrorCode::kSearchExhausted,
                  "no spreading sequence with entries <= " + std::to_string(element_bound));
    }
    if (auto found = greedy(first)) {
      l = std::move(*found);
      break;
    }
  }
  if (!spreading_check(l, alpha, beta, n)) {
    throw std::logic_error("spreading_search produced a sequence that fails the check");
  }
  return l;
}

Rational d_inf(const SchreierPoint& f, const SchreierPoint& g) {
  Rational best = 0;
  for (auto i : set_union(f.support(), g.support())) {
    best = std::max(best, abs(f.coords.at(i) - g.coords.at(i)));
  }
  return best;
}

std::vector<SchreierPoint> schreier_points(const OrdinalCNF& alpha, std::int64_t n,
                                           std::int64_t m, std::size_t budget) {
  if (m < 0) throw Error(ErrorCode::kPrecondition, "coefficient bound must be >= 0");
  std::vector<std::int64_t> values;
  for (std::int64_t v = -m; v <= m; ++v) {
    if (v != 0) values.push_back(v);
  }
  std::vector<SchreierPoint> out;
  for (const auto& support : schreier_enumerate(alpha, n, budget)) {
    if (support.empty()) {
      out.insert(out.begin(), SchreierPoint{});
      continue;
    }
    if (values.empty()) continue;
    std::vector<std::size_t> digits(support.size(), 0);
    for (;;) {
      SchreierPoint p;
      for (std::size_t i = 0; i < support.size(); ++i) p.coords.set(support[i], values[digits[i]]);
      out.push_back(std::move(p));
      if (out.size() > budget) {
        throw Error(ErrorCode::kBudgetExceeded,
                    "Schreier point enumeration exceeded " + std::to_string(budget) + " points");
      }
      std::size_t i = 0;
      while (i < digits.size() && ++digits[i] == values.size()) digits[i++] = 0;
      if (i == digits.size()) break;
    }
  }
  return out;
}

}  // namespace interlace
