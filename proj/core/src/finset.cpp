#include "interlace/finset.hpp"

#include <algorithm>
#include <iterator>
#include <ostream>

#include "interlace/error.hpp"

namespace interlace {

FinSet::FinSet(std::initializer_list<Element> elems) : FinSet(std::vector<Element>(elems)) {}

FinSet::FinSet(std::vector<Element> elems) : elems_(std::move(elems)) {
  std::sort(elems_.begin(), elems_.end());
  elems_.erase(std::unique(elems_.begin(), elems_.end()), elems_.end());
  if (!elems_.empty() && elems_.front() < 1) {
    throw Error(ErrorCode::kPrecondition,
                "set elements must be positive integers, got " + std::to_string(elems_.front()));
  }
}

FinSet FinSet::from_sorted(std::vector<Element> elems) {
  FinSet s;
  s.elems_ = std::move(elems);
  return s;
}

FinSet FinSet::parse(std::string_view text) {
  std::vector<Element> out;
  while (!text.empty() && text.front() == ' ') text.remove_prefix(1);
  while (!text.empty() && text.back() == ' ') text.remove_suffix(1);
  if (text.empty()) return {};
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = std::min(text.find(',', pos), text.size());
    std::string_view token = text.substr(pos, comma - pos);
    while (!token.empty() && token.front() == ' ') token.remove_prefix(1);
    while (!token.empty() && token.back() == ' ') token.remove_suffix(1);
    if (token.empty() || !std::all_of(token.begin(), token.end(),
                                      [](char c) { return c >= '0' && c <= '9'; })) {
      throw Error(ErrorCode::kParseError, "malformed set '" + std::string(text) + "'");
    }
    if (token.size() > 15) {
      throw Error(ErrorCode::kParseError, "set element too large in '" + std::string(text) + "'");
    }
    out.push_back(std::stoll(std::string(token)));
    pos = comma + 1;
  }
  if (!std::is_sorted(out.begin(), out.end()) ||
      std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw Error(ErrorCode::kParseError,
                "set elements must be strictly increasing: '" + std::string(text) + "'");
  }
  return FinSet(std::move(out));
}

FinSet FinSet::interval(Element lo, Element hi) {
  std::vector<Element> out;
  for (Element x = lo; x <= hi; ++x) out.push_back(x);
  return FinSet(std::move(out));
}

FinSet FinSet::from_mask(std::span<const Element> universe, std::uint64_t mask) {
  std::vector<Element> out;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    if (mask >> i & 1U) out.push_back(universe[i]);
  }
  return from_sorted(std::move(out));
}

FinSet::Element FinSet::min() const {
  if (elems_.empty()) throw Error(ErrorCode::kPrecondition, "min of empty set");
  return elems_.front();
}

FinSet::Element FinSet::max() const {
  if (elems_.empty()) throw Error(ErrorCode::kPrecondition, "max of empty set");
  return elems_.back();
}

bool FinSet::contains(Element x) const {
  return std::binary_search(elems_.begin(), elems_.end(), x);
}

std::size_t FinSet::count_in(Element lo, Element hi) const {
  if (hi < lo) return 0;
  auto first = std::lower_bound(elems_.begin(), elems_.end(), lo);
  auto last = std::upper_bound(first, elems_.end(), hi);
  return static_cast<std::size_t>(last - first);
}

bool FinSet::is_subset_of(const FinSet& other) const {
  return std::includes(other.elems_.begin(), other.elems_.end(), elems_.begin(), elems_.end());
}

std::string FinSet::str() const {
  std::string out;
  for (std::size_t i = 0; i < elems_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(elems_[i]);
  }
  return out;
}

FinSet set_union(const FinSet& a, const FinSet& b) {
  std::vector<FinSet::Element> out;
  std::set_union(a.elems_.begin(), a.elems_.end(), b.elems_.begin(), b.elems_.end(),
                 std::back_inserter(out));
  return FinSet::from_sorted(std::move(out));
}

FinSet set_intersection(const FinSet& a, const FinSet& b) {
  std::vector<FinSet::Element> out;
  std::set_intersection(a.elems_.begin(), a.elems_.end(), b.elems_.begin(), b.elems_.end(),
                        std::back_inserter(out));
  return FinSet::from_sorted(std::move(out));
}

FinSet set_difference(const FinSet& a, const FinSet& b) {
  std::vector<FinSet::Element> out;
  std::set_difference(a.elems_.begin(), a.elems_.end(), b.elems_.begin(), b.elems_.end(),
                      std::back_inserter(out));
  return FinSet::from_sorted(std::move(out));
}

FinSet symmetric_difference(const FinSet& a, const FinSet& b) {
  std::vector<FinSet::Element> out;
  std::set_symmetric_difference(a.elems_.begin(), a.elems_.end(), b.elems_.begin(),
                                b.elems_.end(), std::back_inserter(out));
  return FinSet::from_sorted(std::move(out));
}

std::vector<FinSet> all_subsets(FinSet::Element n) {
  std::vector<FinSet::Element> universe;
  for (FinSet::Element x = 1; x <= n; ++x) universe.push_back(x);
  std::vector<FinSet> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    out.push_back(FinSet::from_mask(universe, mask));
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FinSet& s) { return os << '{' << s.str() << '}'; }

}  // namespace interlace
