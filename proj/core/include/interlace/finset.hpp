#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace interlace {

/// A finite subset of the positive integers, kept as a strictly increasing
/// list. The empty set is a valid value.
class FinSet {
 public:
  using Element = std::int64_t;

  FinSet() = default;
  FinSet(std::initializer_list<Element> elems);
  /// Accepts any order and duplicates; throws Error{kPrecondition} on an
  /// element < 1.
  explicit FinSet(std::vector<Element> elems);

  /// Text form: comma-separated integers, "" for the empty set.
  static FinSet parse(std::string_view text);
  /// Builds a set from a strictly increasing list without re-sorting.
  static FinSet from_sorted(std::vector<Element> elems);
  /// {lo, ..., hi}
  static FinSet interval(Element lo, Element hi);
  /// Subset of `universe` selected by the low bits of `mask`.
  static FinSet from_mask(std::span<const Element> universe, std::uint64_t mask);

  std::span<const Element> elements() const noexcept { return elems_; }
  std::size_t size() const noexcept { return elems_.size(); }
  bool empty() const noexcept { return elems_.empty(); }
  Element min() const;
  Element max() const;
  Element operator[](std::size_t i) const { return elems_[i]; }
  bool contains(Element x) const;

  auto begin() const noexcept { return elems_.begin(); }
  auto end() const noexcept { return elems_.end(); }

  /// Number of elements in the closed interval [lo, hi].
  std::size_t count_in(Element lo, Element hi) const;

  bool is_subset_of(const FinSet& other) const;

  std::string str() const;

  friend FinSet set_union(const FinSet& a, const FinSet& b);
  friend FinSet set_intersection(const FinSet& a, const FinSet& b);
  friend FinSet set_difference(const FinSet& a, const FinSet& b);
  friend FinSet symmetric_difference(const FinSet& a, const FinSet& b);

  friend bool operator==(const FinSet&, const FinSet&) = default;
  friend auto operator<=>(const FinSet&, const FinSet&) = default;

 private:
  std::vector<Element> elems_;
};

FinSet set_union(const FinSet& a, const FinSet& b);
FinSet set_intersection(const FinSet& a, const FinSet& b);
FinSet set_difference(const FinSet& a, const FinSet& b);
FinSet symmetric_difference(const FinSet& a, const FinSet& b);

/// Every subset of {1, ..., n} in mask order.
std::vector<FinSet> all_subsets(FinSet::Element n);

std::ostream& operator<<(std::ostream& os, const FinSet& s);

}  // namespace interlace
