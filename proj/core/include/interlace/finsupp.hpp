#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>

#include "interlace/finset.hpp"
#include "interlace/rational.hpp"

namespace interlace {

/// Finitely supported rational sequence indexed by positive integers.
/// Zero entries are never stored.
class FinSuppSeq {
 public:
  using Index = std::int64_t;

  FinSuppSeq() = default;

  /// Characteristic sequence 1_A.
  static FinSuppSeq indicator(const FinSet& a);

  Rational at(Index i) const;
  void set(Index i, const Rational& value);

  const std::map<Index, Rational>& entries() const noexcept { return entries_; }
  FinSet support() const;
  bool is_zero() const noexcept { return entries_.empty(); }

  FinSuppSeq& operator+=(const FinSuppSeq& rhs);
  FinSuppSeq& operator-=(const FinSuppSeq& rhs);
  FinSuppSeq& operator*=(const Rational& scalar);

  friend FinSuppSeq operator+(FinSuppSeq a, const FinSuppSeq& b) { return a += b; }
  friend FinSuppSeq operator-(FinSuppSeq a, const FinSuppSeq& b) { return a -= b; }
  friend FinSuppSeq operator*(FinSuppSeq a, const Rational& s) { return a *= s; }

  friend bool operator==(const FinSuppSeq&, const FinSuppSeq&) = default;

  std::string str() const;

 private:
  std::map<Index, Rational> entries_;
};

std::ostream& operator<<(std::ostream& os, const FinSuppSeq& s);

}  // namespace interlace
