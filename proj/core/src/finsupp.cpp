#include "interlace/finsupp.hpp"

#include <ostream>
#include <vector>

#include "interlace/error.hpp"

namespace interlace {

FinSuppSeq FinSuppSeq::indicator(const FinSet& a) {
  FinSuppSeq s;
  for (auto x : a) s.entries_.emplace(x, Rational(1));
  return s;
}

Rational FinSuppSeq::at(Index i) const {
  auto it = entries_.find(i);
  return it == entries_.end() ? Rational(0) : it->second;
}

void FinSuppSeq::set(Index i, const Rational& value) {
  if (i < 1) throw Error(ErrorCode::kPrecondition, "sequence index must be >= 1");
  if (value.is_zero()) {
    entries_.erase(i);
  } else {
    entries_[i] = value;
  }
}

FinSet FinSuppSeq::support() const {
  std::vector<FinSet::Element> out;
  out.reserve(entries_.size());
  for (const auto& [i, v] : entries_) out.push_back(i);
  return FinSet::from_sorted(std::move(out));
}

FinSuppSeq& FinSuppSeq::operator+=(const FinSuppSeq& rhs) {
  for (const auto& [i, v] : rhs.entries_) set(i, at(i) + v);
  return *this;
}

FinSuppSeq& FinSuppSeq::operator-=(const FinSuppSeq& rhs) {
  for (const auto& [i, v] : rhs.entries_) set(i, at(i) - v);
  return *this;
}

FinSuppSeq& FinSuppSeq::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    entries_.clear();
    return *this;
  }
  for (auto& [i, v] : entries_) v *= scalar;
  return *this;
}

std::string FinSuppSeq::str() const {
  std::string out = "(";
  bool first = true;
  for (const auto& [i, v] : entries_) {
    if (!first) out += ", ";
    first = false;
    out += std::to_string(i) + ":" + v.str();
  }
  return out + ")";
}

std::ostream& operator<<(std::ostream& os, const FinSuppSeq& s) { return os << s.str(); }

}  // namespace interlace
