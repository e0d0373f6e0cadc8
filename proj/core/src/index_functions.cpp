#include "interlace/index_functions.hpp"

#include <string>

#include "interlace/error.hpp"

namespace interlace {

namespace {

[[noreturn]] void not_in_class(const std::string& what) {
  throw Error(ErrorCode::kNotInClass, what);
}

}  // namespace

IndexFunction::IndexFunction(std::vector<std::int64_t> prefix, bool tends_to_infinity)
    : prefix_(std::move(prefix)), tends_to_infinity_(tends_to_infinity) {
  if (prefix_.empty()) not_in_class("empty prefix");
  if (prefix_[0] != 0) not_in_class("f(1) must be 0");
  for (std::size_t i = 0; i + 1 < prefix_.size(); ++i) {
    const std::int64_t step = prefix_[i + 1] - prefix_[i];
    if (step < 0 || step > 1) {
      not_in_class("f(" + std::to_string(i + 2) + ") - f(" + std::to_string(i + 1) +
                   ") must be 0 or 1");
    }
  }
}

std::int64_t IndexFunction::operator()(std::int64_t n) const {
  if (n < 1 || n > length()) throw Error(ErrorCode::kPrecondition, "index outside the stored prefix");
  return prefix_[static_cast<std::size_t>(n - 1)];
}

StrictIndexFunction::StrictIndexFunction(std::vector<std::int64_t> prefix)
    : prefix_(std::move(prefix)) {
  if (prefix_.empty()) not_in_class("empty prefix");
  if (prefix_[0] != 0) not_in_class("f(0) must be 0");
  for (std::size_t i = 0; i + 1 < prefix_.size(); ++i) {
    if (prefix_[i + 1] < prefix_[i] + 1) {
      not_in_class("f(" + std::to_string(i + 1) + ") must exceed f(" + std::to_string(i) + ")");
    }
  }
}

std::int64_t StrictIndexFunction::operator()(std::int64_t n) const {
  if (n < 0 || n > length()) throw Error(ErrorCode::kPrecondition, "index outside the stored prefix");
  return prefix_[static_cast<std::size_t>(n)];
}

FinSet j_of(const IndexFunction& f) {
  std::vector<std::int64_t> jumps;
  for (std::int64_t n = 1; n < f.length(); ++n) {
    if (f(n + 1) > f(n)) jumps.push_back(n);
  }
  return FinSet::from_sorted(std::move(jumps));
}

std::int64_t j_inv(const FinSet& a, std::int64_t n) {
  if (n < 1) throw Error(ErrorCode::kPrecondition, "j_inv needs n >= 1");
  return static_cast<std::int64_t>(a.count_in(1, n - 1));
}

IndexFunction j_inv_prefix(const FinSet& a, std::int64_t length) {
  std::vector<std::int64_t> prefix;
  for (std::int64_t n = 1; n <= length; ++n) prefix.push_back(j_inv(a, n));
  return IndexFunction(std::move(prefix));
}

FinSet k_of(const StrictIndexFunction& f) {
  std::vector<std::int64_t> image(f.prefix().begin() + 1, f.prefix().end());
  return FinSet::from_sorted(std::move(image));
}

std::int64_t k_inv(const FinSet& a, std::int64_t n) {
  if (n < 0 || n > static_cast<std::int64_t>(a.size())) {
    throw Error(ErrorCode::kPrecondition, "set has fewer than " + std::to_string(n) + " elements");
  }
  return n == 0 ? 0 : a[static_cast<std::size_t>(n - 1)];
}

}  // namespace interlace
