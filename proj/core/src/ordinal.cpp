#include "interlace/ordinal.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "interlace/error.hpp"

namespace interlace {

OrdinalCNF OrdinalCNF::finite(std::uint64_t n) { return omega_power(0, n); }

OrdinalCNF OrdinalCNF::omega_power(std::uint32_t exponent, std::uint64_t coefficient) {
  OrdinalCNF a;
  if (coefficient > 0) a.terms_.push_back({exponent, coefficient});
  return a;
}

bool OrdinalCNF::is_successor() const noexcept {
  return !terms_.empty() && terms_.back().exponent == 0;
}

bool OrdinalCNF::is_limit() const noexcept {
  return !terms_.empty() && terms_.back().exponent > 0;
}

bool OrdinalCNF::is_finite() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().exponent == 0);
}

std::uint64_t OrdinalCNF::finite_value() const {
  if (!is_finite()) throw Error(ErrorCode::kPrecondition, str() + " is infinite");
  return terms_.empty() ? 0 : terms_.front().coefficient;
}

OrdinalCNF OrdinalCNF::predecessor() const {
  if (!is_successor()) throw Error(ErrorCode::kPrecondition, str() + " is not a successor");
  OrdinalCNF p = *this;
  if (--p.terms_.back().coefficient == 0) p.terms_.pop_back();
  return p;
}

OrdinalCNF OrdinalCNF::fundamental(std::uint64_t n) const {
  if (!is_limit()) throw Error(ErrorCode::kNotLimit, str() + " is not a limit ordinal");
  if (n < 1) throw Error(ErrorCode::kPrecondition, "fundamental sequence index starts at 1");
  OrdinalCNF base = *this;
  const Term last = base.terms_.back();
  base.terms_.pop_back();
  if (last.coefficient > 1) base.terms_.push_back({last.exponent, last.coefficient - 1});
  return base + omega_power(last.exponent - 1, n);
}

OrdinalCNF operator+(const OrdinalCNF& a, const OrdinalCNF& b) {
  if (b.is_zero()) return a;
  const std::uint32_t lead = b.terms_.front().exponent;
  OrdinalCNF out;
  for (const auto& t : a.terms_) {
    if (t.exponent > lead) out.terms_.push_back(t);
  }
  auto it = b.terms_.begin();
  for (const auto& t : a.terms_) {
    if (t.exponent == lead) {
      out.terms_.push_back({lead, t.coefficient + it->coefficient});
      ++it;
      break;
    }
  }
  out.terms_.insert(out.terms_.end(), it, b.terms_.end());
  return out;
}

std::strong_ordering operator<=>(const OrdinalCNF& a, const OrdinalCNF& b) {
  const std::size_t common = std::min(a.terms_.size(), b.terms_.size());
  for (std::size_t i = 0; i < common; ++i) {
    const auto& x = a.terms_[i];
    const auto& y = b.terms_[i];
    if (x.exponent != y.exponent) return x.exponent <=> y.exponent;
    if (x.coefficient != y.coefficient) return x.coefficient <=> y.coefficient;
  }
  return a.terms_.size() <=> b.terms_.size();
}

std::string OrdinalCNF::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& t : terms_) {
    if (!out.empty()) out += '+';
    if (t.exponent == 0) {
      out += std::to_string(t.coefficient);
      continue;
    }
    out += 'w';
    if (t.exponent > 1) out += '^' + std::to_string(t.exponent);
    if (t.coefficient > 1) out += '*' + std::to_string(t.coefficient);
  }
  return out;
}

namespace {

class OrdinalParser {
 public:
  explicit OrdinalParser(std::string_view text) : text_(text) {}

  std::vector<OrdinalCNF::Term> parse() {
    std::vector<OrdinalCNF::Term> terms;
    terms.push_back(term());
    skip_space();
    while (pos_ < text_.size()) {
      expect('+');
      terms.push_back(term());
      skip_space();
    }
    return terms;
  }

 private:
  OrdinalCNF::Term term() {
    skip_space();
    if (peek() == 'w') {
      ++pos_;
      OrdinalCNF::Term t{1, 1};
      skip_space();
      if (peek() == '^') {
        ++pos_;
        const auto e = nat();
        if (e > std::numeric_limits<std::uint32_t>::max()) fail("exponent too large");
        t.exponent = static_cast<std::uint32_t>(e);
        skip_space();
      }
      if (peek() == '*') {
        ++pos_;
        t.coefficient = nat();
      }
      return t;
    }
    return {0, nat()};
  }

  std::uint64_t nat() {
    skip_space();
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      fail("expected a natural number");
    }
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      const auto digit = static_cast<std::uint64_t>(text_[pos_] - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - digit) / 10) fail("number too large");
      v = v * 10 + digit;
      ++pos_;
    }
    return v;
  }

  void expect(char c) {
    skip_space();
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::kParseError, what + " at offset " + std::to_string(pos_) + " in '" +
                                            std::string(text_) + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

OrdinalCNF ordinal_parse(std::string_view text, std::vector<std::string>* warnings) {
  const auto raw = OrdinalParser(text).parse();
  OrdinalCNF value;
  for (const auto& t : raw) value = value + OrdinalCNF::omega_power(t.exponent, t.coefficient);
  const bool plain_zero = raw.size() == 1 && raw.front().coefficient == 0;
  if (warnings && !plain_zero && raw != value.terms()) {
    warnings->push_back("ordinal '" + std::string(text) + "' normalized to " + value.str());
  }
  return value;
}

std::strong_ordering ordinal_cmp(const OrdinalCNF& a, const OrdinalCNF& b) { return a <=> b; }
bool is_limit(const OrdinalCNF& a) { return a.is_limit(); }
OrdinalCNF fundamental_seq(const OrdinalCNF& a, std::uint64_t n) { return a.fundamental(n); }

std::ostream& operator<<(std::ostream& os, const OrdinalCNF& a) { return os << a.str(); }

}  // namespace interlace
