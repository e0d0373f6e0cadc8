#include "interlace/rational.hpp"

#include <limits>
#include <ostream>

#include "interlace/error.hpp"

namespace interlace {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::kAsymmetric: return "ASYMMETRIC";
    case ErrorCode::kNonzeroDiagonal: return "NONZERO_DIAGONAL";
    case ErrorCode::kNonpositiveDistance: return "NONPOSITIVE_DISTANCE";
    case ErrorCode::kTriangleViolation: return "TRIANGLE_VIOLATION";
    case ErrorCode::kShapeMismatch: return "SHAPE_MISMATCH";
    case ErrorCode::kSingletonSpace: return "SINGLETON_SPACE";
    case ErrorCode::kCardinalityMismatch: return "CARDINALITY_MISMATCH";
    case ErrorCode::kMTooSmall: return "M_TOO_SMALL";
    case ErrorCode::kEpsilonOutOfRange: return "EPSILON_OUT_OF_RANGE";
    case ErrorCode::kNotQIntegral: return "NOT_Q_INTEGRAL";
    case ErrorCode::kOddDistance: return "ODD_DISTANCE";
    case ErrorCode::kMissingLabel: return "MISSING_LABEL";
    case ErrorCode::kCardinalityNonuniform: return "CARDINALITY_NONUNIFORM";
    case ErrorCode::kParseError: return "PARSE_ERROR";
    case ErrorCode::kNotLimit: return "NOT_LIMIT";
    case ErrorCode::kBudgetExceeded: return "BUDGET_EXCEEDED";
    case ErrorCode::kSearchExhausted: return "SEARCH_EXHAUSTED";
    case ErrorCode::kPrecondition: return "PRECONDITION";
    case ErrorCode::kMissingDistance: return "MISSING_DISTANCE";
    case ErrorCode::kNotAVine: return "NOT_A_VINE";
    case ErrorCode::kRhoBounded: return "RHO_BOUNDED";
    case ErrorCode::kLadderTooShort: return "LADDER_TOO_SHORT";
    case ErrorCode::kNotInClass: return "NOT_IN_CLASS";
  }
  return "UNKNOWN";
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw Error(ErrorCode::kParseError, "zero denominator");
  normalize();
}

void Rational::normalize() {
  if (den_.sign() < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
  if (num_ == 0) den_ = 1;
}

namespace {

BigInt parse_integer(std::string_view text, std::string_view whole) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  if (text.empty()) {
    throw Error(ErrorCode::kParseError, "malformed rational '" + std::string(whole) + "'");
  }
  BigInt value = 0;
  for (char c : text) {
    if (c < '0' || c > '9') {
      throw Error(ErrorCode::kParseError, "malformed rational '" + std::string(whole) + "'");
    }
    value = value * 10 + (c - '0');
  }
  return negative ? BigInt(-value) : value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text), 1);
  const auto den_text = text.substr(slash + 1);
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
    throw Error(ErrorCode::kParseError, "malformed rational '" + std::string(text) + "'");
  }
  BigInt den = parse_integer(den_text, text);
  if (den == 0) {
    throw Error(ErrorCode::kParseError, "zero denominator in '" + std::string(text) + "'");
  }
  return Rational(parse_integer(text.substr(0, slash), text), std::move(den));
}

BigInt Rational::floor() const {
  BigInt q = num_ / den_;  // truncates toward zero
  if (num_.sign() < 0 && q * den_ != num_) q -= 1;
  return q;
}

BigInt Rational::ceil() const {
  BigInt q = num_ / den_;
  if (num_.sign() > 0 && q * den_ != num_) q += 1;
  return q;
}

std::int64_t Rational::to_int64() const {
  if (!is_integer()) throw Error(ErrorCode::kPrecondition, "not an integer: " + str());
  if (num_ > std::numeric_limits<std::int64_t>::max() ||
      num_ < std::numeric_limits<std::int64_t>::min()) {
    throw Error(ErrorCode::kPrecondition, "integer out of range: " + str());
  }
  return static_cast<std::int64_t>(num_);
}

double Rational::to_double() const {
  return static_cast<double>(num_) / static_cast<double>(den_);
}

std::string Rational::str() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational& Rational::operator+=(const Rational& rhs) {
  num_ = num_ * rhs.den_ + rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  num_ = num_ * rhs.den_ - rhs.num_ * den_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  num_ *= rhs.num_;
  den_ *= rhs.den_;
  normalize();
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw Error(ErrorCode::kPrecondition, "division by zero");
  num_ *= rhs.den_;
  den_ *= rhs.num_;
  normalize();
  return *this;
}

Rational Rational::operator-() const {
  Rational r = *this;
  r.num_ = -r.num_;
  return r;
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
  const BigInt lhs = a.num_ * b.den_;
  const BigInt rhs = b.num_ * a.den_;
  if (lhs < rhs) return std::strong_ordering::less;
  if (lhs > rhs) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace interlace
