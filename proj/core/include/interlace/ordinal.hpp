#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace interlace {

/// An ordinal below w^w in Cantor normal form:
///   w^{e_1} c_1 + ... + w^{e_k} c_k,  e_1 > ... > e_k >= 0,  c_i >= 1.
class OrdinalCNF {
 public:
  struct Term {
    std::uint32_t exponent = 0;
    std::uint64_t coefficient = 1;
    friend bool operator==(const Term&, const Term&) = default;
    friend auto operator<=>(const Term&, const Term&) = default;
  };

  OrdinalCNF() = default;
  static OrdinalCNF finite(std::uint64_t n);
  /// w^exponent * coefficient
  static OrdinalCNF omega_power(std::uint32_t exponent, std::uint64_t coefficient = 1);

  const std::vector<Term>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_successor() const noexcept;
  bool is_limit() const noexcept;
  /// Finite value; only meaningful when is_finite().
  bool is_finite() const noexcept;
  std::uint64_t finite_value() const;

  /// Predecessor of a successor ordinal. Throws Error{kPrecondition}.
  OrdinalCNF predecessor() const;

  /// Canonical fundamental sequence: for b = g + w^{e} c with e >= 1,
  ///   b[n] = g + w^{e} (c-1) + w^{e-1} n.
  /// So w[n] = n and (w^2)[n] = w n. Requires n >= 1; throws
  /// Error{kNotLimit} when the ordinal is not a limit.
  OrdinalCNF fundamental(std::uint64_t n) const;

  /// Ordinal (non-commutative) addition.
  friend OrdinalCNF operator+(const OrdinalCNF& a, const OrdinalCNF& b);

  friend bool operator==(const OrdinalCNF&, const OrdinalCNF&) = default;
  /// Lexicographic on CNF terms, which is the ordinal order.
  friend std::strong_ordering operator<=>(const OrdinalCNF& a, const OrdinalCNF& b);

  /// "w^2*3+w+5"; "0" for zero.
  std::string str() const;

 private:
  std::vector<Term> terms_;
};

/// Parses `ordinal := term ("+" term)*`, `term := "w" ("^" nat)? ("*" nat)? | nat`,
/// summing left to right with ordinal addition. Input that is not already in
/// canonical form (for example "1+w", which is w) is normalized and a
/// warning is appended to `warnings` when provided.
/// Throws Error{kParseError}.
OrdinalCNF ordinal_parse(std::string_view text, std::vector<std::string>* warnings = nullptr);

std::strong_ordering ordinal_cmp(const OrdinalCNF& a, const OrdinalCNF& b);
bool is_limit(const OrdinalCNF& a);
OrdinalCNF fundamental_seq(const OrdinalCNF& a, std::uint64_t n);

std::ostream& operator<<(std::ostream& os, const OrdinalCNF& a);

}  // namespace interlace
