#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "interlace/finset.hpp"
#include "interlace/modulus.hpp"
#include "interlace/rational.hpp"

namespace interlace {

/// A function f: N -> E supported in the ground set G, stored as its values
/// on G in increasing order.
using BunchKey = std::vector<Rational>;

/// A family of points (x_f) indexed by all functions f: G -> E, where E is a
/// finite alphabet containing 0. Points are opaque identifiers.
struct Bunch {
  FinSet ground;
  std::vector<Rational> alphabet;
  std::map<BunchKey, std::string> values;

  /// Every E-valued function on the ground set, in lexicographic alphabet
  /// order.
  std::vector<BunchKey> functions() const;
  const std::string& at(const BunchKey& f) const;

  friend bool operator==(const Bunch&, const Bunch&) = default;
  friend auto operator<=>(const Bunch&, const Bunch&) = default;
};

/// Throws Error{kPrecondition} unless the alphabet is duplicate-free and
/// contains 0, and `values` is total over the alphabet^ground functions.
void validate_bunch(const Bunch& b);

/// The bunch over an initial segment of the ground set, (x_f) for f
/// supported in that segment. `prefix_length` elements of the ground set
/// are kept.
Bunch restrict_bunch(const Bunch& b, std::size_t prefix_length);

/// Only the functions with values in `sub_alphabet` (which must contain 0
/// and be a subset of the alphabet).
Bunch restrict_alphabet(const Bunch& b, const std::vector<Rational>& sub_alphabet);

/// chi <= psi: chi's ground set is an initial segment of psi's, and psi
/// agrees with chi on every function supported there.
bool precedes(const Bunch& chi, const Bunch& psi);

/// Symmetric distance lookup between point identifiers; a point is at
/// distance 0 from itself.
class DistanceTable {
 public:
  void set(const std::string& a, const std::string& b, const Rational& d);
  std::optional<Rational> get(const std::string& a, const std::string& b) const;
  std::size_t size() const noexcept { return table_.size(); }

 private:
  std::map<std::pair<std::string, std::string>, Rational> table_;
};

struct BunchCheck {
  bool ok = true;
  /// First failing pair (f, g), when !ok.
  std::optional<std::pair<BunchKey, BunchKey>> witness;

  explicit operator bool() const noexcept { return ok; }
};

/// (1/C) |f-g|_inf <= d(x_f, x_g) <= C |f-g|_inf for all f, g.
/// Throws Error{kMissingDistance} if the table lacks a needed pair.
BunchCheck bunch_check_lipschitz(const Bunch& b, const DistanceTable& dist, const Rational& c);

/// rho(|f-g|_inf) <= d(x_f, x_g) <= omega(|f-g|_inf) for all f, g.
BunchCheck bunch_check_coarse(const Bunch& b, const DistanceTable& dist, const StepModulus& rho,
                              const StepModulus& omega);

/// A finite set of bunches over a common alphabet that contains, with every
/// bunch, all of its restrictions to initial segments.
class Vine {
 public:
  Vine() = default;
  /// Throws Error{kNotAVine} naming the first bunch whose restriction is
  /// missing, or whose alphabet differs.
  explicit Vine(std::vector<Bunch> bunches);

  const std::vector<Bunch>& bunches() const noexcept { return bunches_; }
  std::size_t size() const noexcept { return bunches_.size(); }
  bool empty() const noexcept { return bunches_.empty(); }

 private:
  std::vector<Bunch> bunches_;  // sorted, unique
};

/// Removes the <=-maximal bunches.
Vine vine_derivative(const Vine& v);

/// Least r with V^(r) empty.
std::size_t vine_rank(const Vine& v);

}  // namespace interlace
