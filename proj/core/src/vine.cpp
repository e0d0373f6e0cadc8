#include "interlace/vine.hpp"

#include <algorithm>
#include <set>

#include "interlace/error.hpp"

namespace interlace {

std::vector<BunchKey> Bunch::functions() const {
  std::vector<BunchKey> out{BunchKey{}};
  for (std::size_t pos = 0; pos < ground.size(); ++pos) {
    std::vector<BunchKey> next;
    next.reserve(out.size() * alphabet.size());
    for (const auto& prefix : out) {
      for (const auto& e : alphabet) {
        next.push_back(prefix);
        next.back().push_back(e);
      }
    }
    out = std::move(next);
  }
  return out;
}

const std::string& Bunch::at(const BunchKey& f) const {
  auto it = values.find(f);
  if (it == values.end()) throw Error(ErrorCode::kPrecondition, "bunch has no value for function");
  return it->second;
}

void validate_bunch(const Bunch& b) {
  std::set<Rational> seen(b.alphabet.begin(), b.alphabet.end());
  if (seen.size() != b.alphabet.size()) {
    throw Error(ErrorCode::kPrecondition, "bunch alphabet has duplicates");
  }
  if (!seen.contains(Rational(0))) throw Error(ErrorCode::kPrecondition, "alphabet lacks 0");
  std::size_t expected = 1;
  for (std::size_t i = 0; i < b.ground.size(); ++i) expected *= b.alphabet.size();
  if (b.values.size() != expected) {
    throw Error(ErrorCode::kPrecondition, "bunch over {" + b.ground.str() + "} has " +
                                              std::to_string(b.values.size()) +
                                              " values, expected " + std::to_string(expected));
  }
  for (const auto& [f, id] : b.values) {
    if (f.size() != b.ground.size() ||
        !std::all_of(f.begin(), f.end(), [&](const Rational& x) { return seen.contains(x); })) {
      throw Error(ErrorCode::kPrecondition, "bunch function outside [E, G]");
    }
  }
}

Bunch restrict_bunch(const Bunch& b, std::size_t prefix_length) {
  if (prefix_length > b.ground.size()) {
    throw Error(ErrorCode::kPrecondition, "restriction longer than the ground set");
  }
  Bunch out;
  out.ground = FinSet::from_sorted({b.ground.begin(), b.ground.begin() + static_cast<long>(prefix_length)});
  out.alphabet = b.alphabet;
  const std::size_t pad = b.ground.size() - prefix_length;
  for (const auto& [f, id] : b.values) {
    if (std::all_of(f.begin() + static_cast<long>(prefix_length), f.end(),
                    [](const Rational& x) { return x.is_zero(); })) {
      out.values.emplace(BunchKey(f.begin(), f.end() - static_cast<long>(pad)), id);
    }
  }
  return out;
}

Bunch restrict_alphabet(const Bunch& b, const std::vector<Rational>& sub_alphabet) {
  std::set<Rational> keep(sub_alphabet.begin(), sub_alphabet.end());
  if (!keep.contains(Rational(0))) throw Error(ErrorCode::kPrecondition, "sub-alphabet lacks 0");
  for (const auto& e : keep) {
    if (std::find(b.alphabet.begin(), b.alphabet.end(), e) == b.alphabet.end()) {
      throw Error(ErrorCode::kPrecondition, "sub-alphabet is not contained in the alphabet");
    }
  }
  Bunch out;
  out.ground = b.ground;
  for (const auto& e : b.alphabet) {
    if (keep.contains(e)) out.alphabet.push_back(e);
  }
  for (const auto& [f, id] : b.values) {
    if (std::all_of(f.begin(), f.end(), [&](const Rational& x) { return keep.contains(x); })) {
      out.values.emplace(f, id);
    }
  }
  return out;
}

bool precedes(const Bunch& chi, const Bunch& psi) {
  if (chi.alphabet != psi.alphabet || chi.ground.size() > psi.ground.size()) return false;
  if (!std::equal(chi.ground.begin(), chi.ground.end(), psi.ground.begin())) return false;
  return restrict_bunch(psi, chi.ground.size()).values == chi.values;
}

void DistanceTable::set(const std::string& a, const std::string& b, const Rational& d) {
  table_[std::minmax(a, b)] = d;
}

std::optional<Rational> DistanceTable::get(const std::string& a, const std::string& b) const {
  if (a == b) return Rational(0);
  auto it = table_.find(std::minmax(a, b));
  if (it == table_.end()) return std::nullopt;
  return it->second;
}

namespace {

Rational sup_distance(const BunchKey& f, const BunchKey& g) {
  Rational best = 0;
  for (std::size_t i = 0; i < f.size(); ++i) best = std::max(best, abs(f[i] - g[i]));
  return best;
}

template <class Accept>
BunchCheck check_pairs(const Bunch& b, const DistanceTable& dist, Accept accept) {
  for (auto fi = b.values.begin(); fi != b.values.end(); ++fi) {
    for (auto gi = std::next(fi); gi != b.values.end(); ++gi) {
      auto d = dist.get(fi->second, gi->second);
      if (!d) {
        throw Error(ErrorCode::kMissingDistance,
                    "no distance between '" + fi->second + "' and '" + gi->second + "'");
      }
      if (!accept(sup_distance(fi->first, gi->first), *d)) {
        return {false, std::make_pair(fi->first, gi->first)};
      }
    }
  }
  return {};
}

}  // namespace

BunchCheck bunch_check_lipschitz(const Bunch& b, const DistanceTable& dist, const Rational& c) {
  if (c < Rational(1)) throw Error(ErrorCode::kPrecondition, "Lipschitz constant must be >= 1");
  return check_pairs(b, dist, [&](const Rational& norm, const Rational& d) {
    return norm / c <= d && d <= c * norm;
  });
}

BunchCheck bunch_check_coarse(const Bunch& b, const DistanceTable& dist, const StepModulus& rho,
                              const StepModulus& omega) {
  return check_pairs(b, dist, [&](const Rational& norm, const Rational& d) {
    return rho.at_most(norm, d) && omega.at_least(norm, d);
  });
}

Vine::Vine(std::vector<Bunch> bunches) : bunches_(std::move(bunches)) {
  std::sort(bunches_.begin(), bunches_.end());
  bunches_.erase(std::unique(bunches_.begin(), bunches_.end()), bunches_.end());
  for (const auto& b : bunches_) {
    validate_bunch(b);
    if (b.alphabet != bunches_.front().alphabet) {
      throw Error(ErrorCode::kNotAVine, "bunch over {" + b.ground.str() +
                                            "} uses a different alphabet");
    }
    for (std::size_t len = 0; len < b.ground.size(); ++len) {
      Bunch r = restrict_bunch(b, len);
      if (!std::binary_search(bunches_.begin(), bunches_.end(), r)) {
        throw Error(ErrorCode::kNotAVine, "bunch over {" + b.ground.str() +
                                              "} is missing its restriction to {" +
                                              r.ground.str() + "}");
      }
    }
  }
}

Vine vine_derivative(const Vine& v) {
  // A bunch is non-maximal exactly when it is a proper restriction of some
  // member; closure guarantees those restrictions are members.
  std::set<Bunch> non_maximal;
  for (const auto& b : v.bunches()) {
    for (std::size_t len = 0; len < b.ground.size(); ++len) non_maximal.insert(restrict_bunch(b, len));
  }
  return Vine(std::vector<Bunch>(non_maximal.begin(), non_maximal.end()));
}

std::size_t vine_rank(const Vine& v) {
  std::size_t rank = 0;
  for (Vine cur = v; !cur.empty(); cur = vine_derivative(cur)) ++rank;
  return rank;
}

}  // namespace interlace
