#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "interlace/finset.hpp"
#include "interlace/finsupp.hpp"
#include "interlace/metric.hpp"
#include "interlace/rational.hpp"

namespace interlace {

/// A finite metric whose off-diagonal distances are all even positive
/// integers.
class EvenMetric {
 public:
  /// Throws Error{kOddDistance} if some distance is not an even integer.
  explicit EvenMetric(FiniteMetric base);

  const FiniteMetric& base() const noexcept { return base_; }
  std::size_t size() const noexcept { return base_.size(); }
  std::int64_t d(std::size_t i, std::size_t j) const { return base_.d(i, j).to_int64(); }

 private:
  FiniteMetric base_;
};

struct RoundedMetric {
  std::int64_t q = 1;
  FiniteMetric metric;
};

/// Rounds every distance down to the grid (1/q)Z with q = ceil(1/(sep*eps)),
/// then closes under shortest paths. The result satisfies
/// (1-eps) d <= d~ <= d and q*d~ is integral.
/// Throws Error{kEpsilonOutOfRange} unless 0 < eps < 1.
RoundedMetric round_metric(const FiniteMetric& m, const Rational& epsilon);

/// The metric 2q*d~. Throws Error{kNotQIntegral} if q*d~ is not integral.
EvenMetric evenize(const FiniteMetric& rounded, std::int64_t q);

struct EmbeddingResult {
  std::map<std::string, FinSet> assignment;
  std::size_t k = 0;
  /// Cardinality produced by the construction; differs from k only after
  /// lifting to a larger target.
  std::size_t base_k = 0;
  Rational scale = 1;
  Rational epsilon = 0;
  Rational certified_distortion = 1;
  /// Distance of the auxiliary point in the even-metric construction.
  std::int64_t aux_distance = 0;
  std::int64_t q = 1;
  /// (n + 3/2)(aspect/eps + diam + 1); zero for even_embed.
  Rational k_bound = 0;
};

/// Intermediate values of the even-metric construction, in input order.
struct EvenEmbedTrace {
  std::int64_t aux_distance = 0;              // D
  std::vector<FinSuppSeq> phi0;               // one per point
  std::vector<std::vector<std::int64_t>> phi1;  // nonnegative coordinates
  std::vector<std::int64_t> block_sizes;      // N_1 .. N_{n+1}
  std::vector<FinSet> images;
};

/// Isometric embedding of an even metric into the interlacing graph on
/// k-element sets, k = (n + 3/2) D. Points are taken in input order; an
/// auxiliary point sits at distance D from all of them and a ghost point at
/// distance 0 closes the telescoping sum.
EvenEmbedTrace even_embed_trace(const EvenMetric& e);
EmbeddingResult even_embed(const EvenMetric& e);

/// Full pipeline: round, evenize, embed. d_I(A(x), A(y)) lies in
/// [(1-eps) scale d(x,y), scale d(x,y)] with scale = 2q. When `target_k` is
/// given the images are lifted to that cardinality (Error{kMTooSmall} if it
/// is below the constructed k).
EmbeddingResult embed(const FiniteMetric& m, const Rational& epsilon,
                      std::optional<std::size_t> target_k = std::nullopt);

/// (n + 3/2)(aspect/eps + diam + 1)
Rational embedding_size_bound(const FiniteMetric& m, const Rational& epsilon);

struct PairCheck {
  std::string a;
  std::string b;
  Rational distance;
  std::int64_t image_distance = 0;
  Rational ratio;  // image_distance / (scale * distance)
  bool within_bounds = false;
};

struct VerificationReport {
  std::vector<PairCheck> pairs;
  std::optional<Rational> distortion;  // nullopt: some pair collapsed
  Rational min_ratio;
  Rational max_ratio;
  bool cardinality_uniform = true;
  bool k_consistent = true;
  bool k_within_bound = true;
  bool distortion_within_bound = true;
  std::vector<std::string> failures;

  bool passed() const noexcept { return failures.empty(); }
};

/// Recomputes every pairwise image distance from scratch and re-derives the
/// distortion, cardinalities and size bound. Throws Error{kMissingLabel} if
/// a point has no image. `jobs` > 1 splits the pair loop across threads.
VerificationReport verify_embedding(const FiniteMetric& m, const EmbeddingResult& r,
                                    unsigned jobs = 1);

}  // namespace interlace
