#include "interlace/embedding.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>

#include "interlace/error.hpp"
#include "interlace/interlacing.hpp"

namespace interlace {

EvenMetric::EvenMetric(FiniteMetric base) : base_(std::move(base)) {
  for (std::size_t i = 0; i < base_.size(); ++i) {
    for (std::size_t j = i + 1; j < base_.size(); ++j) {
      const Rational& d = base_.d(i, j);
      if (!d.is_integer() || d.num() % 2 != 0) {
        throw Error(ErrorCode::kOddDistance, "d(" + base_.label(i) + "," + base_.label(j) +
                                                 ") = " + d.str() + " is not an even integer");
      }
    }
  }
}

namespace {

void require_epsilon(const Rational& epsilon) {
  if (epsilon.sign() <= 0 || epsilon >= Rational(1)) {
    throw Error(ErrorCode::kEpsilonOutOfRange, "epsilon must lie in (0,1), got " + epsilon.str());
  }
}

}  // namespace

RoundedMetric round_metric(const FiniteMetric& m, const Rational& epsilon) {
  require_epsilon(epsilon);
  const Rational separation = sep(m);
  const BigInt q_big = (Rational(1) / (separation * epsilon)).ceil();
  const std::int64_t q = Rational(q_big, 1).to_int64();

  const std::size_t n = m.size();
  std::vector<std::vector<BigInt>> steps(n, std::vector<BigInt>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) steps[i][j] = (m.d(i, j) * Rational(q)).floor();

  // Chains of any length collapse to shortest paths over the complete graph.
  for (std::size_t via = 0; via < n; ++via)
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (steps[i][via] + steps[via][j] < steps[i][j]) steps[i][j] = steps[i][via] + steps[via][j];

  DistanceMatrix rounded(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) rounded[i][j] = Rational(steps[i][j], q);
  return {q, validate_metric(m.labels(), std::move(rounded))};
}

EvenMetric evenize(const FiniteMetric& rounded, std::int64_t q) {
  if (q < 1) throw Error(ErrorCode::kPrecondition, "q must be positive");
  const Rational factor(2 * q);
  DistanceMatrix even(rounded.size(), std::vector<Rational>(rounded.size()));
  for (std::size_t i = 0; i < rounded.size(); ++i) {
    for (std::size_t j = 0; j < rounded.size(); ++j) {
      const Rational scaled = rounded.d(i, j) * Rational(q);
      if (!scaled.is_integer()) {
        throw Error(ErrorCode::kNotQIntegral, "q*d(" + rounded.label(i) + "," + rounded.label(j) +
                                                  ") = " + scaled.str() + " is not an integer");
      }
      even[i][j] = scaled * Rational(2);
    }
  }
  return EvenMetric(validate_metric(rounded.labels(), std::move(even)));
}

EvenEmbedTrace even_embed_trace(const EvenMetric& e) {
  const std::size_t n = e.size();
  EvenEmbedTrace trace;

  std::int64_t diameter = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) diameter = std::max(diameter, e.d(i, j));
  // Least even D with 2D >= diam.
  const std::int64_t D = 2 * ((diameter + 3) / 4);
  trace.aux_distance = D;

  // Enlarged point list: index 1 is the auxiliary point, 2..n+1 the input
  // points in order, n+2 the ghost point at distance 0 from everything.
  const auto extended = [&](std::size_t x, std::size_t idx) -> std::int64_t {
    if (idx == 1) return D;
    if (idx == n + 2) return 0;
    return e.d(x, idx - 2);
  };

  trace.block_sizes.assign(n + 1, 0);
  for (std::size_t x = 0; x < n; ++x) {
    FinSuppSeq phi0;
    std::vector<std::int64_t> coords(n + 1);
    for (std::size_t i = 1; i <= n + 1; ++i) {
      const std::int64_t diff = extended(x, i) - extended(x, i + 1);
      phi0.set(static_cast<FinSuppSeq::Index>(i), Rational(diff) / Rational(2));
      // diff is even because D and every distance are even.
      coords[i - 1] = diff / 2 + D;
      if (diff % 2 != 0 || coords[i - 1] < 0) {
        throw std::logic_error("even_embed: coordinate not a nonnegative integer");
      }
      trace.block_sizes[i - 1] = std::max(trace.block_sizes[i - 1], coords[i - 1]);
    }
    trace.phi0.push_back(std::move(phi0));
    trace.phi1.push_back(std::move(coords));
  }

  for (std::size_t x = 0; x < n; ++x) {
    std::vector<FinSet::Element> elems;
    std::int64_t offset = 0;
    for (std::size_t k = 0; k <= n; ++k) {
      for (std::int64_t t = 1; t <= trace.phi1[x][k]; ++t) elems.push_back(offset + t);
      offset += trace.block_sizes[k];
    }
    trace.images.push_back(FinSet::from_sorted(std::move(elems)));
  }
  return trace;
}

EmbeddingResult even_embed(const EvenMetric& e) {
  const EvenEmbedTrace trace = even_embed_trace(e);
  EmbeddingResult r;
  const auto n = static_cast<std::int64_t>(e.size());
  r.aux_distance = trace.aux_distance;
  // (n + 3/2) D with D even is an integer.
  r.k = static_cast<std::size_t>((2 * n + 3) * trace.aux_distance / 2);
  r.base_k = r.k;
  for (std::size_t x = 0; x < e.size(); ++x) {
    if (trace.images[x].size() != r.k) throw std::logic_error("even_embed: nonuniform cardinality");
    r.assignment.emplace(e.base().label(x), trace.images[x]);
  }
  return r;
}

Rational embedding_size_bound(const FiniteMetric& m, const Rational& epsilon) {
  const Rational n_plus(Rational(static_cast<std::int64_t>(2 * m.size() + 3)) / Rational(2));
  return n_plus * (aspect_ratio(m) / epsilon + diam(m) + Rational(1));
}

namespace {

// Ratios d_I / (scale d) over all pairs, as (min, max); nullopt max-over-min
// when some ratio is zero.
std::pair<Rational, Rational> ratio_range(const FiniteMetric& m, const EmbeddingResult& r) {
  std::optional<Rational> lo, hi;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = i + 1; j < m.size(); ++j) {
      const auto dI = d_sum(r.assignment.at(m.label(i)), r.assignment.at(m.label(j)));
      const Rational ratio = Rational(dI) / (r.scale * m.d(i, j));
      if (!lo || ratio < *lo) lo = ratio;
      if (!hi || ratio > *hi) hi = ratio;
    }
  }
  return {lo.value_or(Rational(1)), hi.value_or(Rational(1))};
}

}  // namespace

EmbeddingResult embed(const FiniteMetric& m, const Rational& epsilon,
                      std::optional<std::size_t> target_k) {
  require_epsilon(epsilon);
  RoundedMetric rounded = round_metric(m, epsilon);
  EmbeddingResult r = even_embed(evenize(rounded.metric, rounded.q));
  r.q = rounded.q;
  r.scale = Rational(2 * rounded.q);
  r.epsilon = epsilon;
  r.k_bound = embedding_size_bound(m, epsilon);

  if (target_k && *target_k != r.k) {
    std::vector<std::string> labels;
    std::vector<FinSet> family;
    for (const auto& [label, set] : r.assignment) {
      labels.push_back(label);
      family.push_back(set);
    }
    auto lifted = lift_cardinality(family, *target_k);
    for (std::size_t i = 0; i < labels.size(); ++i) r.assignment[labels[i]] = std::move(lifted[i]);
    r.k = *target_k;
  }

  const auto [lo, hi] = ratio_range(m, r);
  if (lo.is_zero()) throw std::logic_error("embed: two points share an image");
  r.certified_distortion = hi / lo;
  return r;
}

namespace {

void check_pairs(const FiniteMetric& m, const EmbeddingResult& r, std::size_t begin,
                 std::size_t end, const std::vector<std::pair<std::size_t, std::size_t>>& index,
                 std::vector<PairCheck>& out) {
  const Rational lower_factor = Rational(1) - r.epsilon;
  for (std::size_t p = begin; p < end; ++p) {
    const auto [i, j] = index[p];
    PairCheck& c = out[p];
    c.a = m.label(i);
    c.b = m.label(j);
    c.distance = m.d(i, j);
    c.image_distance = d_sum(r.assignment.at(c.a), r.assignment.at(c.b));
    const Rational target = r.scale * c.distance;
    c.ratio = Rational(c.image_distance) / target;
    const Rational dI(c.image_distance);
    c.within_bounds = lower_factor * target <= dI && dI <= target;
  }
}

}  // namespace

VerificationReport verify_embedding(const FiniteMetric& m, const EmbeddingResult& r,
                                    unsigned jobs) {
  for (const auto& label : m.labels()) {
    if (!r.assignment.contains(label)) {
      throw Error(ErrorCode::kMissingLabel, "no image for point '" + label + "'");
    }
  }
  if (r.scale.sign() <= 0) throw Error(ErrorCode::kPrecondition, "scale must be positive");

  VerificationReport report;
  std::vector<std::pair<std::size_t, std::size_t>> index;
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = i + 1; j < m.size(); ++j) index.emplace_back(i, j);
  report.pairs.resize(index.size());

  jobs = std::max(1U, std::min<unsigned>(jobs, static_cast<unsigned>(index.size())));
  if (jobs <= 1) {
    check_pairs(m, r, 0, index.size(), index, report.pairs);
  } else {
    std::vector<std::jthread> workers;
    const std::size_t chunk = (index.size() + jobs - 1) / jobs;
    for (std::size_t begin = 0; begin < index.size(); begin += chunk) {
      const std::size_t end = std::min(index.size(), begin + chunk);
      workers.emplace_back([&, begin, end] { check_pairs(m, r, begin, end, index, report.pairs); });
    }
  }

  std::optional<std::size_t> first_size;
  for (const auto& label : m.labels()) {
    const std::size_t size = r.assignment.at(label).size();
    if (!first_size) first_size = size;
    if (size != *first_size) report.cardinality_uniform = false;
    if (size != r.k) report.k_consistent = false;
  }
  if (!report.cardinality_uniform) {
    report.failures.push_back("CARDINALITY_NONUNIFORM: image sets have different sizes");
  } else if (!report.k_consistent) {
    report.failures.push_back("CARDINALITY_MISMATCH: image sets do not have the declared k = " +
                              std::to_string(r.k));
  }

  if (r.k_bound.sign() > 0 && Rational(static_cast<std::int64_t>(r.base_k)) > r.k_bound) {
    report.k_within_bound = false;
    report.failures.push_back("K_BOUND_EXCEEDED: constructed k = " + std::to_string(r.base_k) +
                              " > " + r.k_bound.str());
  }

  for (const auto& c : report.pairs) {
    if (!c.within_bounds) {
      report.failures.push_back("PAIR_OUT_OF_BOUNDS: (" + c.a + "," + c.b + ") d = " +
                                c.distance.str() + ", d_I = " + std::to_string(c.image_distance) +
                                ", ratio = " + c.ratio.str());
    }
  }

  if (!report.pairs.empty()) {
    report.min_ratio = report.pairs.front().ratio;
    report.max_ratio = report.pairs.front().ratio;
    for (const auto& c : report.pairs) {
      report.min_ratio = std::min(report.min_ratio, c.ratio);
      report.max_ratio = std::max(report.max_ratio, c.ratio);
    }
    if (!report.min_ratio.is_zero()) report.distortion = report.max_ratio / report.min_ratio;
  } else {
    report.min_ratio = report.max_ratio = 1;
    report.distortion = Rational(1);
  }

  const Rational allowed = Rational(1) / (Rational(1) - r.epsilon);
  if (!report.distortion || *report.distortion > allowed) {
    report.distortion_within_bound = false;
    report.failures.push_back("DISTORTION_EXCEEDED: " +
                              (report.distortion ? report.distortion->str() : std::string("inf")) +
                              " > " + allowed.str());
  } else if (*report.distortion != r.certified_distortion) {
    report.failures.push_back("DISTORTION_MISMATCH: recomputed " + report.distortion->str() +
                              ", claimed " + r.certified_distortion.str());
  }
  return report;
}

}  // namespace interlace
