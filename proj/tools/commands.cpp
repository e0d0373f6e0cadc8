#include "commands.hpp"

#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "interlace/embedding.hpp"
#include "interlace/error.hpp"
#include "interlace/gluing.hpp"
#include "interlace/interlacing.hpp"
#include "interlace/metric_json.hpp"
#include "interlace/ordinal.hpp"
#include "interlace/radii.hpp"
#include "interlace/schreier.hpp"
#include "interlace/tree.hpp"
#include "interlace/vine.hpp"
#include "json_io.hpp"

namespace interlace::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DomainFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

FinSet set_arg(const std::string& flag, const std::string& text) {
  try {
    return FinSet::parse(text);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
}

Rational epsilon_arg(const std::string& text) {
  Rational eps;
  try {
    eps = Rational::parse(text);
  } catch (const Error& e) {
    throw UsageError(std::string("--epsilon: ") + e.what());
  }
  if (eps.sign() <= 0 || eps >= Rational(1)) throw UsageError("--epsilon must lie strictly between 0 and 1");
  return eps;
}

OrdinalCNF ordinal_arg(const std::string& flag, const std::string& text, std::ostream& err) {
  std::vector<std::string> warnings;
  OrdinalCNF a;
  try {
    a = ordinal_parse(text, &warnings);
  } catch (const Error& e) {
    throw UsageError(flag + ": " + e.what());
  }
  for (const auto& w : warnings) err << "warning: " << flag << ": " << w << '\n';
  return a;
}

// Flattens nested JSON into "path: value" rows.
void flatten(const Json& j, const std::string& path, std::ostream& out) {
  if (j.is_object() && !j.empty()) {
    for (const auto& [key, value] : j.items()) flatten(value, path.empty() ? key : path + "." + key, out);
  } else if (j.is_array() && !j.empty() && (j.front().is_object() || j.front().is_array())) {
    for (std::size_t i = 0; i < j.size(); ++i) flatten(j[i], path + "[" + std::to_string(i) + "]", out);
  } else {
    out << std::left << std::setw(28) << path << ' ' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

struct Context {
  std::ostream& out;
  std::ostream& err;
  bool pretty = false;
  std::uint64_t seed = 0;

  void emit(const Json& j) const {
    if (pretty) {
      flatten(j, "", out);
    } else {
      out << j.dump() << '\n';
    }
  }
};

void cmd_dist(const Context& ctx, const std::string& a_text, const std::string& b_text, bool oracle) {
  const FinSet a = set_arg("--a", a_text);
  const FinSet b = set_arg("--b", b_text);
  Json j;
  const std::int64_t d = d_sum(a, b);
  j["d"] = d;
  j["adjacent"] = is_adjacent(a, b);
  if (oracle) {
    const std::int64_t bfs = bfs_distance(a, b);
    j["bfs"] = bfs;
    if (bfs != d) {
      ctx.emit(j);
      throw DomainFailure("oracle mismatch: d_sum " + std::to_string(d) + " vs bfs " + std::to_string(bfs));
    }
  }
  ctx.emit(j);
}

void cmd_geodesic(const Context& ctx, const std::string& a_text, const std::string& b_text) {
  const FinSet a = set_arg("--a", a_text);
  const FinSet b = set_arg("--b", b_text);
  const GeodesicPath p = geodesic(a, b);
  Json path = Json::array();
  for (const auto& v : p.vertices) path.push_back(to_json(v));
  Json j;
  j["d"] = d_sum(a, b);
  j["length"] = p.length();
  j["path"] = std::move(path);
  ctx.emit(j);
}

struct EmbedOptions {
  std::string input;
  std::string epsilon;
  std::optional<std::size_t> k;
  bool verify = false;
  bool even = false;
  unsigned jobs = 1;
  std::string output;
};

void cmd_embed(const Context& ctx, const EmbedOptions& o) {
  const FiniteMetric m = parse_metric_json(read_file(o.input));
  EmbeddingResult r;
  if (o.even) {
    if (!o.epsilon.empty() || o.k) throw UsageError("--even takes neither --epsilon nor --k");
    r = even_embed(EvenMetric(m));
  } else {
    if (o.epsilon.empty()) throw UsageError("--epsilon is required");
    r = embed(m, epsilon_arg(o.epsilon), o.k);
  }
  Json j = to_json(r);
  std::optional<VerificationReport> report;
  if (o.verify) {
    report = verify_embedding(m, r, o.jobs);
    j["verification"] = to_json(*report);
  }
  if (!o.output.empty()) {
    std::ofstream f(o.output, std::ios::binary | std::ios::trunc);
    if (!f) throw UsageError("cannot write " + o.output);
    f << to_json(r).dump(2) << '\n';
  }
  ctx.emit(j);
  if (report && !report->passed()) throw DomainFailure("verification failed: " + report->failures.front());
}

void cmd_verify(const Context& ctx, const std::string& input, const std::string& embedding_path, unsigned jobs) {
  const FiniteMetric m = parse_metric_json(read_file(input));
  const EmbeddingResult r = embedding_from_json(parse_json(read_file(embedding_path)));
  const VerificationReport report = verify_embedding(m, r, jobs);
  ctx.emit(to_json(report));
  if (!report.passed()) throw DomainFailure("verification failed: " + report.failures.front());
}

void cmd_schreier_member(const Context& ctx, const std::string& alpha_text, const std::string& set_text) {
  const OrdinalCNF alpha = ordinal_arg("--alpha", alpha_text, ctx.err);
  const FinSet a = set_arg("--set", set_text);
  Json j;
  j["alpha"] = alpha.str();
  j["set"] = to_json(a);
  j["member"] = schreier_member(a, alpha);
  ctx.emit(j);
}

void cmd_schreier_enum(const Context& ctx, const std::string& alpha_text, std::int64_t n, std::size_t budget) {
  const OrdinalCNF alpha = ordinal_arg("--alpha", alpha_text, ctx.err);
  if (n < 0) throw UsageError("--n must be nonnegative");
  const auto sets = schreier_enumerate(alpha, n, budget);
  Json list = Json::array();
  for (const auto& s : sets) list.push_back(to_json(s));
  Json j;
  j["alpha"] = alpha.str();
  j["n"] = n;
  j["count"] = sets.size();
  j["sets"] = std::move(list);
  ctx.emit(j);
}

void cmd_schreier_spread(const Context& ctx, const std::string& alpha_text, const std::string& beta_text,
                         std::int64_t n, std::int64_t bound) {
  const OrdinalCNF alpha = ordinal_arg("--alpha", alpha_text, ctx.err);
  const OrdinalCNF beta = ordinal_arg("--beta", beta_text, ctx.err);
  if (!(alpha < beta)) throw UsageError("--alpha must be smaller than --beta");
  if (n < 1) throw UsageError("--n must be positive");
  const auto l = spreading_search(alpha, beta, n, bound);
  Json j;
  j["alpha"] = alpha.str();
  j["beta"] = beta.str();
  j["n"] = n;
  j["l"] = l;
  j["verified"] = spreading_check(l, alpha, beta, n);
  ctx.emit(j);
}

void cmd_rank(const Context& ctx, const std::string& tree_path, const std::string& vine_path,
              const std::string& schreier_alpha, std::int64_t n) {
  const int given = !tree_path.empty() + !vine_path.empty() + !schreier_alpha.empty();
  if (given != 1) throw UsageError("give exactly one of --tree, --vine, --schreier");
  Json j;
  if (!tree_path.empty()) {
    const FinTree t = tree_from_json(parse_json(read_file(tree_path)));
    j["kind"] = "tree";
    j["size"] = t.size();
    j["rank"] = tree_rank(t);
  } else if (!vine_path.empty()) {
    const Vine v = vine_from_json(parse_json(read_file(vine_path)));
    j["kind"] = "vine";
    j["size"] = v.size();
    j["rank"] = vine_rank(v);
  } else {
    const OrdinalCNF alpha = ordinal_arg("--schreier", schreier_alpha, ctx.err);
    if (n < 0) throw UsageError("--n must be nonnegative");
    const FinTree t = schreier_tree(alpha, n);
    j["kind"] = "schreier";
    j["alpha"] = alpha.str();
    j["n"] = n;
    j["size"] = t.size();
    j["rank"] = tree_rank(t);
  }
  ctx.emit(j);
}

struct GlueOptions {
  std::size_t dimension = 3;
  std::size_t ladder = 20;
  std::size_t samples = 1000;
  std::int64_t radius = 100;
  std::string factor = "1";
  unsigned jobs = 1;
  bool summary = false;
};

void cmd_glue_demo(const Context& ctx, const GlueOptions& o) {
  if (o.dimension == 0) throw UsageError("--dimension must be positive");
  if (o.ladder < 4) throw UsageError("--ladder must be at least 4");
  if (o.radius < 0) throw UsageError("--radius must be nonnegative");
  Rational factor;
  try {
    factor = Rational::parse(o.factor);
  } catch (const Error& e) {
    throw UsageError(std::string("--factor: ") + e.what());
  }
  const LinearBallProvider provider(o.dimension, factor);
  const RadiiLadder ladder = choose_radii(provider.rho(), provider.omega(), o.ladder);
  const auto samples = sample_ball_pairs(o.dimension, o.radius, o.samples, ctx.seed);
  const GlueReport report = verify_glue(provider, ladder, samples, o.jobs);

  std::optional<Rational> lo, hi;
  Json pairs = Json::array();
  for (const auto& p : report.pairs) {
    if (p.ratio) {
      if (!lo || *p.ratio < *lo) lo = *p.ratio;
      if (!hi || *p.ratio > *hi) hi = *p.ratio;
    }
    if (!o.summary) pairs.push_back(to_json(p));
  }
  Json violations = Json::array();
  for (auto k : report.violations) {
    Json v = to_json(report.pairs[k]);
    v["index"] = k;
    v["lower_ok"] = report.pairs[k].lower_ok;
    v["upper_ok"] = report.pairs[k].upper_ok;
    violations.push_back(std::move(v));
  }
  Json j;
  j["dimension"] = o.dimension;
  j["radius"] = o.radius;
  j["factor"] = to_json(factor);
  j["seed"] = ctx.seed;
  j["ladder"] = ladder.radii();
  j["samples"] = report.pairs.size();
  j["min_ratio"] = lo ? to_json(*lo) : Json(nullptr);
  j["max_ratio"] = hi ? to_json(*hi) : Json(nullptr);
  j["violation_count"] = report.violations.size();
  j["violations"] = std::move(violations);
  if (!o.summary) j["pairs"] = std::move(pairs);
  ctx.emit(j);
  if (!report.passed()) throw DomainFailure(std::to_string(report.violations.size()) + " glue bound violations");
}

void cmd_points(const Context& ctx, const std::string& alpha_text, std::int64_t n, std::int64_t m,
                bool distances, std::size_t budget) {
  const OrdinalCNF alpha = ordinal_arg("--alpha", alpha_text, ctx.err);
  if (n < 0) throw UsageError("--n must be nonnegative");
  if (m < 1) throw UsageError("--m must be positive");
  const auto points = schreier_points(alpha, n, m, budget);
  Json list = Json::array();
  for (const auto& p : points) list.push_back(to_json(p));
  Json j;
  j["alpha"] = alpha.str();
  j["n"] = n;
  j["m"] = m;
  j["count"] = points.size();
  j["points"] = std::move(list);
  if (distances) {
    Json rows = Json::array();
    for (const auto& f : points) {
      Json row = Json::array();
      for (const auto& g : points) row.push_back(to_json(d_inf(f, g)));
      rows.push_back(std::move(row));
    }
    j["d_inf"] = std::move(rows);
  }
  ctx.emit(j);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Interlacing graph embeddings, Schreier families and vine ranks", "interlace"};
  app.require_subcommand(1);
  app.fallthrough();

  Context ctx{out, err};
  app.add_flag("--pretty", ctx.pretty, "Human-readable table instead of JSON");
  app.add_option("--seed", ctx.seed, "Seed for randomized commands");

  std::string a_text, b_text;
  bool oracle = false;
  auto* dist = app.add_subcommand("dist", "Interlacing distance and adjacency of two sets");
  dist->add_option("--a", a_text, "First set, comma separated")->required();
  dist->add_option("--b", b_text, "Second set, comma separated")->required();
  dist->add_flag("--oracle", oracle, "Cross-check against breadth-first search");

  auto* geo = app.add_subcommand("geodesic", "Shortest path between two sets");
  geo->add_option("--a", a_text, "First set, comma separated")->required();
  geo->add_option("--b", b_text, "Second set, comma separated")->required();

  EmbedOptions eo;
  std::size_t target_k = 0;
  auto* emb = app.add_subcommand("embed", "Embed a finite metric into the interlacing graph");
  emb->add_option("--input", eo.input, "Metric JSON file")->required();
  emb->add_option("--epsilon", eo.epsilon, "Distortion parameter in (0,1), e.g. 1/4");
  auto* k_opt = emb->add_option("--k", target_k, "Lift images to this cardinality");
  emb->add_flag("--verify", eo.verify, "Recompute the certificate");
  emb->add_flag("--even", eo.even, "Exact embedding of an even-integer metric");
  emb->add_option("--jobs", eo.jobs, "Verification threads")->check(CLI::PositiveNumber);
  emb->add_option("--output", eo.output, "Also write the result JSON here");

  std::string metric_path, embedding_path;
  unsigned verify_jobs = 1;
  auto* ver = app.add_subcommand("verify", "Check an embedding result against a metric");
  ver->add_option("--input", metric_path, "Metric JSON file")->required();
  ver->add_option("--embedding", embedding_path, "Embedding JSON file")->required();
  ver->add_option("--jobs", verify_jobs, "Verification threads")->check(CLI::PositiveNumber);

  std::string alpha_text, beta_text, set_text;
  std::int64_t n = 0, m = 1, bound = 4096;
  std::size_t budget = kDefaultEnumerationBudget;
  auto* sch = app.add_subcommand("schreier", "Schreier families");
  sch->require_subcommand(1);
  auto* member = sch->add_subcommand("member", "Membership of a set in S_alpha");
  member->add_option("--alpha", alpha_text, "Ordinal below w^w, e.g. w*2+1")->required();
  member->add_option("--set", set_text, "Set, comma separated")->required();
  auto* enumerate = sch->add_subcommand("enum", "All members of S_alpha inside {1..n}");
  enumerate->add_option("--alpha", alpha_text, "Ordinal below w^w")->required();
  enumerate->add_option("--n", n, "Universe size")->required();
  enumerate->add_option("--budget", budget, "Maximum number of sets");
  auto* spread = sch->add_subcommand("spread", "Spreading sequence taking S_alpha into S_beta");
  spread->add_option("--alpha", alpha_text, "Smaller ordinal")->required();
  spread->add_option("--beta", beta_text, "Larger ordinal")->required();
  spread->add_option("--n", n, "Length of the sequence")->required();
  spread->add_option("--bound", bound, "Largest element to try");

  std::string tree_path, vine_path, schreier_alpha;
  auto* rank = app.add_subcommand("rank", "Derivation rank of a finite tree or vine");
  rank->add_option("--tree", tree_path, "Tree JSON file");
  rank->add_option("--vine", vine_path, "Vine JSON file");
  rank->add_option("--schreier", schreier_alpha, "Tree of S_alpha restricted to {1..n}");
  rank->add_option("--n", n, "Universe size for --schreier");

  GlueOptions go;
  auto* glue_cmd = app.add_subcommand("glue-demo", "Glue identity ball maps on Q^d and check the moduli");
  glue_cmd->add_option("--dimension", go.dimension, "Dimension d");
  glue_cmd->add_option("--ladder", go.ladder, "Number of radii after r_0");
  glue_cmd->add_option("--samples", go.samples, "Number of random pairs");
  glue_cmd->add_option("--radius", go.radius, "Sampling ball radius");
  glue_cmd->add_option("--factor", go.factor, "Scale factor of each ball map");
  glue_cmd->add_option("--jobs", go.jobs, "Verification threads")->check(CLI::PositiveNumber);
  glue_cmd->add_flag("--summary", go.summary, "Omit the per-pair list");

  bool distances = false;
  auto* pts = app.add_subcommand("points", "Points of the Schreier space with values in +-1..+-m");
  pts->add_option("--alpha", alpha_text, "Ordinal below w^w")->required();
  pts->add_option("--n", n, "Universe size")->required();
  pts->add_option("--m", m, "Largest absolute coordinate");
  pts->add_option("--budget", budget, "Maximum number of points");
  pts->add_flag("--distances", distances, "Include the sup-distance matrix");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (*dist) {
      cmd_dist(ctx, a_text, b_text, oracle);
    } else if (*geo) {
      cmd_geodesic(ctx, a_text, b_text);
    } else if (*emb) {
      if (*k_opt) eo.k = target_k;
      cmd_embed(ctx, eo);
    } else if (*ver) {
      cmd_verify(ctx, metric_path, embedding_path, verify_jobs);
    } else if (*member) {
      cmd_schreier_member(ctx, alpha_text, set_text);
    } else if (*enumerate) {
      cmd_schreier_enum(ctx, alpha_text, n, budget);
    } else if (*spread) {
      cmd_schreier_spread(ctx, alpha_text, beta_text, n, bound);
    } else if (*rank) {
      cmd_rank(ctx, tree_path, vine_path, schreier_alpha, n);
    } else if (*glue_cmd) {
      cmd_glue_demo(ctx, go);
    } else if (*pts) {
      cmd_points(ctx, alpha_text, n, m, distances, budget);
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsageError;
  } catch (const DomainFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitOk;
}

}  // namespace interlace::cli
