#include "json_io.hpp"

#include <sstream>

#include "interlace/error.hpp"

namespace interlace::cli {

namespace {

[[noreturn]] void bad(const std::string& what) { throw Error(ErrorCode::kParseError, what); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) bad(std::string("missing field \"") + name + "\"");
  return j.at(name);
}

std::int64_t integer_from_json(const Json& j) {
  if (!j.is_number_integer()) bad("expected an integer, got " + j.dump());
  return j.get<std::int64_t>();
}

std::string key_of(const BunchKey& f) {
  std::string out;
  for (std::size_t i = 0; i < f.size(); ++i) {
    if (i) out += ',';
    out += f[i].str();
  }
  return out;
}

BunchKey key_from(const std::string& text) {
  BunchKey f;
  if (text.empty()) return f;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) f.push_back(Rational::parse(item));
  return f;
}

}  // namespace

Json to_json(const Rational& r) { return r.str(); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
  bad("expected a rational string, got " + j.dump());
}

Json to_json(const FinSet& s) {
  Json out = Json::array();
  for (auto x : s) out.push_back(x);
  return out;
}

FinSet finset_from_json(const Json& j) {
  if (!j.is_array()) bad("expected an integer array, got " + j.dump());
  std::vector<std::int64_t> elems;
  for (const auto& x : j) elems.push_back(integer_from_json(x));
  for (std::size_t i = 1; i < elems.size(); ++i) {
    if (elems[i] <= elems[i - 1]) bad("set elements must be strictly increasing: " + j.dump());
  }
  if (!elems.empty() && elems.front() < 1) bad("set elements must be positive: " + j.dump());
  return FinSet::from_sorted(std::move(elems));
}

Json to_json(const EmbeddingResult& r) {
  Json sets = Json::object();
  for (const auto& [label, s] : r.assignment) sets[label] = to_json(s);
  Json out;
  out["epsilon"] = to_json(r.epsilon);
  out["scale"] = to_json(r.scale);
  out["k"] = r.k;
  out["base_k"] = r.base_k;
  out["q"] = r.q;
  out["D"] = r.aux_distance;
  out["bound_k"] = to_json(r.k_bound);
  out["distortion"] = to_json(r.certified_distortion);
  out["certified"] = r.epsilon.is_zero()
                         ? r.certified_distortion == Rational(1)
                         : r.certified_distortion <= Rational(1) / (Rational(1) - r.epsilon) &&
                               (r.k_bound.is_zero() || Rational(static_cast<std::int64_t>(r.base_k)) <= r.k_bound);
  out["sets"] = std::move(sets);
  return out;
}

EmbeddingResult embedding_from_json(const Json& j) {
  EmbeddingResult r;
  r.epsilon = rational_from_json(field(j, "epsilon"));
  r.scale = rational_from_json(field(j, "scale"));
  r.k = static_cast<std::size_t>(integer_from_json(field(j, "k")));
  r.base_k = static_cast<std::size_t>(integer_from_json(field(j, "base_k")));
  r.q = integer_from_json(field(j, "q"));
  r.aux_distance = integer_from_json(field(j, "D"));
  r.k_bound = rational_from_json(field(j, "bound_k"));
  r.certified_distortion = rational_from_json(field(j, "distortion"));
  const Json& sets = field(j, "sets");
  if (!sets.is_object()) bad("\"sets\" must be an object");
  for (const auto& [label, s] : sets.items()) r.assignment.emplace(label, finset_from_json(s));
  return r;
}

Json to_json(const VerificationReport& report) {
  Json out;
  out["passed"] = report.passed();
  out["distortion"] = report.distortion ? to_json(*report.distortion) : Json(nullptr);
  out["min_ratio"] = to_json(report.min_ratio);
  out["max_ratio"] = to_json(report.max_ratio);
  out["cardinality_uniform"] = report.cardinality_uniform;
  out["k_consistent"] = report.k_consistent;
  out["k_within_bound"] = report.k_within_bound;
  out["distortion_within_bound"] = report.distortion_within_bound;
  out["pairs"] = report.pairs.size();
  out["failures"] = report.failures;
  return out;
}

Json to_json(const FinTree& t) {
  Json out = Json::array();
  for (const auto& node : t.nodes()) out.push_back(node);
  return out;
}

FinTree tree_from_json(const Json& j) {
  if (!j.is_array()) bad("a tree must be a list of integer sequences");
  std::set<FinTree::Node> nodes;
  for (const auto& seq : j) {
    if (!seq.is_array()) bad("tree node must be an integer array, got " + seq.dump());
    FinTree::Node node;
    for (const auto& x : seq) node.push_back(integer_from_json(x));
    nodes.insert(std::move(node));
  }
  return FinTree(std::move(nodes));
}

Json to_json(const Bunch& b) {
  Json out;
  out["ground"] = to_json(b.ground);
  Json alphabet = Json::array();
  for (const auto& e : b.alphabet) alphabet.push_back(to_json(e));
  out["alphabet"] = std::move(alphabet);
  Json values = Json::object();
  for (const auto& [f, point] : b.values) values[key_of(f)] = point;
  out["values"] = std::move(values);
  return out;
}

Bunch bunch_from_json(const Json& j) {
  Bunch b;
  b.ground = finset_from_json(field(j, "ground"));
  const Json& alphabet = field(j, "alphabet");
  if (!alphabet.is_array()) bad("\"alphabet\" must be an array");
  for (const auto& e : alphabet) b.alphabet.push_back(rational_from_json(e));
  const Json& values = field(j, "values");
  if (!values.is_object()) bad("\"values\" must be an object");
  for (const auto& [key, point] : values.items()) {
    if (!point.is_string()) bad("point identifiers must be strings");
    BunchKey f = key_from(key);
    if (f.size() != b.ground.size()) bad("function \"" + key + "\" does not match the ground set");
    b.values.emplace(std::move(f), point.get<std::string>());
  }
  validate_bunch(b);
  return b;
}

Json to_json(const Vine& v) {
  Json out = Json::array();
  for (const auto& b : v.bunches()) out.push_back(to_json(b));
  return out;
}

Vine vine_from_json(const Json& j) {
  if (!j.is_array()) bad("a vine must be a list of bunches");
  std::vector<Bunch> bunches;
  for (const auto& b : j) bunches.push_back(bunch_from_json(b));
  return Vine(std::move(bunches));
}

Json to_json(const SchreierPoint& p) {
  Json coords = Json::object();
  for (const auto& [i, c] : p.coords.entries()) coords[std::to_string(i)] = to_json(c);
  Json out;
  out["support"] = to_json(p.support());
  out["coords"] = std::move(coords);
  return out;
}

Json to_json(const GluePairResult& r) {
  Json out;
  out["t"] = to_json(r.norm_gap);
  out["d"] = to_json(r.distance);
  out["lower"] = to_json(r.lower);
  out["upper"] = r.upper ? to_json(*r.upper) : Json(nullptr);
  out["ratio"] = r.ratio ? to_json(*r.ratio) : Json(nullptr);
  return out;
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad(e.what());
  }
}

}  // namespace interlace::cli
