#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "interlace/embedding.hpp"
#include "interlace/finset.hpp"
#include "interlace/gluing.hpp"
#include "interlace/rational.hpp"
#include "interlace/schreier.hpp"
#include "interlace/tree.hpp"
#include "interlace/vine.hpp"

namespace interlace::cli {

using Json = nlohmann::ordered_json;

// Rationals travel as strings ("3/2"), integers may also arrive as numbers.
Json to_json(const Rational& r);
Rational rational_from_json(const Json& j);

Json to_json(const FinSet& s);
FinSet finset_from_json(const Json& j);

Json to_json(const EmbeddingResult& r);
EmbeddingResult embedding_from_json(const Json& j);

Json to_json(const VerificationReport& report);

// A tree file is a list of integer sequences; every prefix must be present.
Json to_json(const FinTree& t);
FinTree tree_from_json(const Json& j);

// {"ground":[1,2],"alphabet":["0","1"],"values":{"0,1":"p"}}, one key per
// function, listing its values on the ground set in order.
Json to_json(const Bunch& b);
Bunch bunch_from_json(const Json& j);

// A vine file is a list of bunches.
Json to_json(const Vine& v);
Vine vine_from_json(const Json& j);

Json to_json(const SchreierPoint& p);

Json to_json(const GluePairResult& r);

/// Throws Error{kParseError} with the nlohmann message on malformed text.
Json parse_json(const std::string& text);

}  // namespace interlace::cli
