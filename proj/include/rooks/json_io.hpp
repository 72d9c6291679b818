#pragma once

#include "rooks/bijection.hpp"
#include "rooks/board.hpp"
#include "rooks/graph.hpp"
#include "rooks/multivariate.hpp"
#include "rooks/polynomial.hpp"
#include "rooks/series.hpp"
#include "rooks/tree.hpp"

#include <json.hpp>

#include <string>

namespace rooks::io {

using Json = nlohmann::ordered_json;

// Big integers are written as decimal strings. Readers accept strings or JSON
// integers. Malformed documents raise InvalidArgument.

Json to_json(const BigInt& value);
Json to_json(const Rational& value);
BigInt bigint_from_json(const Json& j);

/// {"variable": "x", "coefficients": ["c0", "c1", ...]}
Json to_json(const IntegerPolynomial& p, const std::string& variable = "x");
IntegerPolynomial polynomial_from_json(const Json& j);

/// {"rows": [{"from": a, "to": b}, ...]}, bottom row first. A row made of
/// several intervals is written as an array of such objects; an empty row is
/// {"from": 1, "to": 0}.
Json to_json(const Board& board);
Board board_from_json(const Json& j);

/// {"r": ["r0", "r1", ...]}
Json to_json(const RookVector& r);

/// {"n", "k", "root", "nodes": [{"label", "parent", "slot"}, ...]}, sorted by
/// label with the root left out. Readers also accept a root entry.
Json to_json(const PlaneKaryTree& tree);
PlaneKaryTree tree_from_json(const Json& j);

/// {"n", "k", "g": [[column, colour], ...]}
Json to_json(const ColoredPlacement& g);
ColoredPlacement colored_placement_from_json(const Json& j);

/// {"n", "k", "f": [...]}
Json to_json(const FlatPlacement& f);
FlatPlacement flat_placement_from_json(const Json& j);

/// {"vertices": n, "edges": [[i, j], ...]}
Json to_json(const SimpleGraph& g);
SimpleGraph graph_from_json(const Json& j);

/// {"k", "terms": [{"u": [...], "v": [...], "coefficient": "c"}, ...]}
Json to_json(const MultivariatePolynomial& p);

/// {"identity", "order", "status": "pass"|"fail", "first_mismatch": n|null}
Json to_json(const VerificationReport& report);

/// Parses text, reporting syntax errors as InvalidArgument.
Json parse(const std::string& text);

}  // namespace rooks::io
