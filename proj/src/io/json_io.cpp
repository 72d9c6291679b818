#include "rooks/json_io.hpp"

namespace rooks::io {
namespace {

int int_field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_number_integer())
        throw InvalidArgument(std::string("expected integer field \"") + key + "\"");
    return j.at(key).get<int>();
}

const Json& array_field(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key) || !j.at(key).is_array())
        throw InvalidArgument(std::string("expected array field \"") + key + "\"");
    return j.at(key);
}

int as_int(const Json& j)
{
    if (!j.is_number_integer()) throw InvalidArgument("expected an integer");
    return j.get<int>();
}

Json interval_to_json(const ColumnInterval& c) { return Json{{"from", c.from}, {"to", c.to}}; }

ColumnInterval interval_from_json(const Json& j) { return {int_field(j, "from"), int_field(j, "to")}; }

}  // namespace

Json to_json(const BigInt& value) { return to_string(value); }
Json to_json(const Rational& value) { return to_string(value); }

BigInt bigint_from_json(const Json& j)
{
    if (j.is_string()) return parse_bigint(j.get<std::string>());
    if (j.is_number_integer()) return BigInt(j.get<long long>());
    throw InvalidArgument("expected an integer or a decimal string");
}

Json to_json(const IntegerPolynomial& p, const std::string& variable)
{
    Json coefficients = Json::array();
    for (int i = 0; i <= p.degree(); ++i) coefficients.push_back(to_json(p.coefficient(static_cast<unsigned>(i))));
    return Json{{"variable", variable}, {"coefficients", coefficients}};
}

IntegerPolynomial polynomial_from_json(const Json& j)
{
    std::vector<BigInt> coefficients;
    for (const auto& c : array_field(j, "coefficients")) coefficients.push_back(bigint_from_json(c));
    return IntegerPolynomial(std::move(coefficients));
}

Json to_json(const Board& board)
{
    Json rows = Json::array();
    for (const auto& row : board.rows()) {
        if (row.empty()) {
            rows.push_back(interval_to_json({1, 0}));
        } else if (row.size() == 1) {
            rows.push_back(interval_to_json(row.front()));
        } else {
            Json parts = Json::array();
            for (const auto& c : row) parts.push_back(interval_to_json(c));
            rows.push_back(parts);
        }
    }
    return Json{{"rows", rows}};
}

Board board_from_json(const Json& j)
{
    std::vector<Board::Row> rows;
    for (const auto& row : array_field(j, "rows")) {
        Board::Row parsed;
        if (row.is_array()) {
            for (const auto& c : row) parsed.push_back(interval_from_json(c));
        } else {
            parsed.push_back(interval_from_json(row));
        }
        rows.push_back(std::move(parsed));
    }
    return Board(std::move(rows));
}

Json to_json(const RookVector& r)
{
    Json counts = Json::array();
    for (const auto& c : r.counts) counts.push_back(to_json(c));
    return Json{{"r", counts}};
}

Json to_json(const PlaneKaryTree& tree)
{
    Json nodes = Json::array();
    for (int label = 1; label <= tree.n(); ++label)
        if (label != tree.root()) nodes.push_back(Json{{"label", label}, {"parent", tree.parent(label)}, {"slot", tree.slot(label)}});
    return Json{{"n", tree.n()}, {"k", tree.k()}, {"root", tree.root()}, {"nodes", nodes}};
}

PlaneKaryTree tree_from_json(const Json& j)
{
    const int n = int_field(j, "n");
    const int k = int_field(j, "k");
    const int root = int_field(j, "root");
    if (n < 1) throw InvalidArgument("tree needs n >= 1");
    std::vector<PlaneKaryTree::Attachment> attachments(static_cast<std::size_t>(n));
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    for (const auto& node : array_field(j, "nodes")) {
        const int label = int_field(node, "label");
        if (label < 1 || label > n) throw InvalidArgument("node label out of range");
        if (seen[static_cast<std::size_t>(label - 1)]) throw InvalidArgument("duplicate node label");
        seen[static_cast<std::size_t>(label - 1)] = true;
        attachments[static_cast<std::size_t>(label - 1)] = {int_field(node, "parent"), int_field(node, "slot")};
    }
    for (int label = 1; label <= n; ++label)
        if (!seen[static_cast<std::size_t>(label - 1)] && label != root)
            throw InvalidArgument("node " + std::to_string(label) + " is missing");
    return PlaneKaryTree(n, k, root, std::move(attachments));
}

Json to_json(const ColoredPlacement& g)
{
    Json cells = Json::array();
    for (const auto& c : g.g) cells.push_back(Json::array({c.column, c.color}));
    return Json{{"n", g.n}, {"k", g.k}, {"g", cells}};
}

ColoredPlacement colored_placement_from_json(const Json& j)
{
    ColoredPlacement g{int_field(j, "n"), int_field(j, "k"), {}};
    for (const auto& c : array_field(j, "g")) {
        if (!c.is_array() || c.size() != 2) throw InvalidArgument("each entry of \"g\" must be [column, colour]");
        g.g.push_back({as_int(c[0]), as_int(c[1])});
    }
    g.validate();
    return g;
}

Json to_json(const FlatPlacement& f) { return Json{{"n", f.n}, {"k", f.k}, {"f", f.f}}; }

FlatPlacement flat_placement_from_json(const Json& j)
{
    FlatPlacement f{int_field(j, "n"), int_field(j, "k"), {}};
    for (const auto& v : array_field(j, "f")) f.f.push_back(as_int(v));
    f.validate();
    return f;
}

Json to_json(const SimpleGraph& g)
{
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) edges.push_back(Json::array({u, v}));
    return Json{{"vertices", g.vertex_count()}, {"edges", edges}};
}

SimpleGraph graph_from_json(const Json& j)
{
    std::vector<std::pair<int, int>> edges;
    for (const auto& e : array_field(j, "edges")) {
        if (!e.is_array() || e.size() != 2) throw InvalidArgument("each edge must be [i, j]");
        edges.emplace_back(as_int(e[0]), as_int(e[1]));
    }
    return SimpleGraph(int_field(j, "vertices"), edges);
}

Json to_json(const MultivariatePolynomial& p)
{
    const auto k = static_cast<std::ptrdiff_t>(p.k());
    Json terms = Json::array();
    for (const auto& [exponents, c] : p.terms()) {
        terms.push_back(Json{{"u", std::vector<int>(exponents.begin(), exponents.begin() + k)},
                             {"v", std::vector<int>(exponents.begin() + k, exponents.end())},
                             {"coefficient", to_json(c)}});
    }
    return Json{{"k", p.k()}, {"terms", terms}};
}

Json to_json(const VerificationReport& report)
{
    Json j{{"identity", report.identity},
           {"order", report.order},
           {"status", report.passed ? "pass" : "fail"},
           {"first_mismatch", nullptr}};
    if (report.first_mismatch) j["first_mismatch"] = *report.first_mismatch;
    return j;
}

Json parse(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

}  // namespace rooks::io
