#include "example_tree.hpp"

#include "rooks/cli.hpp"
#include "rooks/json_io.hpp"

#include <doctest.h>

#include <sstream>

using namespace rooks;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args, const std::string& input = "")
{
    std::istringstream in(input);
    std::ostringstream out, err;
    const int code = cli::run(args, in, out, err);
    return {code, out.str(), err.str()};
}

io::Json run_json(std::vector<std::string> args, const std::string& input = "")
{
    const Outcome o = run(std::move(args), input);
    REQUIRE_MESSAGE(o.code == 0, o.err);
    return io::parse(o.out);
}

}  // namespace

TEST_CASE("json round trips")
{
    const IntegerPolynomial p{3, 0, -7, 1};
    CHECK(io::polynomial_from_json(io::to_json(p)) == p);
    CHECK(io::bigint_from_json(io::to_json(pow(BigInt(10), 40))) == pow(BigInt(10), 40));
    CHECK(io::bigint_from_json(io::Json(-12)) == -12);
    CHECK_THROWS_AS(io::bigint_from_json(io::Json("12x")), InvalidArgument);

    const Board board(std::vector<Board::Row>{{{2, 3}, {5, 5}}, {}, {{1, 4}}});
    CHECK(io::board_from_json(io::to_json(board)) == board);
    CHECK(io::to_json(board)["rows"][1] == io::Json{{"from", 1}, {"to", 0}});

    const PlaneKaryTree tree = example_tree();
    const io::Json tj = io::to_json(tree);
    CHECK(tj["nodes"].size() == static_cast<std::size_t>(tree.n() - 1));
    CHECK(io::tree_from_json(tj) == tree);

    const ColoredPlacement g = example_placement();
    CHECK(io::colored_placement_from_json(io::to_json(g)) == g);
    const FlatPlacement f = phi_inverse(g);
    CHECK(io::flat_placement_from_json(io::to_json(f)) == f);

    const SimpleGraph graph = linial_graph(1, 3);
    CHECK(io::graph_from_json(io::to_json(graph)) == graph);
    CHECK(io::to_json(graph).dump() == R"({"vertices":5,"edges":[[1,4],[2,4],[2,5],[3,5]]})");

    CHECK_THROWS_AS(io::parse("{bad"), InvalidArgument);
    CHECK_THROWS_AS(io::graph_from_json(io::parse(R"({"vertices":2,"edges":[[1,1]]})")), InvalidArgument);
    CHECK_THROWS_AS(io::colored_placement_from_json(io::parse(R"({"n":3,"k":1,"g":[[1,1],[1,1]]})")),
                    InvalidArgument);
}

TEST_CASE("cli: boards")
{
    CHECK(run_json({"boards", "rook-vector", "--family", "linial", "--n", "4", "--t", "2"})["r"] ==
          io::Json{"1", "12", "40", "36"});
    CHECK(run_json({"boards", "rook-vector", "--lambda", "3,2,1"})["r"] == io::Json{"1", "6", "7", "1"});
    const Outcome csv = run({"--format", "csv", "boards", "rook-vector", "--family", "linial", "--n", "4", "--t", "2"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "k,r_k\n0,1\n1,12\n2,40\n3,36\n");
    const Outcome latex = run({"--format", "latex", "boards", "rook-vector", "--family", "catalan", "--n", "3", "--t", "1"});
    CHECK(latex.code == 0);
    CHECK(latex.out.find("\\begin{tabular}") == 0);

    const auto gjw = run_json({"boards", "gjw-poly", "--lambda", "4,3,3", "--mu", "1"});
    const auto fac = run_json({"boards", "factorial-poly", "--lambda", "4,3,3", "--mu", "1"});
    CHECK(gjw == fac);

    const Board b = linial_board(1, 3);
    CHECK(run_json({"boards", "rook-vector", "--board", "-"}, io::to_json(b).dump())["r"] ==
          io::Json{"1", "4", "3"});

    CHECK(run({"boards", "rook-vector"}).code == cli::exit_invalid_input);
    CHECK(run({"boards", "rook-vector", "--family", "linial", "--n", "4", "--t", "2", "--lambda", "2"}).code ==
          cli::exit_invalid_input);
    CHECK(run({"boards", "rook-vector", "--family", "bogus", "--n", "4", "--t", "2"}).code == cli::exit_invalid_input);
    CHECK(run({"--max-states", "10", "boards", "rook-vector", "--family", "shi", "--n", "9", "--t", "1"}).code ==
          cli::exit_resource_limit);
    CHECK(run({"nonsense"}).code == cli::exit_invalid_input);
}

TEST_CASE("cli: trees, bijection and gessel")
{
    CHECK(run_json({"trees", "count", "--class", "ltree-b", "--n", "6", "--k", "2"})["count"] == "212");
    CHECK(run_json({"trees", "count", "--class", "increasing", "--n", "4", "--k", "3"})["count"] == "105");
    CHECK(run({"trees", "count", "--class", "oak", "--n", "3", "--k", "2"}).code == cli::exit_invalid_input);
    CHECK(run({"--max-enum", "100", "trees", "count", "--class", "right-increasing", "--n", "6", "--k", "2"}).code ==
          cli::exit_resource_limit);

    const std::string placement = io::to_json(example_placement()).dump();
    const io::Json tree = run_json({"bijection", "forward", "--input", "-"}, placement);
    CHECK(io::tree_from_json(tree) == example_tree());
    const io::Json back = run_json({"bijection", "inverse", "--input", "-"}, tree.dump());
    CHECK(io::colored_placement_from_json(back) == example_placement());
    CHECK(run({"bijection", "forward", "--input", "-"}, "{bad").code == cli::exit_invalid_input);
    CHECK(run({"bijection", "forward", "--input", "/nonexistent/file.json"}).code == cli::exit_invalid_input);

    CHECK(run_json({"gessel", "--n", "6", "--k", "2", "--eval", "u1=1,u2=1,v1=1,v2=0"})["value"] == "16807");
    CHECK(run({"gessel", "--n", "6", "--k", "2", "--eval", "1,1,1,0"}).code == cli::exit_invalid_input);
    CHECK(run_json({"gessel", "--n", "2", "--k", "1"})["terms"].size() == 2);
}

TEST_CASE("cli: arrangements and graphs")
{
    const io::Json regions = run_json({"arrangements", "regions", "--n", "4", "--a", "1"});
    CHECK(regions["regions"] == "36");
    CHECK(regions["bounded"] == "4");
    const io::Json chi = run_json({"arrangements", "charpoly", "--n", "3", "--a", "1", "--b", "1"});
    CHECK(chi["chi"]["coefficients"] == io::Json{"2", "-3", "1"});
    CHECK(run_json({"arrangements", "charpoly", "--n", "3", "--a", "1", "--b", "1", "--method", "finite-field"}) == chi);
    CHECK(run_json({"arrangements", "bounded-seq", "--n", "8", "--a", "1"})["bounded"] ==
          io::Json{"0", "0", "1", "4", "26", "212", "2108", "24720"});
    CHECK(run({"arrangements", "bounded-seq", "--n", "13", "--a", "1"}).code == cli::exit_resource_limit);
    CHECK(run({"arrangements", "charpoly", "--n", "0", "--a", "1"}).code == cli::exit_invalid_input);

    const io::Json matchings = run_json({"graphs", "matchings", "--n", "4", "--t", "2"});
    CHECK(matchings["size"] == 3);
    CHECK(matchings["count"] == "36");
    CHECK(run_json({"graphs", "chromatic", "--n", "3", "--t", "1", "--complement"})["chromatic"]["coefficients"] ==
          io::Json{"0", "6", "-15", "14", "-6", "1"});
    const std::string big = io::to_json(complete_graph(15)).dump();
    CHECK(run({"graphs", "chromatic", "--graph", "-"}, big).code == cli::exit_resource_limit);
}

TEST_CASE("cli: series and verify")
{
    const io::Json report = run_json({"series", "verify", "--identity", "ltree-egf", "--k", "2", "--order", "5"});
    CHECK(report["status"] == "pass");
    CHECK(report["first_mismatch"].is_null());
    CHECK(run({"series", "verify", "--identity", "ltree-egf", "--k", "2", "--order", "40"}).code ==
          cli::exit_invalid_input);
    CHECK(run({"series", "verify", "--identity", "bogus", "--k", "2", "--order", "4"}).code == cli::exit_invalid_input);

    const io::Json all = run_json({"verify", "all", "--max-n", "3"});
    CHECK(all["status"] == "pass");
    CHECK(run({"verify", "all", "--max-n", "9"}).code == cli::exit_invalid_input);

    const Outcome timed = run({"--timing", "trees", "count", "--class", "ltree", "--n", "3", "--k", "2"});
    CHECK(timed.code == 0);
    CHECK_FALSE(timed.err.empty());
    CHECK(timed.out.find("time") == std::string::npos);
}
