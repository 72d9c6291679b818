#include "oracles.hpp"

#include "rooks/board.hpp"
#include "rooks/graph.hpp"

#include <doctest.h>

#include <random>

using namespace rooks;

namespace {

std::vector<std::pair<int, int>> zero_based(const SimpleGraph& g)
{
    std::vector<std::pair<int, int>> out;
    for (const auto& [u, v] : g.edges()) out.emplace_back(u - 1, v - 1);
    return out;
}

SimpleGraph random_graph(std::mt19937& rng, int vertices, double density)
{
    std::bernoulli_distribution coin(density);
    SimpleGraph g(vertices);
    for (int u = 1; u <= vertices; ++u)
        for (int v = u + 1; v <= vertices; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("graph basics")
{
    SimpleGraph g(3, {{1, 2}, {2, 3}});
    CHECK(g.has_edge(2, 1));
    CHECK_FALSE(g.has_edge(1, 3));
    CHECK(g.degree(2) == 2);
    CHECK(g.edge_count() == 2);
    CHECK_THROWS_AS(SimpleGraph(3, {{1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(SimpleGraph(3, {{1, 2}, {2, 1}}), InvalidArgument);
    CHECK_THROWS_AS(SimpleGraph(3, {{1, 4}}), InvalidArgument);
    CHECK_THROWS_AS(SimpleGraph(65), InvalidArgument);
}

TEST_CASE("Linial graphs")
{
    const SimpleGraph g = linial_graph(1, 3);
    CHECK(g.vertex_count() == 5);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {2, 5}, {3, 5}});
    const SimpleGraph h = linial_graph(2, 4);
    CHECK(h.vertex_count() == 9);
    for (int v = 7; v <= 9; ++v) CHECK(h.degree(v) == 4);
    CHECK_THROWS_AS(linial_graph(0, 2), InvalidArgument);
    CHECK_THROWS_AS(linial_graph(1, 1), InvalidArgument);
    // Row i of L_{t,n} (columns shifted down by one) is the neighbourhood of
    // the i-th vertex of the second part.
    for (int n = 2; n <= 6; ++n)
        for (int t = 0; t <= 3; ++t) {
            if (n - 2 + t < 1) continue;
            const SimpleGraph lg = linial_graph(t, n);
            const Board b = linial_board(t, n);
            for (int i = 1; i <= n - 1; ++i) {
                std::vector<int> expected;
                for (int c : b.row_columns(i)) expected.push_back(c - 1);
                std::vector<int> got;
                for (int v = 1; v <= 2 * n - 4 + t; ++v)
                    if (lg.has_edge(2 * n - 4 + t + i, v)) got.push_back(v);
                CHECK(got == expected);
            }
        }
}

TEST_CASE("complements")
{
    const SimpleGraph c = complement(linial_graph(1, 3));
    CHECK(c.edges() == std::vector<std::pair<int, int>>{{1, 2}, {1, 3}, {1, 5}, {2, 3}, {3, 4}, {4, 5}});
    CHECK(complement(c) == linial_graph(1, 3));
    CHECK(complement(complete_graph(4)).edge_count() == 0);
}

TEST_CASE("chromatic polynomials")
{
    CHECK(chromatic_polynomial(complement(linial_graph(1, 3))) ==
          IntegerPolynomial{0, 1} * IntegerPolynomial{-1, 1} * IntegerPolynomial{-2, 1} * IntegerPolynomial{3, -3, 1});
    CHECK(chromatic_polynomial(complete_graph(3)) == IntegerPolynomial{0, 2, -3, 1});
    CHECK(chromatic_polynomial(SimpleGraph(2)) == IntegerPolynomial{0, 0, 1});
    CHECK(chromatic_polynomial(SimpleGraph(0)) == IntegerPolynomial{1});
    // A 4-cycle: (x-1)^4 + (x-1).
    CHECK(chromatic_polynomial(SimpleGraph(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}})) == IntegerPolynomial{0, -3, 6, -4, 1});
    CHECK_THROWS_AS(chromatic_polynomial(SimpleGraph(15)), ResourceLimit);
}

TEST_CASE("chromatic polynomials match colouring counts")
{
    std::mt19937 rng(5);
    for (int trial = 0; trial < 40; ++trial) {
        const int vertices = std::uniform_int_distribution<int>(1, 7)(rng);
        const SimpleGraph g = random_graph(rng, vertices, trial % 2 ? 0.3 : 0.7);
        const IntegerPolynomial p = chromatic_polynomial(g);
        CHECK(p.degree() == vertices);
        CHECK(p.leading() == 1);
        CHECK(p.coefficient(0) == 0);
        for (int i = 1; i <= vertices; ++i) {
            const BigInt c = p.coefficient(static_cast<std::size_t>(i));
            const bool sign_ok = c == 0 || (c > 0) == ((vertices - i) % 2 == 0);
            CHECK(sign_ok);
        }
        for (int q = 0; q <= 4; ++q) CHECK(p(BigInt(q)) == oracle::colourings(vertices, zero_based(g), q));
    }
}

TEST_CASE("chromatic polynomial of complemented Linial graphs")
{
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t <= 3; ++t) {
            if (n - 2 + t < 1) continue;
            const int shift = 2 * n - 4 + t;
            const IntegerPolynomial r = factorial_polynomial(linial_board(t, n));
            CHECK(chromatic_polynomial(complement(linial_graph(t, n))) ==
                  falling_factorial(static_cast<unsigned>(shift)) * compose_linear(r, BigInt(1), BigInt(-shift)));
        }
}

TEST_CASE("maximum matchings")
{
    CHECK(count_maximum_matchings(linial_graph(2, 4)) == MatchingCount{3, 36});
    CHECK(count_maximum_matchings(linial_graph(0, 4)) == MatchingCount{3, 4});
    CHECK(count_maximum_matchings(SimpleGraph(4)) == MatchingCount{0, 1});
    CHECK(count_maximum_matchings(complete_graph(4)) == MatchingCount{2, 3});
    CHECK_FALSE(bipartite_small_side(complete_graph(3)).has_value());
    CHECK(bipartite_small_side(linial_graph(1, 3)) == std::vector<int>{4, 5});
    CHECK_THROWS_AS(matching_profile_bipartite(linial_graph(1, 3), {1, 2}), InvalidArgument);
    CHECK_THROWS_AS(count_maximum_matchings(complete_graph(13)), ResourceLimit);
}

TEST_CASE("matching profiles equal rook numbers")
{
    for (int n = 2; n <= 5; ++n)
        for (int t = 0; t <= 3; ++t) {
            if (n - 2 + t < 1) continue;
            const SimpleGraph g = linial_graph(t, n);
            const RookVector r = rook_numbers(linial_board(t, n));
            const auto side = bipartite_small_side(g);
            REQUIRE(side.has_value());
            auto profile = matching_profile_bipartite(g, *side);
            auto rooks = r.counts;
            while (rooks.size() > 1 && rooks.back() == 0) rooks.pop_back();
            CHECK(profile == rooks);
            if (g.vertex_count() <= kGenericMatchingMaxVertices) CHECK(matching_profile_generic(g) == profile);
        }
}

TEST_CASE("matchings agree with edge-subset enumeration")
{
    std::mt19937 rng(9);
    for (int trial = 0; trial < 40; ++trial) {
        const int vertices = std::uniform_int_distribution<int>(1, 7)(rng);
        const SimpleGraph g = random_graph(rng, vertices, 0.4);
        const auto [size, count] = oracle::maximum_matchings(vertices, zero_based(g));
        CHECK(count_maximum_matchings(g) == MatchingCount{size, count});
    }
}
