#include "example_tree.hpp"
#include "oracles.hpp"

#include "rooks/bijection.hpp"

#include <doctest.h>

#include <functional>

using namespace rooks;

namespace {

void for_each_flat(int n, int k, const std::function<void(const FlatPlacement&)>& visit)
{
    FlatPlacement f{n, k, std::vector<int>(static_cast<std::size_t>(n - 1), 0)};
    std::vector<bool> used(static_cast<std::size_t>(k * n) + 1, false);
    std::function<void(int)> go = [&](int i) {
        if (i == n - 1) {
            visit(f);
            return;
        }
        for (int v = 1; v <= k * n; ++v) {
            if (used[static_cast<std::size_t>(v)]) continue;
            used[static_cast<std::size_t>(v)] = true;
            f.f[static_cast<std::size_t>(i)] = v;
            go(i + 1);
            used[static_cast<std::size_t>(v)] = false;
        }
    };
    go(0);
}

Rational eval(const MultivariatePolynomial& p, std::vector<Rational> values) { return p.evaluate(values); }

}  // namespace

TEST_CASE("phi and its inverse")
{
    const FlatPlacement f{6, 2, {1, 8, 6, 12, 7}};
    const ColoredPlacement g = phi(f);
    CHECK(g.g == std::vector<ColoredCell>{{1, 1}, {2, 2}, {6, 1}, {6, 2}, {1, 2}});
    CHECK(phi_inverse(g) == f);
    CHECK_THROWS_AS(phi(FlatPlacement{3, 2, {1, 1}}), InvalidArgument);
    CHECK_THROWS_AS(phi(FlatPlacement{3, 2, {1, 7}}), InvalidArgument);
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 4; ++n) {
            std::size_t count = 0;
            for_each_flat(n, k, [&](const FlatPlacement& x) {
                ++count;
                const ColoredPlacement y = phi(x);
                CHECK_NOTHROW(y.validate());
                CHECK(phi_inverse(y) == x);
            });
            CHECK(BigInt(count) == colored_placement_count(n, k));
        }
}

TEST_CASE("excedances and subcedances")
{
    const ColoredPlacement g{6, 2, {{5, 1}, {3, 2}, {1, 2}, {2, 2}, {4, 1}}};
    const ExcSub es = exc_sub(g);
    CHECK(es.exc == WeakComposition{1, 1});
    CHECK(es.sub == WeakComposition{1, 2});

    const ColoredPlacement diagonal{4, 2, {{1, 2}, {2, 1}, {3, 2}}};
    CHECK(exc_sub(diagonal).exc == WeakComposition{0, 0});
    CHECK(exc_sub(ColoredPlacement{2, 3, {{2, 1}}}).exc == WeakComposition{1, 0, 0});
    CHECK(exc_sub(ColoredPlacement{2, 3, {{2, 1}}}).sub == WeakComposition{0, 0, 0});
    CHECK_THROWS_AS(exc_sub(ColoredPlacement{3, 2, {{1, 1}, {1, 1}}}), InvalidArgument);
}

TEST_CASE("decorated digraph")
{
    const DecoratedDigraph d(example_placement());
    CHECK(d.component_count() == 4);
    const auto cycles = d.cycles();
    REQUIRE(cycles.size() == 3);
    CHECK(cycles[0] == std::vector<int>{5, 3, 4});
    CHECK(cycles[1] == std::vector<int>{7});
    CHECK(cycles[2] == std::vector<int>{20, 12});
    CHECK(d.target(21) == 0);
}

TEST_CASE("psi on the worked example")
{
    const PlaneKaryTree t = psi(example_placement());
    CHECK(t == example_tree());
    CHECK(psi_inverse(example_tree()) == example_placement());
}

TEST_CASE("psi on two nodes")
{
    const PlaneKaryTree a = psi(ColoredPlacement{2, 2, {{2, 1}}});
    CHECK(a.root() == 2);
    CHECK(a.child(2, 1) == 1);
    const PlaneKaryTree b = psi(ColoredPlacement{2, 2, {{1, 1}}});
    CHECK(b.root() == 1);
    CHECK(b.child(1, 1) == 2);
    CHECK(statistics(b).asc == WeakComposition{1, 0});
    CHECK(psi(ColoredPlacement{1, 2, {}}) == PlaneKaryTree::singleton(2));
}

TEST_CASE("psi is a statistic-preserving bijection")
{
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 5; ++n) {
            std::size_t count = 0;
            for_each_colored_placement(n, k, [&](const ColoredPlacement& g) {
                ++count;
                const PlaneKaryTree t = psi(g);
                const ExcSub es = exc_sub(g);
                const TreeStatistics st = statistics(t);
                CHECK(psi_inverse(t) == g);
                CHECK(es.exc == st.dsc);
                CHECK(es.sub == st.asc);
                CHECK(static_cast<std::size_t>(DecoratedDigraph(g).component_count()) ==
                      left_to_right_maxima(spine(t)).size());
            });
            CHECK(BigInt(count) == colored_placement_count(n, k));
            for (const auto& t : enumerate_plane_trees(n, k)) CHECK(psi(psi_inverse(t)) == t);
        }
}

TEST_CASE("Gessel polynomials")
{
    MultivariatePolynomial g22(2);
    g22.add_term(WeakComposition{1, 0}, WeakComposition{0, 0}, 1);
    g22.add_term(WeakComposition{0, 1}, WeakComposition{0, 0}, 1);
    g22.add_term(WeakComposition{0, 0}, WeakComposition{1, 0}, 1);
    g22.add_term(WeakComposition{0, 0}, WeakComposition{0, 1}, 1);
    CHECK(gessel_polynomial(2, 2) == g22);
    for (int k = 1; k <= 3; ++k) CHECK(gessel_polynomial(1, k).total() == 1);
    CHECK(eval(gessel_polynomial(3, 2), {1, 1, 1, 1}) == 30);
    for (int k = 1; k <= 3; ++k)
        for (int n = 1; n <= 5; ++n) CHECK(gessel_polynomial(n, k) == tree_statistic_polynomial(n, k));
    Limits tight;
    tight.max_enum = 100;
    CHECK_THROWS_AS(gessel_polynomial(5, 2, tight), ResourceLimit);
}

TEST_CASE("Gessel specializations at k = 2")
{
    const std::vector<int> swap_u2_v1{0, 2, 1, 3};
    for (int n = 1; n <= 7; ++n) {
        const MultivariatePolynomial g = gessel_polynomial(n, 2);
        const unsigned un = static_cast<unsigned>(n);
        CHECK(eval(g, {1, 1, 1, 1}) == Rational(factorial(un) * oracle::catalan(n)));
        CHECK(eval(g, {1, 1, 1, 0}) == Rational(pow(BigInt(n + 1), un - 1)));
        CHECK(eval(g, {1, 0, 1, 0}) == Rational(factorial(un)));
        CHECK(g.permute_variables(swap_u2_v1) == g);
    }
}

TEST_CASE("Gessel polynomial without ascents is the Eulerian polynomial")
{
    for (int n = 1; n <= 6; ++n) {
        std::map<std::pair<int, int>, BigInt> from_gessel;
        const MultivariatePolynomial g = gessel_polynomial(n, 2);
        for (const auto& [e, c] : g.terms())
            if (e[2] == 0 && e[3] == 0) from_gessel[{e[0], e[1]}] = c;
        CHECK(from_gessel == oracle::eulerian(n));
    }
}
