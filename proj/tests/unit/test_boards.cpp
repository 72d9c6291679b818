#include "oracles.hpp"

#include "rooks/board.hpp"
#include "rooks/set_partition.hpp"

#include <doctest.h>

#include <random>

using namespace rooks;

namespace {

std::vector<BigInt> brute_rooks(const Board& b) { return oracle::rook_numbers(b.cells(), b.row_count()); }

/// Board from parts, last part is the bottom row.
Board ferrers(std::vector<int> lambda, std::vector<int> mu = {}) { return skew_ferrers(lambda, mu); }

}  // namespace

TEST_CASE("skew Ferrers orientation")
{
    const Board b = ferrers({6, 5, 4}, {3, 2, 1});
    REQUIRE(b.row_count() == 3);
    CHECK(b.row(1) == Board::Row{{2, 4}});
    CHECK(b.row(2) == Board::Row{{3, 5}});
    CHECK(b.row(3) == Board::Row{{4, 6}});
    CHECK(b == linial_board(1, 4));
    CHECK(ferrers({1}).cells() == std::vector<std::pair<int, int>>{{1, 1}});
    CHECK(ferrers({2, 2}).cell_count() == 4);
    CHECK_THROWS_AS(ferrers({2, 1}, {3}), InvalidArgument);
    CHECK_THROWS_AS(ferrers({1, 2}), InvalidArgument);
}

TEST_CASE("board families")
{
    CHECK(linial_board(2, 3) == Board(std::vector<ColumnInterval>{{2, 4}, {3, 5}}));
    CHECK(shi_board(2, 3) == Board(std::vector<ColumnInterval>{{1, 4}, {1, 5}}));
    CHECK(catalan_board(2, 3) == Board(std::vector<ColumnInterval>{{1, 3}, {1, 3}}));
    // Linial board with t = (a-1)n + 2: row i spans i+1 .. an+i.
    for (int a = 1; a <= 3; ++a)
        for (int n = 2; n <= 5; ++n) {
            const Board b = linial_board((a - 1) * n + 2, n);
            for (int i = 1; i < n; ++i) CHECK(b.row(i) == Board::Row{{i + 1, a * n + i}});
        }
    CHECK(linial_board(0, 2).row(1).empty());
    CHECK_THROWS_AS(linial_board(0, 1), InvalidArgument);
    CHECK_THROWS_AS(shi_board(-1, 3), InvalidArgument);
}

TEST_CASE("general boards normalize their rows")
{
    const Board b(std::vector<Board::Row>{{{4, 5}, {1, 2}, {3, 3}}, {}});
    CHECK(b.row(1) == Board::Row{{1, 5}});
    CHECK(b.row(2).empty());
    CHECK(b.is_interval_board());
    const std::vector<std::pair<int, int>> cells{{1, 1}, {1, 3}, {3, 2}};
    const Board c = Board::from_cells(cells);
    CHECK(c.row_count() == 3);
    CHECK_FALSE(c.is_interval_board());
    CHECK(c.contains(1, 3));
    CHECK_FALSE(c.contains(1, 2));
    CHECK(c.cells() == cells);
    CHECK_THROWS_AS(Board(std::vector<ColumnInterval>{{0, 2}}), InvalidArgument);
}

TEST_CASE("rook numbers")
{
    CHECK(rook_numbers(linial_board(1, 4)).counts == std::vector<BigInt>{1, 9, 22, 14});
    CHECK(rook_numbers(Board()).counts == std::vector<BigInt>{1});
    CHECK(rook_numbers(ferrers({2, 2})).counts == std::vector<BigInt>{1, 4, 2});
    CHECK(rook_numbers(linial_board(0, 2)).counts == std::vector<BigInt>{1, 0});
}

TEST_CASE("rook numbers agree with subset enumeration")
{
    std::mt19937 rng(11);
    std::bernoulli_distribution coin(0.45);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<std::pair<int, int>> cells;
        for (int r = 1; r <= 4; ++r)
            for (int c = 1; c <= 4; ++c)
                if (coin(rng) && cells.size() < 12) cells.emplace_back(r, c);
        const Board b = Board::from_cells(cells, 4);
        CHECK(rook_numbers(b).counts == brute_rooks(b));
    }
    for (int n = 2; n <= 4; ++n)
        for (int t = 0; t <= 2; ++t) {
            CHECK(rook_numbers(linial_board(t, n)).counts == brute_rooks(linial_board(t, n)));
            CHECK(rook_numbers(catalan_board(t, n)).counts == brute_rooks(catalan_board(t, n)));
        }
}

TEST_CASE("rook numbers on wide boards use big integers")
{
    // r_m of an m x c rectangle is c!/(c-m)!.
    const Board b(std::vector<ColumnInterval>(16, ColumnInterval{1, 40}));
    BigInt expected = 1;
    for (int i = 0; i < 16; ++i) expected *= 40 - i;
    CHECK(rook_numbers(b)[16] == expected);
    Limits tight;
    tight.max_states = 1000;
    CHECK_THROWS_AS(rook_numbers(b, tight), ResourceLimit);
}

TEST_CASE("factorial polynomials")
{
    const Board b = linial_board(1, 4);
    CHECK(factorial_polynomial(b) == IntegerPolynomial{14, 15, 6, 1});
    CHECK(factorial_polynomial(b)(BigInt(1)) == 36);
    CHECK(factorial_polynomial(b)(BigInt(-1)) == 4);
    CHECK(factorial_polynomial(Board(), 0) == IntegerPolynomial{1});
    CHECK(factorial_polynomial(catalan_board(0, 4)) == IntegerPolynomial{0, 2, 3, 1});
    CHECK_THROWS_AS(factorial_polynomial(b, 2), InvalidArgument);
    // Extra empty rows: R_m = sum r_k (x)_{m-k}.
    const RookVector r = rook_numbers(b);
    IntegerPolynomial expected;
    for (int k = 0; k <= 3; ++k) expected += r[static_cast<std::size_t>(k)] * falling_factorial(static_cast<unsigned>(5 - k));
    CHECK(factorial_polynomial(b, 5) == expected);
}

TEST_CASE("v statistic")
{
    const Board b = linial_board(1, 4);
    CHECK(v_stat(b, std::vector<int>{1}) == 3);
    CHECK(v_stat(b, std::vector<int>{1, 2}) == 2);
    CHECK(v_stat(linial_board(0, 5), std::vector<int>{1, 4}) == 0);
    CHECK_THROWS_AS(v_stat(b, std::vector<int>{}), InvalidArgument);
    CHECK_THROWS_AS(v_stat(b, std::vector<int>{4}), InvalidArgument);
    for (int n = 2; n <= 8; ++n) {
        const Board l = linial_board(0, n);
        for (int mask = 1; mask < (1 << (n - 1)); ++mask) {
            std::vector<int> rows;
            for (int i = 0; i < n - 1; ++i)
                if (mask >> i & 1) rows.push_back(i + 1);
            CHECK(v_stat(l, rows) == std::max(0, n - 2 - (rows.back() - rows.front())));
        }
    }
}

TEST_CASE("partition-lattice form of the factorial polynomial")
{
    CHECK(gjw_factorial_polynomial(linial_board(1, 4)) == IntegerPolynomial{14, 15, 6, 1});
    CHECK(gjw_factorial_polynomial(ferrers({1})) == IntegerPolynomial{1, 1});
    CHECK(gjw_factorial_polynomial(catalan_board(0, 4)) == IntegerPolynomial{0, 2, 3, 1});
    CHECK_THROWS_AS(gjw_factorial_polynomial(Board(std::vector<ColumnInterval>(10, ColumnInterval{1, 3}))),
                    ResourceLimit);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = std::uniform_int_distribution<int>(1, 6)(rng);
        std::vector<int> lambda(static_cast<std::size_t>(rows)), mu(static_cast<std::size_t>(rows));
        int cap = 9;
        for (auto& p : lambda) cap = p = std::uniform_int_distribution<int>(0, cap)(rng);
        cap = 9;
        for (std::size_t i = 0; i < mu.size(); ++i) cap = mu[i] = std::uniform_int_distribution<int>(0, std::min(cap, lambda[i]))(rng);
        const Board b = skew_ferrers(lambda, mu);
        CHECK(factorial_polynomial(b) == gjw_factorial_polynomial(b));
    }
}

TEST_CASE("shift law for Linial boards")
{
    for (int n = 2; n <= 7; ++n) {
        const IntegerPolynomial base = factorial_polynomial(linial_board(0, n));
        for (int t = 0; t <= 6; ++t)
            CHECK(factorial_polynomial(linial_board(t, n)) == compose_linear(base, BigInt(1), BigInt(t)));
    }
}

TEST_CASE("closed form for the Linial factorial polynomial")
{
    CHECK(linial_factorial_closed_form(4, Rational(2)) == 36);
    CHECK(linial_factorial_closed_form(4, Rational(0)) == 4);
    CHECK(linial_factorial_closed_form(3, Rational(2)) == 7);
    CHECK(rook_numbers(linial_board(2, 3))[2] == 7);
    for (int n = 2; n <= 8; ++n) {
        const IntegerPolynomial p = factorial_polynomial(linial_board(0, n));
        CHECK(linial_factorial_closed_form(n) == p);
        for (int t = 0; t <= 3 * n; ++t) CHECK(linial_factorial_closed_form(n, Rational(t)) == Rational(p(BigInt(t))));
    }
}

TEST_CASE("Catalan and Shi board evaluations")
{
    for (int n = 2; n <= 7; ++n)
        for (int t = 0; t <= 5; ++t) {
            BigInt catalan_expected = 1;
            for (int j = 1; j <= n - 1; ++j) catalan_expected *= t + n - 1 - j;
            CHECK(rook_numbers(catalan_board(t, n))[static_cast<std::size_t>(n - 1)] == catalan_expected);
            CHECK(rook_numbers(shi_board(t, n))[static_cast<std::size_t>(n - 1)] ==
                  pow(BigInt(t + n - 1), static_cast<unsigned>(n - 1)));
        }
}

TEST_CASE("maximal placements")
{
    CHECK(enumerate_max_placements(linial_board(2, 4)).size() == 36);
    CHECK(enumerate_max_placements(ferrers({1})) == std::vector<Placement>{{1}});
    CHECK(enumerate_max_placements(linial_board(0, 2)).empty());
    for (const auto& p : enumerate_max_placements(linial_board(1, 4))) {
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(linial_board(1, 4).contains(static_cast<int>(i) + 1, p[i]));
            for (std::size_t j = 0; j < i; ++j) CHECK(p[i] != p[j]);
        }
    }
    Limits tight;
    tight.max_enum = 10;
    CHECK_THROWS_AS(enumerate_max_placements(linial_board(2, 4), tight), ResourceLimit);
}
