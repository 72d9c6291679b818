#include "oracles.hpp"

#include "rooks/series.hpp"
#include "rooks/tree.hpp"

#include <doctest.h>

#include <random>

using namespace rooks;

namespace {

using S = TruncatedPowerSeries;

S poly(int order, std::vector<Rational> c) { return S(order, std::move(c)); }

S geometric_ratio(int order, int sign)
{
    // x / (1 - sign x)
    S s(order);
    for (int i = 1; i <= order; ++i) s.set(i, i % 2 == 0 && sign < 0 ? Rational(-1) : Rational(1));
    return s;
}

}  // namespace

TEST_CASE("series arithmetic")
{
    CHECK(poly(5, {1, 1}) * poly(5, {1, -1}) == poly(5, {1, 0, -1}));
    CHECK(exp(log(poly(8, {1, 1}))) == poly(8, {1, 1}));
    CHECK(compose(geometric_ratio(8, 1), geometric_ratio(8, -1)) == S::variable(8));
    CHECK(reciprocal(poly(4, {1, -1})) == poly(4, {1, 1, 1, 1, 1}));
    CHECK(pow(poly(3, {1, 1}), 3) == poly(3, {1, 3, 3, 1}));
    CHECK(pow(poly(3, {1, 1}), -1) == poly(3, {1, -1, 1, -1}));
    CHECK((poly(3, {1, 2}) + poly(2, {0, 1})).order() == 2);
    CHECK_THROWS_AS(exp(poly(3, {1, 1})), InvalidArgument);
    CHECK_THROWS_AS(log(poly(3, {2, 1})), InvalidArgument);
    CHECK_THROWS_AS(compose(poly(3, {1, 1}), poly(3, {1, 1})), InvalidArgument);
    CHECK_THROWS_AS(reciprocal(poly(3, {0, 1})), InvalidArgument);
    CHECK(S::from_egf(3, {0, 1, 2, 6}) == poly(3, {0, 1, 1, 1}));
    CHECK(poly(3, {0, 1, Rational(1, 2)}).egf_coefficient(2) == 1);
    CHECK(poly(2, {1, -1, Rational(1, 2)}).to_string() == "1 - x + 1/2x^2 + O(x^3)");
}

TEST_CASE("compositional inverses")
{
    CHECK(compositional_inverse(geometric_ratio(8, 1)) == geometric_ratio(8, -1));
    const S log1p = log(poly(8, {1, 1}));
    CHECK(compositional_inverse(log1p) == exp(S::variable(8)) - S::constant(8, 1));
    CHECK_THROWS_AS(compositional_inverse(poly(4, {0, 0, 1})), InvalidArgument);
    CHECK_THROWS_AS(compositional_inverse(poly(4, {1, 1})), InvalidArgument);

    std::mt19937 rng(13);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 7);
    const Rational slopes[] = {1, -1, Rational(1, 2), Rational(-1, 2)};
    for (int trial = 0; trial < 50; ++trial) {
        S f(10);
        f.set(1, slopes[trial % 4]);
        for (int i = 2; i <= 10; ++i) f.set(i, Rational(num(rng), den(rng)));
        const S g = compositional_inverse(f);
        CHECK(compose(f, g) == S::variable(10));
        CHECK(compose(g, f) == S::variable(10));
    }
}

TEST_CASE("exp and log are inverse")
{
    std::mt19937 rng(17);
    std::uniform_int_distribution<int> num(-9, 9), den(1, 5);
    for (int trial = 0; trial < 30; ++trial) {
        S g = S::constant(10, 1);
        for (int i = 1; i <= 10; ++i) g.set(i, Rational(num(rng), den(rng)));
        CHECK(exp(log(g)) == g);
    }
}

TEST_CASE("local search tree series")
{
    const S p = ltree_egf(2, 8);
    const std::vector<int> expected{1, 2, 7, 36, 246};
    for (int n = 1; n <= 5; ++n) CHECK(p.egf_coefficient(n) == expected[static_cast<std::size_t>(n - 1)]);
    for (int k = 2; k <= 4; ++k) {
        const S s = ltree_egf(k, 8);
        for (int n = 1; n <= 8; ++n) {
            CHECK(s[n] > 0);
            CHECK(s.egf_coefficient(n) == Rational(ltree_count_formula(n, k)));
        }
    }
    // k = 3: 2^-n sum_j C(n,j) (1+n+j)^(n-1), written out independently.
    const S s3 = ltree_egf(3, 6);
    for (int n = 1; n <= 6; ++n) {
        BigInt sum = 0;
        for (int j = 0; j <= n; ++j) sum += binomial(static_cast<unsigned>(n), static_cast<unsigned>(j)) * pow(BigInt(1 + n + j), static_cast<unsigned>(n - 1));
        CHECK(s3.egf_coefficient(n) == Rational(sum, pow(BigInt(2), static_cast<unsigned>(n))));
    }
}

TEST_CASE("identity reports")
{
    CHECK(verify_ltree_egf(2, 8).passed);
    CHECK(verify_ltree_egf(3, 6).passed);
    CHECK(verify_ltree_egf(2, 1).passed);
    CHECK(verify_ltree_egf(2, 0).passed);
    CHECK_THROWS_AS(verify_ltree_egf(1, 4), InvalidArgument);
    CHECK_THROWS_AS(verify_ltree_egf(2, 13), InvalidArgument);
    CHECK(verify_f_equation(2, 8).passed);
    CHECK(verify_f_equation(3, 6).passed);
    CHECK(verify_f_equation(2, 0).passed);

    CHECK(verify_drake_inverse(2, {1, 0}, {0, 1}, 6).passed);
    CHECK(verify_drake_inverse(2, {Rational(1, 2), Rational(1, 3)}, {2, 3}, 5).passed);
    CHECK(verify_drake_inverse(2, {Rational(1, 2), Rational(1, 3)}, {2, 3}, 1).passed);
    CHECK(verify_drake_inverse(3, {Rational(1, 2), Rational(1, 3), 2}, {2, 3, Rational(1, 5)}, 4).passed);
    CHECK_THROWS_WITH_AS(drake_generator(2, {1, 0}, {1, 0}, 4), doctest::Contains("Z(v1,u1,v2,u2)"), InvalidArgument);
    CHECK_THROWS_AS(drake_generator(2, {1}, {1, 0}, 4), InvalidArgument);

    CHECK(verify_gessel_k2_equation(1, 1, 1, 1, 6).passed);
    CHECK(verify_gessel_k2_equation(1, 0, 1, 0, 6).passed);
    CHECK(verify_gessel_k2_equation(2, 2, 2, 2, 5).passed);
    CHECK(gessel_egf(2, {1, 0}, {1, 0}, 6) == geometric_ratio(6, 1));
    CHECK_THROWS_AS(verify_gessel_k2_equation(1, 1, 1, 1, 9), InvalidArgument);
}

TEST_CASE("a wrong generator is reported with the first differing power")
{
    // Perturb the Gessel series for k = 2 and check the report pinpoints x^3.
    const std::vector<Rational> u{Rational(1, 2), Rational(1, 3)}, v{2, 3};
    S b = gessel_egf(2, u, v, 5);
    b.set(3, b[3] + 1);
    const S lhs = compose(drake_generator(2, u, v, 5), b);
    CHECK(first_difference(lhs, S::variable(5)) == 3);
}
