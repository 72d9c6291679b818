#include "rooks/verify.hpp"

#include "rooks/arrangement.hpp"
#include "rooks/bijection.hpp"
#include "rooks/board.hpp"
#include "rooks/graph.hpp"
#include "rooks/series.hpp"
#include "rooks/set_partition.hpp"
#include "rooks/tree.hpp"

#include <algorithm>
#include <functional>

namespace rooks {
namespace {

class Checker {
public:
    explicit Checker(std::string name) { result_.name = std::move(name); }

    /// Runs one check; a false result or a library error is recorded under label.
    void check(const std::string& label, const std::function<bool()>& body)
    {
        ++result_.checks;
        try {
            if (!body()) result_.failures.push_back(label);
        } catch (const Error& e) {
            result_.failures.push_back(label + ": " + e.what());
        }
    }

    SuiteResult finish() { return std::move(result_); }

private:
    SuiteResult result_;
};

void check_max_n(int max_n)
{
    if (max_n < 2 || max_n > kVerifyMaxN)
        throw InvalidArgument("--max-n must lie in 2.." + std::to_string(kVerifyMaxN));
}

std::string tag(const std::string& what, int n, int t) { return what + " n=" + std::to_string(n) + " t=" + std::to_string(t); }

}  // namespace

SuiteResult verify_boards_suite(int max_n, const Limits& limits)
{
    check_max_n(max_n);
    Checker c("boards");
    for (int n = 2; n <= max_n; ++n) {
        for (int t = 0; t <= 2; ++t) {
            for (const auto& [name, board] : {std::pair{"catalan", catalan_board(t, n)}, std::pair{"shi", shi_board(t, n)},
                                             std::pair{"linial", linial_board(t, n)}}) {
                c.check(tag(std::string(name) + " factorial = partition sum", n, t), [&, b = board] {
                    return factorial_polynomial(b, limits) == gjw_factorial_polynomial(b, limits);
                });
                c.check(tag(std::string(name) + " placements = r_m", n, t), [&, b = board] {
                    std::size_t count = 0;
                    for_each_max_placement(b, [&](const Placement&) { ++count; }, limits);
                    return BigInt(count) == rook_numbers(b, limits)[static_cast<std::size_t>(b.row_count())];
                });
            }
        }
        c.check("linial closed form n=" + std::to_string(n), [&] {
            return factorial_polynomial(linial_board(0, n), limits) == linial_factorial_closed_form(n);
        });
    }
    return c.finish();
}

SuiteResult verify_partitions_suite(int max_n, const Limits& limits)
{
    check_max_n(max_n);
    Checker c("partitions");
    for (int m = 1; m <= max_n; ++m) {
        c.check("bell m=" + std::to_string(m), [&] {
            return BigInt(enumerate_set_partitions(m, limits).size()) == bell_number(m);
        });
        // Sum of mu(0, sigma) over the whole lattice vanishes above a point.
        c.check("mobius sum m=" + std::to_string(m), [&] {
            BigInt sum = 0;
            for_each_set_partition(m, [&](const SetPartition& s) { sum += mobius_bottom(s); }, limits);
            return sum == (m == 1 ? 1 : 0);
        });
    }
    return c.finish();
}

SuiteResult verify_trees_suite(int max_n, const Limits& limits)
{
    check_max_n(max_n);
    Checker c("trees");
    for (int n = 1; n <= std::min(max_n, 5); ++n) {
        for (int k = 2; k <= 3; ++k) {
            const std::string at = " n=" + std::to_string(n) + " k=" + std::to_string(k);
            c.check("ltree closed form vs enumeration" + at, [&] {
                BigInt counted = 0;
                for_each_plane_tree(n, k, TreeClass::ltree, [&](const PlaneKaryTree&) { ++counted; }, limits);
                return counted == ltree_count_formula(n, k);
            });
            c.check("increasing closed form vs enumeration" + at, [&] {
                BigInt counted = 0;
                for_each_plane_tree(n, k, TreeClass::increasing, [&](const PlaneKaryTree&) { ++counted; }, limits);
                return counted == increasing_count_formula(n, k);
            });
            c.check("all trees" + at, [&] {
                return BigInt(enumerate_plane_trees(n, k, limits).size()) == plane_tree_count(n, k);
            });
        }
    }
    for (int n = 2; n <= std::min(max_n, 5); ++n) {
        for (int a = 1; a <= 2; ++a) {
            const std::string at = " n=" + std::to_string(n) + " a=" + std::to_string(a);
            c.check("ltree = linial regions" + at, [&] {
                return count_class(n, a + 1, TreeClass::ltree, limits) == regions(TruncatedAffineSpec::linial(n, a));
            });
            c.check("ltree-b = linial bounded regions" + at, [&] {
                return count_class(n, a + 1, TreeClass::ltree_b, limits) ==
                       bounded_regions(TruncatedAffineSpec::linial(n, a));
            });
        }
    }
    return c.finish();
}

SuiteResult verify_bijection_suite(int max_n, const Limits& limits)
{
    check_max_n(max_n);
    Checker c("bijection");
    for (int k = 1; k <= 3; ++k) {
        for (int n = 1; n <= std::min(max_n, k == 3 ? 4 : 5); ++n) {
            const std::string at = " n=" + std::to_string(n) + " k=" + std::to_string(k);
            c.check("psi roundtrip and statistics" + at, [&] {
                bool ok = true;
                for_each_colored_placement(n, k, [&](const ColoredPlacement& g) {
                    if (!ok) return;
                    const PlaneKaryTree tree = psi(g);
                    const ExcSub es = exc_sub(g);
                    const TreeStatistics st = statistics(tree);
                    ok = psi_inverse(tree) == g && es.exc == st.dsc && es.sub == st.asc && phi(phi_inverse(g)) == g;
                }, limits);
                return ok;
            });
            c.check("gessel from placements = from trees" + at, [&] {
                return gessel_polynomial(n, k, limits) == tree_statistic_polynomial(n, k, limits);
            });
        }
    }
    return c.finish();
}

SuiteResult verify_arrangements_suite(int max_n, const Limits& limits)
{
    check_max_n(max_n);
    Checker c("arrangements");
    const std::pair<int, int> pairs[] = {{1, 1}, {1, 2}, {0, 2}, {1, 3}, {2, 4}};
    for (int n = 2; n <= std::min(max_n, 5); ++n) {
        for (const auto& [a, b] : pairs) {
            const TruncatedAffineSpec spec{n, a, b};
            c.check("formula = finite field n=" + std::to_string(n) + " (a,b)=(" + std::to_string(a) + "," +
                        std::to_string(b) + ")",
                    [&] {
                        return charpoly(spec, CharpolyMethod::formula) == charpoly(spec, CharpolyMethod::finite_field);
                    });
        }
        for (int a = 1; a <= 2; ++a) {
            const std::string at = " n=" + std::to_string(n) + " a=" + std::to_string(a);
            c.check("partition sum" + at, [&] {
                const IntegerPolynomial chi = charpoly_formula(TruncatedAffineSpec::linial(n, a));
                const IntegerPolynomial sign = IntegerPolynomial::constant((n - 1) % 2 == 0 ? 1 : -1);
                return sign * chi == linial_charpoly_partition_sum(n, a);
            });
            c.check("regions = sequences" + at, [&] {
                const RegionCounts counts = region_counts(TruncatedAffineSpec::linial(n, a));
                return counts.regions == sequence_count(n, a, RegionKind::regions, limits) &&
                       counts.bounded == sequence_count(n, a, RegionKind::bounded, limits);
            });
        }
    }
    return c.finish();
}

SuiteResult verify_graphs_suite(int max_n, const Limits& limits)
{
    check_max_n(max_n);
    Checker c("graphs");
    for (int n = 2; n <= std::min(max_n, 5); ++n) {
        for (int t = 0; t <= 3; ++t) {
            if (n - 2 + t < 1) continue;
            c.check(tag("chromatic of complement", n, t), [&] {
                const int shift = 2 * n - 4 + t;
                const IntegerPolynomial r = factorial_polynomial(linial_board(t, n), limits);
                const IntegerPolynomial expected =
                    falling_factorial(static_cast<unsigned>(shift)) * compose_linear(r, BigInt(1), BigInt(-shift));
                return chromatic_polynomial(complement(linial_graph(t, n))) == expected;
            });
            c.check(tag("maximum matchings", n, t), [&] {
                const MatchingCount m = count_maximum_matchings(linial_graph(t, n));
                return m.size == n - 1 && m.count == rook_numbers(linial_board(t, n), limits)[static_cast<std::size_t>(n - 1)];
            });
        }
    }
    return c.finish();
}

SuiteResult verify_series_suite(int max_n, const Limits& limits)
{
    check_max_n(max_n);
    Checker c("series");
    const int order = std::min(max_n + 2, 8);
    for (int k = 2; k <= 3; ++k) {
        c.check("ltree egf k=" + std::to_string(k), [&] { return verify_ltree_egf(k, order, limits).passed; });
        c.check("f equation k=" + std::to_string(k), [&] { return verify_f_equation(k, order).passed; });
    }
    const int gessel_order = std::min(max_n, 5);
    c.check("drake k=2", [&] {
        return verify_drake_inverse(2, {Rational(1, 2), Rational(1, 3)}, {2, 3}, gessel_order, limits).passed;
    });
    c.check("drake k=3", [&] {
        return verify_drake_inverse(3, {Rational(1, 2), Rational(1, 3), 2}, {2, 3, Rational(1, 5)}, std::min(gessel_order, 4),
                                    limits)
            .passed;
    });
    c.check("gessel k=2 equation", [&] {
        return verify_gessel_k2_equation(Rational(2), Rational(3), Rational(5), Rational(7), gessel_order, limits).passed;
    });
    return c.finish();
}

std::vector<SuiteResult> run_all_suites(int max_n, const Limits& limits)
{
    check_max_n(max_n);
    return {verify_boards_suite(max_n, limits),       verify_partitions_suite(max_n, limits),
            verify_trees_suite(max_n, limits),        verify_bijection_suite(max_n, limits),
            verify_arrangements_suite(max_n, limits), verify_graphs_suite(max_n, limits),
            verify_series_suite(max_n, limits)};
}

}  // namespace rooks
