#include "rooks/series.hpp"

#include "rooks/bijection.hpp"
#include "rooks/tree.hpp"

#include <string>

namespace rooks {
namespace {

VerificationReport make_report(std::string identity, int order, const TruncatedPowerSeries& lhs,
                               const TruncatedPowerSeries& rhs)
{
    VerificationReport report{std::move(identity), order, true, std::nullopt, {}};
    report.first_mismatch = first_difference(lhs, rhs);
    if (report.first_mismatch) {
        const int n = *report.first_mismatch;
        report.passed = false;
        report.detail = "coefficient of x^" + std::to_string(n) + ": " + to_string(lhs[n]) + " vs " + to_string(rhs[n]);
    }
    return report;
}

void check_series_order(int order, int max_order)
{
    if (order < 0 || order > max_order)
        throw InvalidArgument("series order must lie in 0.." + std::to_string(max_order));
}

TruncatedPowerSeries one_plus(const Rational& c, const TruncatedPowerSeries& s)
{
    return TruncatedPowerSeries::constant(s.order(), 1) + c * s;
}

}  // namespace

TruncatedPowerSeries ltree_inverse_generator(int k, int order)
{
    if (k < 2) throw InvalidArgument("ltree series need k >= 2");
    const auto x = TruncatedPowerSeries::variable(order);
    const auto one = TruncatedPowerSeries::constant(order, 1);
    const auto two = TruncatedPowerSeries::constant(order, 2);
    return Rational(2) * log(one + x) * reciprocal(pow(one + x, k - 2) * (two + x));
}

TruncatedPowerSeries ltree_egf(int k, int order)
{
    if (order == 0) return TruncatedPowerSeries(0);
    return compositional_inverse(ltree_inverse_generator(k, order));
}

VerificationReport verify_ltree_egf(int k, int order, const Limits& limits)
{
    if (k < 2) throw InvalidArgument("ltree series need k >= 2");
    check_series_order(order, kSeriesMaxOrder);
    VerificationReport report{"ltree-egf", order, true, std::nullopt, {}};
    const TruncatedPowerSeries series = ltree_egf(k, order);
    int enumerated_up_to = 0;
    for (int n = 1; n <= order; ++n) {
        const Rational from_series = series.egf_coefficient(n);
        const BigInt closed_form = ltree_count_formula(n, k);
        std::string mismatch;
        if (from_series != Rational(closed_form)) {
            mismatch = "series gives " + to_string(from_series) + ", closed form " + to_string(closed_form);
        } else if (plane_tree_count(n, k) <= limits.max_enum) {
            BigInt counted = 0;
            for_each_plane_tree(n, k, TreeClass::ltree, [&](const PlaneKaryTree&) { ++counted; }, limits);
            if (counted != closed_form)
                mismatch = "enumeration gives " + to_string(counted) + ", closed form " + to_string(closed_form);
            enumerated_up_to = n;
        }
        if (!mismatch.empty()) {
            report.passed = false;
            report.first_mismatch = n;
            report.detail = "n = " + std::to_string(n) + ": " + mismatch;
            return report;
        }
    }
    report.detail = "enumeration checked for n <= " + std::to_string(enumerated_up_to);
    return report;
}

VerificationReport verify_f_equation(int k, int order)
{
    if (k < 2) throw InvalidArgument("ltree series need k >= 2");
    check_series_order(order, kSeriesMaxOrder);
    const TruncatedPowerSeries f = TruncatedPowerSeries::constant(order, 1) + ltree_egf(k, order);
    const TruncatedPowerSeries lhs = f * f;
    const TruncatedPowerSeries rhs = exp(TruncatedPowerSeries::variable(order) * (pow(f, k - 2) + pow(f, k - 1)));
    return make_report("f-equation", order, lhs, rhs);
}

TruncatedPowerSeries gessel_egf(int k, const std::vector<Rational>& u, const std::vector<Rational>& v, int order,
                                const Limits& limits)
{
    if (k < 1) throw InvalidArgument("k must be positive");
    if (static_cast<int>(u.size()) != k || static_cast<int>(v.size()) != k)
        throw InvalidArgument("expected " + std::to_string(k) + " values for each of u and v");
    if (order < 0) throw InvalidArgument("series order must be non-negative");
    std::vector<Rational> values(u);
    values.insert(values.end(), v.begin(), v.end());
    TruncatedPowerSeries series(order);
    for (int n = 1; n <= order; ++n)
        series.set(n, gessel_polynomial(n, k, limits).evaluate(values) / Rational(factorial(static_cast<unsigned>(n))));
    return series;
}

TruncatedPowerSeries drake_generator(int k, const std::vector<Rational>& u, const std::vector<Rational>& v, int order)
{
    if (k < 2) throw InvalidArgument("k must be at least 2");
    if (static_cast<int>(u.size()) != k || static_cast<int>(v.size()) != k)
        throw InvalidArgument("expected " + std::to_string(k) + " values for each of u and v");
    const auto idx = [](int i) { return static_cast<std::size_t>(i); };
    for (int i = 0; i < k; ++i)
        for (int j = i + 1; j < k; ++j)
            if (v[idx(i)] - u[idx(i)] == v[idx(j)] - u[idx(j)])
                throw InvalidArgument("parameters are not generic: Z(v" + std::to_string(i + 1) + ",u" +
                                      std::to_string(i + 1) + ",v" + std::to_string(j + 1) + ",u" +
                                      std::to_string(j + 1) + ") has zero constant term");

    const auto x = TruncatedPowerSeries::variable(order);
    TruncatedPowerSeries total(order);
    for (int i = 0; i < k; ++i) {
        const Rational& vi = v[idx(i)];
        const Rational& ui = u[idx(i)];
        // The empty power at k = 2 is 1 even when v_i = u_i.
        const Rational weight = k == 2 ? Rational(1) : pow(vi - ui, k - 2);
        TruncatedPowerSeries term = weight * (log(one_plus(vi, x)) - log(one_plus(ui, x)));
        for (int j = 0; j < k; ++j) {
            if (j == i) continue;
            const Rational& vj = v[idx(j)];
            const Rational& uj = u[idx(j)];
            const TruncatedPowerSeries z =
                TruncatedPowerSeries::constant(order, (vi - vj) - (ui - uj)) + (vi * uj - ui * vj) * x;
            term *= reciprocal(z);
        }
        total += term;
    }
    return total;
}

VerificationReport verify_drake_inverse(int k, const std::vector<Rational>& u, const std::vector<Rational>& v,
                                        int order, const Limits& limits)
{
    check_series_order(order, kSeriesMaxOrder);
    const TruncatedPowerSeries generator = drake_generator(k, u, v, order);
    const TruncatedPowerSeries egf = gessel_egf(k, u, v, order, limits);
    return make_report("drake", order, compose(generator, egf), TruncatedPowerSeries::variable(order));
}

VerificationReport verify_gessel_k2_equation(const Rational& u1, const Rational& u2, const Rational& v1,
                                             const Rational& v2, int order, const Limits& limits)
{
    check_series_order(order, kGesselSeriesMaxOrder);
    const TruncatedPowerSeries b = gessel_egf(2, {u1, u2}, {v1, v2}, order, limits);
    const TruncatedPowerSeries lhs =
        one_plus(v1, b) * one_plus(u2, b) * reciprocal(one_plus(v2, b) * one_plus(u1, b));
    const TruncatedPowerSeries exponent =
        (v1 * u2 - v2 * u1) * b + TruncatedPowerSeries::constant(order, v1 - v2 - u1 + u2);
    const TruncatedPowerSeries rhs = exp(TruncatedPowerSeries::variable(order) * exponent);
    return make_report("gessel-k2", order, lhs, rhs);
}

}  // namespace rooks
