#include "rooks/series.hpp"

#include <algorithm>
#include <sstream>

namespace rooks {
namespace {

void check_order(int order)
{
    if (order < 0) throw InvalidArgument("series order must be non-negative");
}

}  // namespace

TruncatedPowerSeries::TruncatedPowerSeries(int order)
{
    check_order(order);
    coefficients_.assign(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedPowerSeries::TruncatedPowerSeries(int order, std::vector<Rational> coefficients)
    : coefficients_(std::move(coefficients))
{
    check_order(order);
    coefficients_.resize(static_cast<std::size_t>(order) + 1, Rational(0));
}

TruncatedPowerSeries TruncatedPowerSeries::constant(int order, const Rational& c)
{
    TruncatedPowerSeries s(order);
    s.coefficients_[0] = c;
    return s;
}

TruncatedPowerSeries TruncatedPowerSeries::variable(int order)
{
    TruncatedPowerSeries s(order);
    if (order >= 1) s.coefficients_[1] = 1;
    return s;
}

TruncatedPowerSeries TruncatedPowerSeries::from_egf(int order, const std::vector<BigInt>& values)
{
    TruncatedPowerSeries s(order);
    for (int n = 0; n <= order && n < static_cast<int>(values.size()); ++n)
        s.coefficients_[static_cast<std::size_t>(n)] = Rational(values[static_cast<std::size_t>(n)], factorial(static_cast<unsigned>(n)));
    return s;
}

const Rational& TruncatedPowerSeries::operator[](int i) const
{
    if (i < 0 || i > order()) throw InvalidArgument("series index out of range");
    return coefficients_[static_cast<std::size_t>(i)];
}

void TruncatedPowerSeries::set(int i, const Rational& value)
{
    if (i < 0 || i > order()) throw InvalidArgument("series index out of range");
    coefficients_[static_cast<std::size_t>(i)] = value;
}

Rational TruncatedPowerSeries::egf_coefficient(int n) const
{
    return (*this)[n] * Rational(factorial(static_cast<unsigned>(n)));
}

TruncatedPowerSeries TruncatedPowerSeries::truncate(int new_order) const
{
    if (new_order > order()) throw InvalidArgument("cannot raise the order of a truncated series");
    return TruncatedPowerSeries(new_order, coefficients_);
}

std::string TruncatedPowerSeries::to_string() const
{
    std::ostringstream out;
    bool first = true;
    for (int i = 0; i <= order(); ++i) {
        const Rational& c = coefficients_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        if (!first) out << (c < 0 ? " - " : " + ");
        else if (c < 0) out << "-";
        first = false;
        const Rational a = c < 0 ? Rational(-c) : c;
        if (i == 0 || a != 1) out << rooks::to_string(a);
        if (i >= 1) out << "x";
        if (i >= 2) out << "^" << i;
    }
    if (first) out << "0";
    out << " + O(x^" << order() + 1 << ")";
    return out.str();
}

TruncatedPowerSeries& TruncatedPowerSeries::operator+=(const TruncatedPowerSeries& other)
{
    coefficients_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] += other.coefficients_[i];
    return *this;
}

TruncatedPowerSeries& TruncatedPowerSeries::operator-=(const TruncatedPowerSeries& other)
{
    coefficients_.resize(static_cast<std::size_t>(std::min(order(), other.order())) + 1);
    for (std::size_t i = 0; i < coefficients_.size(); ++i) coefficients_[i] -= other.coefficients_[i];
    return *this;
}

TruncatedPowerSeries& TruncatedPowerSeries::operator*=(const TruncatedPowerSeries& other)
{
    const std::size_t size = static_cast<std::size_t>(std::min(order(), other.order())) + 1;
    std::vector<Rational> product(size, Rational(0));
    for (std::size_t i = 0; i < size; ++i) {
        if (coefficients_[i] == 0) continue;
        for (std::size_t j = 0; i + j < size; ++j) product[i + j] += coefficients_[i] * other.coefficients_[j];
    }
    coefficients_ = std::move(product);
    return *this;
}

TruncatedPowerSeries& TruncatedPowerSeries::operator*=(const Rational& c)
{
    for (auto& a : coefficients_) a *= c;
    return *this;
}

TruncatedPowerSeries reciprocal(const TruncatedPowerSeries& f)
{
    if (f[0] == 0) throw InvalidArgument("reciprocal needs a non-zero constant term");
    const int n = f.order();
    TruncatedPowerSeries g(n);
    g.set(0, 1 / f[0]);
    for (int i = 1; i <= n; ++i) {
        Rational sum = 0;
        for (int j = 1; j <= i; ++j) sum += f[j] * g[i - j];
        g.set(i, -sum / f[0]);
    }
    return g;
}

TruncatedPowerSeries derivative(const TruncatedPowerSeries& f)
{
    TruncatedPowerSeries d(std::max(f.order() - 1, 0));
    for (int i = 1; i <= f.order(); ++i) d.set(i - 1, f[i] * i);
    return d;
}

TruncatedPowerSeries exp(const TruncatedPowerSeries& f)
{
    if (f[0] != 0) throw InvalidArgument("exp needs a zero constant term");
    // g' = f' g, so n g_n = sum_{j=1}^n j f_j g_{n-j}.
    const int n = f.order();
    TruncatedPowerSeries g(n);
    g.set(0, 1);
    for (int i = 1; i <= n; ++i) {
        Rational sum = 0;
        for (int j = 1; j <= i; ++j) sum += Rational(j) * f[j] * g[i - j];
        g.set(i, sum / i);
    }
    return g;
}

TruncatedPowerSeries log(const TruncatedPowerSeries& f)
{
    if (f[0] != 1) throw InvalidArgument("log needs constant term 1");
    const int n = f.order();
    if (n == 0) return TruncatedPowerSeries(0);
    const TruncatedPowerSeries q = derivative(f) * reciprocal(f.truncate(n - 1));
    TruncatedPowerSeries g(n);
    for (int i = 1; i <= n; ++i) g.set(i, q[i - 1] / i);
    return g;
}

TruncatedPowerSeries pow(const TruncatedPowerSeries& f, int exponent)
{
    if (exponent < 0) return pow(reciprocal(f), -exponent);
    TruncatedPowerSeries result = TruncatedPowerSeries::constant(f.order(), 1);
    TruncatedPowerSeries base = f;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1u) result *= base;
        if (e > 1) base *= base;
    }
    return result;
}

TruncatedPowerSeries compose(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g)
{
    if (g[0] != 0) throw InvalidArgument("compose(f, g) needs g(0) = 0");
    const int n = std::min(f.order(), g.order());
    TruncatedPowerSeries result = TruncatedPowerSeries::constant(n, f[n]);
    for (int i = n - 1; i >= 0; --i) {
        result *= g;
        result += TruncatedPowerSeries::constant(n, f[i]);
    }
    return result;
}

TruncatedPowerSeries compositional_inverse(const TruncatedPowerSeries& f)
{
    if (f[0] != 0) throw InvalidArgument("compositional inverse needs f(0) = 0");
    const int n = f.order();
    if (n == 0) throw InvalidArgument("compositional inverse needs order >= 1");
    if (f[1] == 0) throw InvalidArgument("series is not invertible: f'(0) = 0");
    TruncatedPowerSeries g = TruncatedPowerSeries::variable(n);
    g.set(1, 1 / f[1]);
    // With g_i unknown, [x^i] f(g) = f_1 g_i + (terms in g_1..g_{i-1}).
    for (int i = 2; i <= n; ++i) {
        const Rational residual = compose(f.truncate(i), g.truncate(i))[i];
        g.set(i, -residual / f[1]);
    }
    return g;
}

std::optional<int> first_difference(const TruncatedPowerSeries& lhs, const TruncatedPowerSeries& rhs)
{
    const int n = std::min(lhs.order(), rhs.order());
    for (int i = 0; i <= n; ++i)
        if (lhs[i] != rhs[i]) return i;
    return std::nullopt;
}

}  // namespace rooks
