#include "rooks/polynomial.hpp"

#include "rooks/errors.hpp"

#include <ostream>
#include <sstream>

namespace rooks {

IntegerPolynomial::IntegerPolynomial(std::initializer_list<long long> coefficients)
{
    coefficients_.reserve(coefficients.size());
    for (long long c : coefficients) coefficients_.emplace_back(c);
    normalize();
}

IntegerPolynomial::IntegerPolynomial(std::vector<BigInt> coefficients) : coefficients_(std::move(coefficients))
{
    normalize();
}

IntegerPolynomial IntegerPolynomial::constant(const BigInt& c) { return IntegerPolynomial(std::vector<BigInt>{c}); }

IntegerPolynomial IntegerPolynomial::monomial(const BigInt& c, unsigned degree)
{
    std::vector<BigInt> coefficients(degree + 1);
    coefficients[degree] = c;
    return IntegerPolynomial(std::move(coefficients));
}

IntegerPolynomial IntegerPolynomial::linear(const BigInt& c) { return IntegerPolynomial(std::vector<BigInt>{c, 1}); }

void IntegerPolynomial::normalize()
{
    while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

BigInt IntegerPolynomial::coefficient(std::size_t i) const
{
    return i < coefficients_.size() ? coefficients_[i] : BigInt(0);
}

BigInt IntegerPolynomial::leading() const { return is_zero() ? BigInt(0) : coefficients_.back(); }

BigInt IntegerPolynomial::operator()(const BigInt& x) const
{
    BigInt acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

Rational IntegerPolynomial::operator()(const Rational& x) const
{
    Rational acc = 0;
    for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + Rational(*it);
    return acc;
}

IntegerPolynomial& IntegerPolynomial::operator+=(const IntegerPolynomial& rhs)
{
    if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] += rhs.coefficients_[i];
    normalize();
    return *this;
}

IntegerPolynomial& IntegerPolynomial::operator-=(const IntegerPolynomial& rhs)
{
    if (rhs.coefficients_.size() > coefficients_.size()) coefficients_.resize(rhs.coefficients_.size());
    for (std::size_t i = 0; i < rhs.coefficients_.size(); ++i) coefficients_[i] -= rhs.coefficients_[i];
    normalize();
    return *this;
}

IntegerPolynomial operator*(const IntegerPolynomial& lhs, const IntegerPolynomial& rhs)
{
    if (lhs.is_zero() || rhs.is_zero()) return {};
    std::vector<BigInt> out(lhs.coefficients_.size() + rhs.coefficients_.size() - 1);
    for (std::size_t i = 0; i < lhs.coefficients_.size(); ++i) {
        if (lhs.coefficients_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coefficients_.size(); ++j)
            out[i + j] += lhs.coefficients_[i] * rhs.coefficients_[j];
    }
    return IntegerPolynomial(std::move(out));
}

IntegerPolynomial& IntegerPolynomial::operator*=(const IntegerPolynomial& rhs) { return *this = *this * rhs; }

IntegerPolynomial& IntegerPolynomial::operator*=(const BigInt& scalar)
{
    for (auto& c : coefficients_) c *= scalar;
    normalize();
    return *this;
}

IntegerPolynomial IntegerPolynomial::operator-() const
{
    IntegerPolynomial out = *this;
    for (auto& c : out.coefficients_) c = -c;
    return out;
}

std::string IntegerPolynomial::to_string(const std::string& variable) const
{
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coefficients_[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        const BigInt magnitude = abs(c);
        if (first) {
            if (c < 0) os << "-";
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (magnitude != 1 || i == 0) os << magnitude;
        if (i >= 1) os << variable;
        if (i >= 2) os << "^" << i;
        first = false;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const IntegerPolynomial& p) { return os << p.to_string(); }

IntegerPolynomial add(const IntegerPolynomial& p, const IntegerPolynomial& q) { return p + q; }
IntegerPolynomial multiply(const IntegerPolynomial& p, const IntegerPolynomial& q) { return p * q; }
IntegerPolynomial scalar_multiply(const IntegerPolynomial& p, const BigInt& c) { return p * c; }

IntegerPolynomial compose_linear(const IntegerPolynomial& p, const BigInt& alpha, const BigInt& beta)
{
    // Horner in the ring of polynomials: p(y) with y = alpha*x + beta.
    const IntegerPolynomial y(std::vector<BigInt>{beta, alpha});
    IntegerPolynomial acc;
    const auto& cs = p.coefficients();
    for (auto it = cs.rbegin(); it != cs.rend(); ++it) {
        acc *= y;
        acc += IntegerPolynomial::constant(*it);
    }
    return acc;
}

IntegerPolynomial divide_exact(const IntegerPolynomial& p, const BigInt& d)
{
    if (d == 0) throw InvalidArgument("division of a polynomial by zero");
    std::vector<BigInt> out;
    out.reserve(p.coefficients().size());
    for (const auto& c : p.coefficients()) {
        if (c % d != 0)
            throw InternalConsistencyError("polynomial " + p.to_string() + " is not divisible by " + d.str());
        out.push_back(c / d);
    }
    return IntegerPolynomial(std::move(out));
}

Rational poly_eval(const IntegerPolynomial& p, const Rational& t) { return p(t); }

IntegerPolynomial falling_factorial(unsigned j)
{
    IntegerPolynomial out = IntegerPolynomial::constant(1);
    for (unsigned i = 0; i < j; ++i) out *= IntegerPolynomial::linear(-BigInt(i));
    return out;
}

IntegerPolynomial power_of_linear(const BigInt& c, unsigned e)
{
    IntegerPolynomial out = IntegerPolynomial::constant(1);
    const IntegerPolynomial factor = IntegerPolynomial::linear(-c);
    for (unsigned i = 0; i < e; ++i) out *= factor;
    return out;
}

IntegerPolynomial interpolate_integer(std::span<const BigInt> xs, std::span<const BigInt> ys)
{
    if (xs.size() != ys.size() || xs.empty())
        throw InvalidArgument("interpolation needs equally many, and at least one, abscissae and values");
    const std::size_t n = xs.size();
    // Newton divided differences over the rationals.
    std::vector<Rational> diff(ys.begin(), ys.end());
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const BigInt dx = xs[i] - xs[i - level];
            if (dx == 0) throw InvalidArgument("interpolation abscissae must be distinct");
            diff[i] = (diff[i] - diff[i - 1]) / Rational(dx);
        }
    }
    std::vector<Rational> poly{diff[n - 1]};
    for (std::size_t idx = n - 1; idx-- > 0;) {
        // poly = poly * (x - xs[idx]) + diff[idx]
        std::vector<Rational> next(poly.size() + 1);
        for (std::size_t j = 0; j < poly.size(); ++j) {
            next[j + 1] += poly[j];
            next[j] -= poly[j] * Rational(xs[idx]);
        }
        next[0] += diff[idx];
        poly = std::move(next);
    }
    std::vector<BigInt> coefficients;
    coefficients.reserve(poly.size());
    for (const auto& c : poly) coefficients.push_back(to_integer_checked(c, "interpolation"));
    return IntegerPolynomial(std::move(coefficients));
}

}  // namespace rooks
