#pragma once

#include "rooks/numeric.hpp"

#include <initializer_list>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace rooks {

/// Dense univariate polynomial with arbitrary-precision integer coefficients,
/// stored low degree first. The zero polynomial has no coefficients; every
/// other value has a nonzero leading coefficient.
class IntegerPolynomial {
public:
    IntegerPolynomial() = default;
    IntegerPolynomial(std::initializer_list<long long> coefficients);
    explicit IntegerPolynomial(std::vector<BigInt> coefficients);

    static IntegerPolynomial constant(const BigInt& c);
    static IntegerPolynomial monomial(const BigInt& c, unsigned degree);
    /// x + c
    static IntegerPolynomial linear(const BigInt& c);

    bool is_zero() const noexcept { return coefficients_.empty(); }
    /// -1 for the zero polynomial.
    int degree() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    /// Coefficient of x^i; zero beyond the degree.
    BigInt coefficient(std::size_t i) const;
    BigInt leading() const;
    const std::vector<BigInt>& coefficients() const noexcept { return coefficients_; }

    BigInt operator()(const BigInt& x) const;
    Rational operator()(const Rational& x) const;

    IntegerPolynomial& operator+=(const IntegerPolynomial& rhs);
    IntegerPolynomial& operator-=(const IntegerPolynomial& rhs);
    IntegerPolynomial& operator*=(const IntegerPolynomial& rhs);
    IntegerPolynomial& operator*=(const BigInt& scalar);

    friend IntegerPolynomial operator+(IntegerPolynomial lhs, const IntegerPolynomial& rhs) { return lhs += rhs; }
    friend IntegerPolynomial operator-(IntegerPolynomial lhs, const IntegerPolynomial& rhs) { return lhs -= rhs; }
    friend IntegerPolynomial operator*(const IntegerPolynomial& lhs, const IntegerPolynomial& rhs);
    friend IntegerPolynomial operator*(IntegerPolynomial lhs, const BigInt& rhs) { return lhs *= rhs; }
    friend IntegerPolynomial operator*(const BigInt& lhs, IntegerPolynomial rhs) { return rhs *= lhs; }
    IntegerPolynomial operator-() const;

    friend bool operator==(const IntegerPolynomial&, const IntegerPolynomial&) = default;

    /// Human-readable form such as "x^3 + 6x^2 + 15x + 14".
    std::string to_string(const std::string& variable = "x") const;

private:
    void normalize();

    std::vector<BigInt> coefficients_;
};

std::ostream& operator<<(std::ostream& os, const IntegerPolynomial& p);

IntegerPolynomial add(const IntegerPolynomial& p, const IntegerPolynomial& q);
IntegerPolynomial multiply(const IntegerPolynomial& p, const IntegerPolynomial& q);
IntegerPolynomial scalar_multiply(const IntegerPolynomial& p, const BigInt& c);

/// p(alpha*x + beta), expanded.
IntegerPolynomial compose_linear(const IntegerPolynomial& p, const BigInt& alpha, const BigInt& beta);

/// p / d; throws InternalConsistencyError unless d divides every coefficient.
IntegerPolynomial divide_exact(const IntegerPolynomial& p, const BigInt& d);

Rational poly_eval(const IntegerPolynomial& p, const Rational& t);

/// (x)_j = x(x-1)...(x-j+1); (x)_0 = 1.
IntegerPolynomial falling_factorial(unsigned j);

/// (x - c)^e
IntegerPolynomial power_of_linear(const BigInt& c, unsigned e);

/// Unique polynomial of degree < xs.size() through the points; throws
/// InternalConsistencyError if it does not have integer coefficients.
IntegerPolynomial interpolate_integer(std::span<const BigInt> xs, std::span<const BigInt> ys);

}  // namespace rooks
