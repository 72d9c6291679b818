#pragma once

#include "rooks/numeric.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace rooks {

/// Weak composition with a fixed number of parts (one per colour / slot).
struct WeakComposition {
    std::vector<int> parts;

    WeakComposition() = default;
    explicit WeakComposition(std::size_t k) : parts(k, 0) {}
    WeakComposition(std::initializer_list<int> values) : parts(values) {}

    std::size_t size() const noexcept { return parts.size(); }
    int total() const noexcept;
    int& operator[](std::size_t i) { return parts[i]; }
    int operator[](std::size_t i) const { return parts[i]; }

    friend bool operator==(const WeakComposition&, const WeakComposition&) = default;
    friend auto operator<=>(const WeakComposition&, const WeakComposition&) = default;
};

/// Polynomial in u_1..u_k, v_1..v_k with integer coefficients. An exponent
/// vector is laid out as (u_1..u_k, v_1..v_k). Zero terms are never stored.
class MultivariatePolynomial {
public:
    using Exponents = std::vector<int>;

    MultivariatePolynomial() = default;
    explicit MultivariatePolynomial(int k) : k_(k) {}

    int k() const noexcept { return k_; }
    const std::map<Exponents, BigInt>& terms() const noexcept { return terms_; }
    std::size_t term_count() const noexcept { return terms_.size(); }

    void add_term(const WeakComposition& u_exponents, const WeakComposition& v_exponents, const BigInt& c);
    void add_term(const Exponents& exponents, const BigInt& c);

    /// values laid out like exponent vectors: (u_1..u_k, v_1..v_k).
    Rational evaluate(std::span<const Rational> values) const;

    /// Renames variables: variable i of *this becomes variable target[i].
    MultivariatePolynomial permute_variables(std::span<const int> target) const;

    /// Sum of all coefficients.
    BigInt total() const;

    std::string to_string() const;

    friend bool operator==(const MultivariatePolynomial&, const MultivariatePolynomial&) = default;

private:
    int k_ = 0;
    std::map<Exponents, BigInt> terms_;
};

}  // namespace rooks
