#pragma once

#include "rooks/errors.hpp"
#include "rooks/numeric.hpp"

#include <optional>
#include <string>
#include <vector>

namespace rooks {

/// Power series c_0 + c_1 x + ... + c_N x^N over the rationals, exact modulo
/// x^(N+1). Coefficients are ordinary; use from_egf / egf_coefficient to move
/// between ordinary and exponential conventions.
class TruncatedPowerSeries {
public:
    explicit TruncatedPowerSeries(int order = 0);
    /// Missing coefficients are zero; coefficients beyond the order are dropped.
    TruncatedPowerSeries(int order, std::vector<Rational> coefficients);

    static TruncatedPowerSeries constant(int order, const Rational& c);
    /// The series x.
    static TruncatedPowerSeries variable(int order);
    /// sum_n a_n x^n / n!, with a_n = values[n].
    static TruncatedPowerSeries from_egf(int order, const std::vector<BigInt>& values);

    int order() const noexcept { return static_cast<int>(coefficients_.size()) - 1; }
    const Rational& operator[](int i) const;
    void set(int i, const Rational& value);
    const std::vector<Rational>& coefficients() const noexcept { return coefficients_; }
    /// n! [x^n].
    Rational egf_coefficient(int n) const;
    /// Same series at a lower order.
    TruncatedPowerSeries truncate(int order) const;
    std::string to_string() const;

    TruncatedPowerSeries& operator+=(const TruncatedPowerSeries& other);
    TruncatedPowerSeries& operator-=(const TruncatedPowerSeries& other);
    TruncatedPowerSeries& operator*=(const TruncatedPowerSeries& other);
    TruncatedPowerSeries& operator*=(const Rational& c);

    friend TruncatedPowerSeries operator+(TruncatedPowerSeries a, const TruncatedPowerSeries& b) { return a += b; }
    friend TruncatedPowerSeries operator-(TruncatedPowerSeries a, const TruncatedPowerSeries& b) { return a -= b; }
    friend TruncatedPowerSeries operator*(TruncatedPowerSeries a, const TruncatedPowerSeries& b) { return a *= b; }
    friend TruncatedPowerSeries operator*(TruncatedPowerSeries a, const Rational& c) { return a *= c; }
    friend TruncatedPowerSeries operator*(const Rational& c, TruncatedPowerSeries a) { return a *= c; }
    friend TruncatedPowerSeries operator-(TruncatedPowerSeries a) { return a *= Rational(-1); }
    friend bool operator==(const TruncatedPowerSeries&, const TruncatedPowerSeries&) = default;

private:
    std::vector<Rational> coefficients_;
};

// Binary operations work at the smaller of the two orders.

/// 1/f; needs f(0) != 0.
TruncatedPowerSeries reciprocal(const TruncatedPowerSeries& f);
/// exp(f); needs f(0) = 0.
TruncatedPowerSeries exp(const TruncatedPowerSeries& f);
/// log(f); needs f(0) = 1.
TruncatedPowerSeries log(const TruncatedPowerSeries& f);
/// f^e; negative exponents need f(0) != 0.
TruncatedPowerSeries pow(const TruncatedPowerSeries& f, int exponent);
TruncatedPowerSeries derivative(const TruncatedPowerSeries& f);
/// f(g); needs g(0) = 0.
TruncatedPowerSeries compose(const TruncatedPowerSeries& f, const TruncatedPowerSeries& g);
/// g with f(g) = g(f) = x, solved one coefficient at a time; needs f(0) = 0
/// and f'(0) != 0.
TruncatedPowerSeries compositional_inverse(const TruncatedPowerSeries& f);

/// Outcome of checking a series identity coefficient by coefficient.
struct VerificationReport {
    std::string identity;
    int order = 0;
    bool passed = true;
    /// Lowest power of x where the two sides differ.
    std::optional<int> first_mismatch;
    std::string detail;
};

/// Index of the first differing coefficient, if any, up to the common order.
std::optional<int> first_difference(const TruncatedPowerSeries& lhs, const TruncatedPowerSeries& rhs);

inline constexpr int kSeriesMaxOrder = 12;
inline constexpr int kGesselSeriesMaxOrder = 8;

/// 2 log(1+x) / ((1+x)^(k-2) (2+x)).
TruncatedPowerSeries ltree_inverse_generator(int k, int order);
/// Compositional inverse of ltree_inverse_generator: sum_n l_{n,k} x^n / n!.
TruncatedPowerSeries ltree_egf(int k, int order);

/// Compares the EGF coefficients of ltree_egf against the closed form and,
/// where plane_tree_count(n, k) fits under limits.max_enum, against tree
/// enumeration. Needs k >= 2 and 0 <= order <= 12.
VerificationReport verify_ltree_egf(int k, int order, const Limits& limits = {});

/// With f = 1 + ltree_egf, checks f^2 = exp(x (f^(k-2) + f^(k-1))).
VerificationReport verify_f_equation(int k, int order);

/// sum_n G_{n,k}(u, v) x^n / n! for n = 1..order, evaluated at numbers.
TruncatedPowerSeries gessel_egf(int k, const std::vector<Rational>& u, const std::vector<Rational>& v, int order,
                                const Limits& limits = {});

/// sum_i (v_i-u_i)^(k-2) log((1+v_i x)/(1+u_i x)) prod_{j != i} 1/Z(v_i,u_i,v_j,u_j)
/// with Z(a,b,c,d) = (ad-bc)x + (a-c) - (b-d), at numeric u, v. Throws
/// InvalidArgument naming the pair (i, j) when some Z has zero constant term.
TruncatedPowerSeries drake_generator(int k, const std::vector<Rational>& u, const std::vector<Rational>& v, int order);

/// Checks drake_generator(gessel_egf) = x.
VerificationReport verify_drake_inverse(int k, const std::vector<Rational>& u, const std::vector<Rational>& v,
                                        int order, const Limits& limits = {});

/// With B = gessel_egf at k = 2, checks
/// (1+v1 B)(1+u2 B) / ((1+v2 B)(1+u1 B)) = exp(((v1 u2 - v2 u1) B + v1 - v2 - u1 + u2) x).
/// Needs order <= 8.
VerificationReport verify_gessel_k2_equation(const Rational& u1, const Rational& u2, const Rational& v1,
                                             const Rational& v2, int order, const Limits& limits = {});

}  // namespace rooks
