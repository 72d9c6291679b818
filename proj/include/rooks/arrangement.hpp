#pragma once

#include "rooks/errors.hpp"
#include "rooks/numeric.hpp"
#include "rooks/polynomial.hpp"

#include <optional>
#include <string_view>
#include <vector>

namespace rooks {

/// Truncated affine arrangement x_i - x_j = -a+1, ..., b-1 (1 <= i < j <= n)
/// inside the sum-zero subspace of R^n.
struct TruncatedAffineSpec {
    int n = 2;
    int a = 0;
    int b = 2;

    /// Throws InvalidArgument unless n >= 2, a, b >= 0 and a + b >= 2.
    void validate() const;

    /// Extended Linial arrangement for parameter a >= 1: (a-1, a+1).
    static TruncatedAffineSpec linial(int n, int a);
    /// Extended Catalan (a, a).
    static TruncatedAffineSpec catalan(int n, int a);
    /// Extended Shi (a, a+1).
    static TruncatedAffineSpec shi(int n, int a);

    /// a for extended Linial parameters (b == a + 2), otherwise nullopt.
    std::optional<int> linial_parameter() const;

    friend bool operator==(const TruncatedAffineSpec&, const TruncatedAffineSpec&) = default;
};

enum class CharpolyMethod { formula, finite_field };

std::string_view to_string(CharpolyMethod method);
std::optional<CharpolyMethod> parse_charpoly_method(std::string_view name);

/// Closed forms for the braid (1,1), Shi (1,2) and extended Linial (a-1,a+1)
/// arrangements. The Linial case goes through the factorial polynomial of the
/// Linial board: chi(q) = (-1)^(n-1) R(1 + (a-1)n - q, L_{0,n}). Other (a, b)
/// throw InvalidArgument pointing at the finite-field method.
IntegerPolynomial charpoly_formula(const TruncatedAffineSpec& spec);

inline constexpr int kFiniteFieldMaxN = 6;

struct FiniteFieldOptions {
    /// Recompute with the next n primes and require the same polynomial.
    bool cross_check = true;
};

/// Counts points of (Z_q)^(n-1) (x_n = 0) off every hyperplane, for n primes
/// q > (a+b)n, and interpolates. Throws ResourceLimit for n > kFiniteFieldMaxN
/// and InternalConsistencyError if the result is not a monic integer
/// polynomial of degree n-1 or the two prime sets disagree.
IntegerPolynomial charpoly_finite_field(const TruncatedAffineSpec& spec, const FiniteFieldOptions& options = {});

/// Point count for one prime; exposed for the prime-independence checks.
BigInt count_points_mod(const TruncatedAffineSpec& spec, int q);

/// The primes used by charpoly_finite_field; set 0 is the first n primes above
/// the bound, set 1 the next n.
std::vector<int> finite_field_primes(const TruncatedAffineSpec& spec, int set_index);

IntegerPolynomial charpoly(const TruncatedAffineSpec& spec, CharpolyMethod method);

struct RegionCounts {
    BigInt regions;
    BigInt bounded;
    friend bool operator==(const RegionCounts&, const RegionCounts&) = default;
};

/// Zaslavsky with d = n-1: r = (-1)^d chi(-1), b = (-1)^d chi(1).
RegionCounts region_counts(const IntegerPolynomial& chi, int n);
RegionCounts region_counts(const TruncatedAffineSpec& spec, CharpolyMethod method = CharpolyMethod::formula);
BigInt regions(const TruncatedAffineSpec& spec, CharpolyMethod method = CharpolyMethod::formula);
BigInt bounded_regions(const TruncatedAffineSpec& spec, CharpolyMethod method = CharpolyMethod::formula);

inline constexpr int kBoundedSequenceMaxN = 12;

/// Bounded-region counts of the extended Linial arrangement for n = 1..n_max,
/// via R((a-1)n, L_{0,n}); the n = 1 entry is 0.
std::vector<BigInt> bounded_region_sequence(int a, int n_max);

enum class RegionKind { regions, bounded };

/// Sequences (x_1..x_{n-1}) with 1 <= x_i <= an (regions) or an-2 (bounded)
/// and all x_i + i distinct, counted by depth-first search. The search visits
/// at most limits.max_enum nodes.
BigInt sequence_count(int n, int a, RegionKind kind, const Limits& limits = {});

/// (-1)^(n-1) chi^{a-1,a+1}(q) as sum over partitions sigma of [n-1] of
/// mu(0, sigma) prod_A (an - q - 1 + min A - max A).
IntegerPolynomial linial_charpoly_partition_sum(int n, int a);

/// sum_sigma mu(0, sigma) prod_A (t + n - 2): R(t, C_{0,n}).
IntegerPolynomial catalan_partition_sum(int n);
/// sum_sigma mu(0, sigma) prod_A (t + n - 2 + min A): R(t, S_{0,n}).
IntegerPolynomial shi_partition_sum(int n);

}  // namespace rooks
