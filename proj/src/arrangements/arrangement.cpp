#include "rooks/arrangement.hpp"

#include "rooks/board.hpp"
#include "rooks/set_partition.hpp"

#include <string>

namespace rooks {
namespace {

bool is_prime(int q)
{
    if (q < 2) return false;
    for (int d = 2; d * d <= q; ++d)
        if (q % d == 0) return false;
    return true;
}

IntegerPolynomial partition_sum(int m, const std::function<IntegerPolynomial(const SetPartition::Block&)>& factor)
{
    IntegerPolynomial sum;
    for_each_set_partition(m, [&](const SetPartition& sigma) {
        IntegerPolynomial term = IntegerPolynomial::constant(mobius_bottom(sigma));
        for (const auto& block : sigma.blocks()) term *= factor(block);
        sum += term;
    });
    return sum;
}

}  // namespace

void TruncatedAffineSpec::validate() const
{
    if (n < 2) throw InvalidArgument("arrangements need n >= 2");
    if (a < 0 || b < 0) throw InvalidArgument("arrangement parameters a, b must be nonnegative");
    if (a + b < 2) throw InvalidArgument("arrangement parameters need a + b >= 2");
}

TruncatedAffineSpec TruncatedAffineSpec::linial(int n, int a)
{
    if (a < 1) throw InvalidArgument("extended Linial arrangements need a >= 1");
    return {n, a - 1, a + 1};
}

TruncatedAffineSpec TruncatedAffineSpec::catalan(int n, int a)
{
    if (a < 1) throw InvalidArgument("extended Catalan arrangements need a >= 1");
    return {n, a, a};
}

TruncatedAffineSpec TruncatedAffineSpec::shi(int n, int a)
{
    if (a < 1) throw InvalidArgument("extended Shi arrangements need a >= 1");
    return {n, a, a + 1};
}

std::optional<int> TruncatedAffineSpec::linial_parameter() const
{
    if (b == a + 2) return a + 1;
    return std::nullopt;
}

std::string_view to_string(CharpolyMethod method)
{
    return method == CharpolyMethod::formula ? "formula" : "finite-field";
}

std::optional<CharpolyMethod> parse_charpoly_method(std::string_view name)
{
    if (name == "formula") return CharpolyMethod::formula;
    if (name == "finite-field") return CharpolyMethod::finite_field;
    return std::nullopt;
}

IntegerPolynomial charpoly_formula(const TruncatedAffineSpec& spec)
{
    spec.validate();
    const int n = spec.n;
    if (spec.a == 1 && spec.b == 1) {
        IntegerPolynomial chi = IntegerPolynomial::constant(1);
        for (int j = 1; j <= n - 1; ++j) chi *= IntegerPolynomial::linear(-j);
        return chi;
    }
    if (spec.a == 1 && spec.b == 2) return power_of_linear(n, static_cast<unsigned>(n - 1));
    if (const auto a = spec.linial_parameter()) {
        const IntegerPolynomial r = factorial_polynomial(linial_board(0, n));
        IntegerPolynomial chi = compose_linear(r, -1, 1 + BigInt(*a - 1) * n);
        if ((n - 1) % 2 == 1) chi = -chi;
        return chi;
    }
    throw InvalidArgument("no closed form for (a, b) = (" + std::to_string(spec.a) + ", " + std::to_string(spec.b) +
                          "); use the finite-field method");
}

std::vector<int> finite_field_primes(const TruncatedAffineSpec& spec, int set_index)
{
    spec.validate();
    const int bound = (spec.a + spec.b) * spec.n;
    std::vector<int> primes;
    int q = bound + 1;
    const auto needed = static_cast<std::size_t>(spec.n) * static_cast<std::size_t>(set_index + 1);
    while (primes.size() < needed) {
        if (is_prime(q)) primes.push_back(q);
        ++q;
    }
    return {primes.end() - spec.n, primes.end()};
}

BigInt count_points_mod(const TruncatedAffineSpec& spec, int q)
{
    spec.validate();
    if (q < 2) throw InvalidArgument("modulus must be at least 2");
    const int n = spec.n;
    // Coordinates are fixed from x_n = 0 downwards; a later coordinate x_i
    // (i < j) must avoid x_j + d for every forbidden difference d.
    std::vector<int> forbidden_differences;
    for (int d = -spec.a + 1; d <= spec.b - 1; ++d) forbidden_differences.push_back(((d % q) + q) % q);

    std::vector<int> blocked_by(static_cast<std::size_t>(q), 0);
    int blocked = 0;
    const auto block = [&](int x) {
        for (int d : forbidden_differences) {
            int& slot = blocked_by[static_cast<std::size_t>((x + d) % q)];
            if (slot++ == 0) ++blocked;
        }
    };
    const auto unblock = [&](int x) {
        for (int d : forbidden_differences) {
            int& slot = blocked_by[static_cast<std::size_t>((x + d) % q)];
            if (--slot == 0) --blocked;
        }
    };

    block(0);
    std::uint64_t total = 0;
    // free coordinates remaining, the last one is counted without iterating
    const auto recurse = [&](auto&& self, int remaining) -> void {
        if (remaining == 1) {
            total += static_cast<std::uint64_t>(q - blocked);
            return;
        }
        for (int x = 0; x < q; ++x) {
            if (blocked_by[static_cast<std::size_t>(x)] != 0) continue;
            block(x);
            self(self, remaining - 1);
            unblock(x);
        }
    };
    recurse(recurse, n - 1);
    return BigInt(total);
}

IntegerPolynomial charpoly_finite_field(const TruncatedAffineSpec& spec, const FiniteFieldOptions& options)
{
    spec.validate();
    if (spec.n > kFiniteFieldMaxN)
        throw ResourceLimit("finite-field point counting is capped at n = " + std::to_string(kFiniteFieldMaxN));

    const auto interpolate_set = [&](int set_index) {
        const auto primes = finite_field_primes(spec, set_index);
        std::vector<BigInt> xs, ys;
        for (int q : primes) {
            xs.emplace_back(q);
            ys.push_back(count_points_mod(spec, q));
        }
        return interpolate_integer(xs, ys);
    };

    const IntegerPolynomial chi = interpolate_set(0);
    if (chi.degree() != spec.n - 1 || chi.leading() != 1)
        throw InternalConsistencyError("finite-field characteristic polynomial " + chi.to_string("q") +
                                       " is not monic of degree " + std::to_string(spec.n - 1));
    if (options.cross_check) {
        const IntegerPolynomial again = interpolate_set(1);
        if (again != chi)
            throw InternalConsistencyError("finite-field characteristic polynomial depends on the primes: " +
                                           chi.to_string("q") + " vs " + again.to_string("q"));
    }
    return chi;
}

IntegerPolynomial charpoly(const TruncatedAffineSpec& spec, CharpolyMethod method)
{
    return method == CharpolyMethod::formula ? charpoly_formula(spec) : charpoly_finite_field(spec);
}

RegionCounts region_counts(const IntegerPolynomial& chi, int n)
{
    const BigInt sign = (n - 1) % 2 == 0 ? 1 : -1;
    return {sign * chi(BigInt(-1)), sign * chi(BigInt(1))};
}

RegionCounts region_counts(const TruncatedAffineSpec& spec, CharpolyMethod method)
{
    return region_counts(charpoly(spec, method), spec.n);
}

BigInt regions(const TruncatedAffineSpec& spec, CharpolyMethod method) { return region_counts(spec, method).regions; }

BigInt bounded_regions(const TruncatedAffineSpec& spec, CharpolyMethod method)
{
    return region_counts(spec, method).bounded;
}

std::vector<BigInt> bounded_region_sequence(int a, int n_max)
{
    if (a < 1) throw InvalidArgument("extended Linial arrangements need a >= 1");
    if (n_max < 1) throw InvalidArgument("sequence length must be positive");
    if (n_max > kBoundedSequenceMaxN)
        throw ResourceLimit("bounded-region sequence is capped at n = " + std::to_string(kBoundedSequenceMaxN));
    std::vector<BigInt> out{0};
    for (int n = 2; n <= n_max; ++n)
        out.push_back(to_integer_checked(linial_factorial_closed_form(n, Rational((a - 1) * n)), "bounded regions"));
    return out;
}

BigInt sequence_count(int n, int a, RegionKind kind, const Limits& limits)
{
    if (n < 2) throw InvalidArgument("sequence counts need n >= 2");
    if (a < 1) throw InvalidArgument("sequence counts need a >= 1");
    const int upper = kind == RegionKind::regions ? a * n : a * n - 2;
    if (upper < 1) return 0;
    // x_i + i ranges over [2, upper + n - 1].
    std::vector<char> used(static_cast<std::size_t>(upper + n) + 1, 0);
    std::uint64_t nodes = 0;
    std::uint64_t count = 0;
    const auto recurse = [&](auto&& self, int i) -> void {
        if (++nodes > limits.max_enum)
            throw ResourceLimit("sequence enumeration exceeds the cap of " + std::to_string(limits.max_enum) +
                                " search nodes");
        if (i == n) {
            ++count;
            return;
        }
        for (int x = 1; x <= upper; ++x) {
            char& cell = used[static_cast<std::size_t>(x + i)];
            if (cell) continue;
            cell = 1;
            self(self, i + 1);
            cell = 0;
        }
    };
    recurse(recurse, 1);
    return BigInt(count);
}

IntegerPolynomial linial_charpoly_partition_sum(int n, int a)
{
    if (n < 2 || a < 1) throw InvalidArgument("partition sum needs n >= 2 and a >= 1");
    return partition_sum(n - 1, [&](const SetPartition::Block& block) {
        // an - q - 1 + min - max, as a polynomial in q
        return IntegerPolynomial(std::vector<BigInt>{BigInt(a * n - 1 + block.front() - block.back()), BigInt(-1)});
    });
}

IntegerPolynomial catalan_partition_sum(int n)
{
    if (n < 2) throw InvalidArgument("partition sum needs n >= 2");
    return partition_sum(n - 1, [&](const SetPartition::Block&) { return IntegerPolynomial::linear(n - 2); });
}

IntegerPolynomial shi_partition_sum(int n)
{
    if (n < 2) throw InvalidArgument("partition sum needs n >= 2");
    return partition_sum(n - 1,
                         [&](const SetPartition::Block& block) { return IntegerPolynomial::linear(n - 2 + block.front()); });
}

}  // namespace rooks
