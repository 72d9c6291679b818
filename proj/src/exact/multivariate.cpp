#include "rooks/multivariate.hpp"

#include "rooks/errors.hpp"

#include <numeric>
#include <sstream>

namespace rooks {

int WeakComposition::total() const noexcept { return std::accumulate(parts.begin(), parts.end(), 0); }

void MultivariatePolynomial::add_term(const WeakComposition& u_exponents, const WeakComposition& v_exponents,
                                      const BigInt& c)
{
    if (static_cast<int>(u_exponents.size()) != k_ || static_cast<int>(v_exponents.size()) != k_)
        throw InvalidArgument("exponent compositions must have exactly k parts");
    Exponents e;
    e.reserve(2 * static_cast<std::size_t>(k_));
    e.insert(e.end(), u_exponents.parts.begin(), u_exponents.parts.end());
    e.insert(e.end(), v_exponents.parts.begin(), v_exponents.parts.end());
    add_term(e, c);
}

void MultivariatePolynomial::add_term(const Exponents& exponents, const BigInt& c)
{
    if (static_cast<int>(exponents.size()) != 2 * k_) throw InvalidArgument("exponent vector must have 2k entries");
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exponents, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

Rational MultivariatePolynomial::evaluate(std::span<const Rational> values) const
{
    if (static_cast<int>(values.size()) != 2 * k_) throw InvalidArgument("evaluation needs 2k values");
    Rational sum = 0;
    for (const auto& [exponents, c] : terms_) {
        Rational term(c);
        for (std::size_t i = 0; i < exponents.size(); ++i)
            if (exponents[i] != 0) term *= pow(values[i], exponents[i]);
        sum += term;
    }
    return sum;
}

MultivariatePolynomial MultivariatePolynomial::permute_variables(std::span<const int> target) const
{
    if (static_cast<int>(target.size()) != 2 * k_) throw InvalidArgument("variable permutation needs 2k entries");
    MultivariatePolynomial out(k_);
    for (const auto& [exponents, c] : terms_) {
        Exponents moved(exponents.size(), 0);
        for (std::size_t i = 0; i < exponents.size(); ++i) moved[static_cast<std::size_t>(target[i])] += exponents[i];
        out.add_term(moved, c);
    }
    return out;
}

BigInt MultivariatePolynomial::total() const
{
    BigInt sum = 0;
    for (const auto& term : terms_) sum += term.second;
    return sum;
}

std::string MultivariatePolynomial::to_string() const
{
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // Highest total degree first reads more naturally.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [exponents, c] = *it;
        if (!first) os << (c < 0 ? " - " : " + ");
        else if (c < 0) os << "-";
        first = false;
        const BigInt magnitude = abs(c);
        bool any_variable = false;
        std::ostringstream vars;
        for (std::size_t i = 0; i < exponents.size(); ++i) {
            if (exponents[i] == 0) continue;
            vars << (i < static_cast<std::size_t>(k_) ? 'u' : 'v') << (i % static_cast<std::size_t>(k_)) + 1;
            if (exponents[i] > 1) vars << '^' << exponents[i];
            any_variable = true;
        }
        if (magnitude != 1 || !any_variable) os << magnitude;
        os << vars.str();
    }
    return os.str();
}

}  // namespace rooks
