#include "rooks/numeric.hpp"

#include "rooks/errors.hpp"

#include <cctype>

namespace rooks {

std::string to_string(const BigInt& value) { return value.str(); }

std::string to_string(const Rational& value)
{
    const BigInt num = boost::multiprecision::numerator(value);
    const BigInt den = boost::multiprecision::denominator(value);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

BigInt parse_bigint(std::string_view text)
{
    std::size_t pos = 0;
    bool negative = false;
    if (pos < text.size() && (text[pos] == '-' || text[pos] == '+')) {
        negative = text[pos] == '-';
        ++pos;
    }
    if (pos == text.size()) throw InvalidArgument("not an integer: '" + std::string(text) + "'");
    BigInt value = 0;
    for (; pos < text.size(); ++pos) {
        const char c = text[pos];
        if (!std::isdigit(static_cast<unsigned char>(c)))
            throw InvalidArgument("not an integer: '" + std::string(text) + "'");
        value = value * 10 + (c - '0');
    }
    return negative ? BigInt(-value) : value;
}

Rational parse_rational(std::string_view text)
{
    if (const auto slash = text.find('/'); slash != std::string_view::npos) {
        const BigInt num = parse_bigint(text.substr(0, slash));
        const BigInt den = parse_bigint(text.substr(slash + 1));
        if (den == 0) throw InvalidArgument("zero denominator in '" + std::string(text) + "'");
        return Rational(num, den);
    }
    if (const auto dot = text.find('.'); dot != std::string_view::npos) {
        const std::string_view frac = text.substr(dot + 1);
        std::string digits(text.substr(0, dot));
        if (digits.empty() || digits == "-" || digits == "+") digits += "0";
        for (char c : frac)
            if (!std::isdigit(static_cast<unsigned char>(c)))
                throw InvalidArgument("not a number: '" + std::string(text) + "'");
        digits += frac;
        return Rational(parse_bigint(digits), pow(BigInt(10), static_cast<unsigned>(frac.size())));
    }
    return Rational(parse_bigint(text));
}

bool is_integer(const Rational& value) { return boost::multiprecision::denominator(value) == 1; }

BigInt to_integer_checked(const Rational& value, std::string_view context)
{
    if (!is_integer(value))
        throw InternalConsistencyError(std::string(context) + ": expected an integer, got " + to_string(value));
    return boost::multiprecision::numerator(value);
}

BigInt factorial(unsigned n)
{
    BigInt result = 1;
    for (unsigned i = 2; i <= n; ++i) result *= i;
    return result;
}

BigInt binomial(unsigned n, unsigned k)
{
    if (k > n) return 0;
    k = std::min(k, n - k);
    BigInt result = 1;
    for (unsigned i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

BigInt pow(const BigInt& base, unsigned exponent) { return boost::multiprecision::pow(base, exponent); }

Rational pow(const Rational& base, int exponent)
{
    if (exponent < 0) {
        if (base == 0) throw InvalidArgument("zero raised to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Rational result = 1;
    Rational b = base;
    for (unsigned e = static_cast<unsigned>(exponent); e != 0; e >>= 1) {
        if (e & 1u) result *= b;
        if (e > 1) b *= b;
    }
    return result;
}

}  // namespace rooks
