#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>
#include <string_view>

namespace rooks {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

std::string to_string(const BigInt& value);
/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& value);

/// Parses an optionally signed decimal integer. Throws InvalidArgument.
BigInt parse_bigint(std::string_view text);
/// Parses "p", "p/q" or a terminating decimal such as "-0.25".
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& value);
/// Throws InternalConsistencyError when value is not integral.
BigInt to_integer_checked(const Rational& value, std::string_view context);

BigInt factorial(unsigned n);
BigInt binomial(unsigned n, unsigned k);
BigInt pow(const BigInt& base, unsigned exponent);
Rational pow(const Rational& base, int exponent);

}  // namespace rooks
