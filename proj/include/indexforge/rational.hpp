#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace indexforge {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// "n" for integers, "n/d" otherwise. Never a float.
std::string to_string(const Rational& q);

/// Accepts "n", "-n", "n/d". Throws std::invalid_argument on anything else.
Rational parse_rational(std::string_view text);

bool is_integer(const Rational& q);

/// Numerator of an integral rational; throws std::domain_error if q is not an integer.
Integer to_integer(const Rational& q);

Rational binomial(long n, long k);
Rational factorial(long n);

/// Convert to double for the numeric harnesses only.
double to_double(const Rational& q);

}  // namespace indexforge
