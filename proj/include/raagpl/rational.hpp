#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <string>

namespace raagpl {

// Exact rational arithmetic. cpp_rational keeps gcd(num, den) == 1 and den > 0
// after every operation, so equality is plain representation equality.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// Accepts "p" or "p/q" with optional leading '-', q > 0. Throws input_error otherwise.
Rational parse_rational(const std::string& text);

// Inverse of parse_rational: "p/q", or bare "p" when the value is an integer.
std::string to_string(const Rational& r);

} // namespace raagpl
