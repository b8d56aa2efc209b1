#ifndef WASP_RATIONAL_HPP
#define WASP_RATIONAL_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <string>

namespace wasp {

// Exact arbitrary-precision rational. Every weight and probability in the
// engine is one of these; doubles appear only in scoring and sampling.
using Rational = boost::multiprecision::cpp_rational;
using Integer = boost::multiprecision::cpp_int;

// Parses "0.3", ".5", "1", "3/10" into an exact rational.
// Throws ParseError on malformed text.
Rational parse_rational(const std::string& text);

// "p/q" with q > 0, or just "p" when q == 1.
std::string to_fraction_string(const Rational& value);

// Decimal rendering rounded to `digits` fractional digits (half away from
// zero), with trailing zeros trimmed.
std::string to_decimal_string(const Rational& value, int digits);

// Exact conversion helpers for scoring and sampling.
double to_double(const Rational& value);

} // namespace wasp

#endif
