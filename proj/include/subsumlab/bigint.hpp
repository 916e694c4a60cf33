#pragma once

#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace subsumlab {

// All counts are exact unbounded integers: p(n) leaves 64-bit range near
// n ~ 400 and the CLI must never silently saturate.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Natural log of a positive BigInt, accurate to ~1 ulp of double even for
// values far beyond double range (top 64 bits + power-of-two shift).
double log_big(const BigInt& x);

// Exact conversions into Rational. Decimal accepts forms like "2", "0.5",
// "-1.25e-3"; every finite double is a dyadic rational, so that conversion
// is exact too.
Rational rational_from_decimal(std::string_view text);
Rational rational_from_double(double x);

double rational_to_double(const Rational& r);

}  // namespace subsumlab
