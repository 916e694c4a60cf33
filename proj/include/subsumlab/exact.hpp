#pragma once

#include "subsumlab/bigint.hpp"

namespace subsumlab {

// Integer square root: largest s with s*s <= x.  Requires x >= 0.
BigInt isqrt(const BigInt& x);

// True iff x is a perfect square.
bool is_perfect_square(const BigInt& x);

// floor(r * sqrt(m)) computed exactly for rational r >= 0 and integer m >= 0.
// With r = p/q this is floor(isqrt(p^2 * m) / q): no floating point anywhere,
// so window endpoints never drift when p*sqrt(m) sits next to an integer.
BigInt floor_scaled_sqrt(const Rational& r, const BigInt& m);

// ceil(r * sqrt(m)), exact.  Equals the floor unless r^2 * m is a perfect
// square times q^2 structure making r*sqrt(m) an exact integer.
BigInt ceil_scaled_sqrt(const Rational& r, const BigInt& m);

// Sign of a + b*sqrt(m) for rationals a, b and integer m >= 0.
// Returns -1, 0, or +1.  Decided by sign inspection and one squaring,
// so the comparison is exact even when the two terms nearly cancel.
int compare_with_sqrt(const Rational& a, const Rational& b, const BigInt& m);

}  // namespace subsumlab
