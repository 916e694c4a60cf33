#include "subsumlab/exact.hpp"

#include <stdexcept>

namespace subsumlab {

BigInt isqrt(const BigInt& x) {
    if (x < 0) {
        throw std::domain_error("isqrt: negative argument");
    }
    return boost::multiprecision::sqrt(x);
}

bool is_perfect_square(const BigInt& x) {
    if (x < 0) return false;
    const BigInt s = boost::multiprecision::sqrt(x);
    return s * s == x;
}

BigInt floor_scaled_sqrt(const Rational& r, const BigInt& m) {
    if (r < 0 || m < 0) {
        throw std::domain_error("floor_scaled_sqrt: needs r >= 0 and m >= 0");
    }
    const BigInt p = boost::multiprecision::numerator(r);
    const BigInt q = boost::multiprecision::denominator(r);
    // floor((p/q) * sqrt(m)) = floor(sqrt(p^2 m) / q) = floor(isqrt(p^2 m) / q):
    // the inner floor cannot push the quotient across an integer boundary
    // because sqrt(p^2 m) is either an integer or irrational.
    return isqrt(p * p * m) / q;
}

BigInt ceil_scaled_sqrt(const Rational& r, const BigInt& m) {
    if (r < 0 || m < 0) {
        throw std::domain_error("ceil_scaled_sqrt: needs r >= 0 and m >= 0");
    }
    const BigInt p = boost::multiprecision::numerator(r);
    const BigInt q = boost::multiprecision::denominator(r);
    const BigInt t = p * p * m;
    const BigInt s = isqrt(t);
    if (s * s == t && s % q == 0) {
        return s / q;  // r * sqrt(m) is an exact integer
    }
    return s / q + 1;
}

int compare_with_sqrt(const Rational& a, const Rational& b, const BigInt& m) {
    if (m < 0) {
        throw std::domain_error("compare_with_sqrt: m must be >= 0");
    }
    const Rational bsq_m = b * b * Rational(m);
    const int sa = a.sign();
    // Effective sign of the radical term (b = 0 or m = 0 kills it).
    const int sb = (b * b * Rational(m)).sign() == 0 ? 0 : b.sign();
    if (sb == 0) return sa;
    if (sa == 0) return sb;
    if (sa == sb) return sa;
    // Opposite signs: compare a^2 against b^2 m; the larger magnitude wins.
    const Rational asq = a * a;
    if (asq == bsq_m) return 0;
    return (asq > bsq_m) == (sa > 0) ? 1 : -1;
}

}  // namespace subsumlab
