#include "subsumlab/bigint.hpp"

#include <cctype>
#include <cmath>
#include <stdexcept>

namespace subsumlab {

double log_big(const BigInt& x) {
    if (x <= 0) {
        throw std::domain_error("log_big: argument must be positive");
    }
    const unsigned bits = boost::multiprecision::msb(x);  // highest set bit index
    if (bits < 900) {
        return std::log(x.convert_to<double>());
    }
    // ln(x) = ln(x >> s) + s*ln(2), keeping 64 significant bits.
    const unsigned shift = bits - 63;
    const double top = BigInt(x >> shift).convert_to<double>();
    return std::log(top) + static_cast<double>(shift) * std::log(2.0);
}

Rational rational_from_decimal(std::string_view text) {
    auto fail = [&] {
        throw std::invalid_argument("not a decimal number: '" + std::string(text) + "'");
    };
    std::size_t i = 0;
    bool negative = false;
    if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
        negative = text[i] == '-';
        ++i;
    }
    BigInt digits = 0;
    long long frac_digits = 0;
    bool any_digit = false;
    bool seen_dot = false;
    for (; i < text.size(); ++i) {
        const char c = text[i];
        if (c == '.') {
            if (seen_dot) fail();
            seen_dot = true;
        } else if (std::isdigit(static_cast<unsigned char>(c))) {
            digits = digits * 10 + (c - '0');
            if (seen_dot) ++frac_digits;
            any_digit = true;
        } else {
            break;
        }
    }
    if (!any_digit) fail();
    long long exponent = 0;
    if (i < text.size() && (text[i] == 'e' || text[i] == 'E')) {
        ++i;
        bool exp_neg = false;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) {
            exp_neg = text[i] == '-';
            ++i;
        }
        if (i == text.size()) fail();
        long long e = 0;
        for (; i < text.size(); ++i) {
            if (!std::isdigit(static_cast<unsigned char>(text[i]))) break;
            e = e * 10 + (text[i] - '0');
            if (e > 100000) fail();
        }
        exponent = exp_neg ? -e : e;
    }
    if (i != text.size()) fail();

    const long long net = exponent - frac_digits;
    BigInt num = negative ? BigInt(-digits) : digits;
    BigInt den = 1;
    if (net >= 0) {
        num *= boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(net));
    } else {
        den = boost::multiprecision::pow(BigInt(10), static_cast<unsigned>(-net));
    }
    return Rational(num, den);
}

Rational rational_from_double(double x) {
    if (!std::isfinite(x)) {
        throw std::invalid_argument("rational_from_double: non-finite value");
    }
    int exp = 0;
    double mant = std::frexp(x, &exp);  // x = mant * 2^exp, |mant| in [0.5, 1)
    // 53 doublings make the mantissa an integer exactly.
    const auto scaled = static_cast<long long>(std::ldexp(mant, 53));
    exp -= 53;
    BigInt num = scaled;
    BigInt den = 1;
    if (exp >= 0) {
        num <<= exp;
    } else {
        den <<= -exp;
    }
    return Rational(num, den);
}

double rational_to_double(const Rational& r) {
    return r.convert_to<double>();
}

}  // namespace subsumlab
