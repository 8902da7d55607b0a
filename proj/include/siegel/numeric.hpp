#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <numeric>
#include <string>
#include <vector>

namespace siegel {

using Int = long long;
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }

inline BigInt factorial(Int n) {
    BigInt r = 1;
    for (Int i = 2; i <= n; ++i) r *= i;
    return r;
}

// Falling-factorial binomial: defined for any integer a and b >= 0, zero for b < 0.
inline BigInt binomial(const BigInt& a, Int b) {
    if (b < 0) return 0;
    BigInt num = 1;
    for (Int i = 0; i < b; ++i) num *= (a - i);
    return num / factorial(b);
}

inline bool is_prime(Int p) {
    if (p < 2) return false;
    for (Int d = 2; d * d <= p; ++d)
        if (p % d == 0) return false;
    return true;
}

// Residue in [0, m) for m > 0.
inline Int mod_reduce(Int a, Int m) {
    Int r = a % m;
    if (r < 0) r += m;
    return r;
}

inline Int mod_reduce(const BigInt& a, Int m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return static_cast<Int>(r);
}

inline Int mulmod(Int a, Int b, Int m) {
    return static_cast<Int>((static_cast<__int128>(a) * b) % m);
}

inline Int powmod(Int a, Int e, Int m) {
    a = mod_reduce(a, m);
    Int r = 1;
    while (e > 0) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

inline BigInt pow_bigint(const BigInt& a, Int e) {
    BigInt r = 1, b = a;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// 1/q; the (num, den) constructor wants a positive denominator.
inline Rational rational_inverse(const Rational& q) {
    BigInt num = numerator(q), den = denominator(q);
    if (num < 0) return Rational(-den, -num);
    return Rational(den, num);
}

inline Rational pow_rational(const Rational& a, Int e) {
    if (e < 0) return pow_rational(rational_inverse(a), -e);
    Rational r = 1, b = a;
    while (e > 0) {
        if (e & 1) r *= b;
        b *= b;
        e >>= 1;
    }
    return r;
}

// ell-adic valuation; a must be nonzero.
inline Int valuation(BigInt a, Int ell) {
    Int v = 0;
    while (a % ell == 0) {
        a /= ell;
        ++v;
    }
    return v;
}

inline bool denominator_coprime_to(const Rational& q, Int p) {
    return denominator(q) % p != 0;
}

}  // namespace siegel
