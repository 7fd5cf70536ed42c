#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace univoq {

using Int = mpz_class;

// Exact rational numbers. mpq_class keeps denominator > 0 and
// gcd(num, den) = 1 once canonicalize() has run; every constructor
// below canonicalizes, raw mpq_class(n, d) does not.
using Rational = mpq_class;

inline Rational make_rational(const Int& num, const Int& den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Int(num), Int(den));
}

inline Int floor_int(const Rational& x) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline Int ceil_int(const Rational& x) {
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), x.get_num_mpz_t(), x.get_den_mpz_t());
    return q;
}

inline Rational abs_rational(const Rational& x) { return x < 0 ? Rational(-x) : x; }

inline Rational pow_rational(const Rational& x, unsigned long e) {
    Rational r;
    mpz_pow_ui(r.get_num_mpz_t(), x.get_num_mpz_t(), e);
    mpz_pow_ui(r.get_den_mpz_t(), x.get_den_mpz_t(), e);
    return r;  // num/den coprime => powers coprime
}

inline Int pow_int(const Int& x, unsigned long e) {
    Int r;
    mpz_pow_ui(r.get_mpz_t(), x.get_mpz_t(), e);
    return r;
}

// Largest multiple of 2^-prec_bits that is <= x.
inline Rational dyadic_floor(const Rational& x, unsigned prec_bits) {
    Int scaled_num = x.get_num() << prec_bits;
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
    Rational r(q, Int(1) << prec_bits);
    r.canonicalize();
    return r;
}

inline Rational dyadic_ceil(const Rational& x, unsigned prec_bits) {
    Int scaled_num = x.get_num() << prec_bits;
    Int q;
    mpz_cdiv_q(q.get_mpz_t(), scaled_num.get_mpz_t(), x.get_den_mpz_t());
    Rational r(q, Int(1) << prec_bits);
    r.canonicalize();
    return r;
}

// Parse "3", "-7/4" or a decimal literal like "1.803" into an exact rational.
Rational parse_rational(const std::string& text);

// Exact decimal rendering, round-to-nearest at `digits` fractional digits,
// trailing zeros trimmed (so 1/2 prints as "0.5", 1/3 as "0.333333").
std::string decimal_string(const Rational& x, unsigned digits = 12);

}  // namespace univoq
