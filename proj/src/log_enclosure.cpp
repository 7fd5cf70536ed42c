#include <univoq/log_enclosure.hpp>

#include <map>
#include <mutex>
#include <stdexcept>

namespace univoq {

namespace {

// 2*atanh(t) = ln((1+t)/(1-t)) for |t| < 1, with a certified tail bound.
// Adds terms until they drop below the target, then bounds the remainder by
// a geometric series.
Enclosure two_atanh(const Rational& t, unsigned prec_bits) {
    Rational target = make_rational(1, 1);
    target /= Rational(Int(1) << (prec_bits + 4));
    Rational t2 = t * t;
    if (t2 >= 1) throw std::domain_error("two_atanh: |t| >= 1");
    Rational sum(0);
    Rational power = t;  // t^(2k+1)
    unsigned long k = 0;
    for (;;) {
        sum += power / Rational(static_cast<long>(2 * k + 1));
        power *= t2;
        Rational term_bound = abs_rational(power);
        if (term_bound < target) break;
        ++k;
        if (k > 100000) throw std::runtime_error("two_atanh: series did not converge");
    }
    // Remaining tail: sum_{j>=k+1} t^(2j+1)/(2j+1); same sign as t, absolute
    // value at most |t|^(2k+3) / (1 - t^2).
    Rational tail_mag = abs_rational(power) / (Rational(1) - t2);
    Rational lo = 2 * sum, hi = 2 * sum;
    if (t >= 0)
        hi += 2 * tail_mag;
    else
        lo -= 2 * tail_mag;
    return Enclosure(dyadic_floor(lo, prec_bits), dyadic_ceil(hi, prec_bits));
}

Enclosure log2_enclosure(unsigned prec_bits) {
    static std::mutex mu;
    static std::map<unsigned, Enclosure> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(prec_bits);
    if (it != cache.end()) return it->second;
    Enclosure e = two_atanh(make_rational(1, 3), prec_bits);  // ln 2 = 2 atanh(1/3)
    cache.emplace(prec_bits, e);
    return e;
}

}  // namespace

Enclosure log_enclosure(const Rational& x, unsigned prec_bits) {
    if (x <= 0) throw std::domain_error("log of non-positive value");
    // scale x by 2^e into [3/4, 3/2)
    Rational m = x;
    long e = 0;
    while (m >= make_rational(3, 2)) {
        m /= 2;
        ++e;
    }
    while (m < make_rational(3, 4)) {
        m *= 2;
        --e;
    }
    // ln m = 2 atanh((m-1)/(m+1)), |t| <= 1/5
    Enclosure lm = two_atanh((m - 1) / (m + 1), prec_bits + 2);
    if (e == 0) return lm;
    Enclosure l2 = log2_enclosure(prec_bits + 2);
    Rational lo, hi;
    if (e > 0) {
        lo = lm.lo + e * l2.lo;
        hi = lm.hi + e * l2.hi;
    } else {
        lo = lm.lo + e * l2.hi;
        hi = lm.hi + e * l2.lo;
    }
    return Enclosure(dyadic_floor(lo, prec_bits), dyadic_ceil(hi, prec_bits));
}

Enclosure log_enclosure(const Enclosure& x, unsigned prec_bits) {
    Enclosure a = log_enclosure(x.lo, prec_bits);
    Enclosure b = log_enclosure(x.hi, prec_bits);
    return Enclosure(a.lo, b.hi);
}

Enclosure enc_add(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo + b.lo, a.hi + b.hi);
}

Enclosure enc_sub(const Enclosure& a, const Enclosure& b) {
    return Enclosure(a.lo - b.hi, a.hi - b.lo);
}

Enclosure enc_neg(const Enclosure& a) { return Enclosure(-a.hi, -a.lo); }

Enclosure enc_mul(const Enclosure& a, const Enclosure& b) {
    Rational c[4] = {a.lo * b.lo, a.lo * b.hi, a.hi * b.lo, a.hi * b.hi};
    Rational lo = c[0], hi = c[0];
    for (int i = 1; i < 4; ++i) {
        if (c[i] < lo) lo = c[i];
        if (c[i] > hi) hi = c[i];
    }
    return Enclosure(lo, hi);
}

Enclosure enc_div(const Enclosure& a, const Enclosure& b) {
    if (b.lo <= 0 && b.hi >= 0) throw std::domain_error("enclosure division through zero");
    Enclosure inv(Rational(1) / b.hi, Rational(1) / b.lo);
    return enc_mul(a, inv);
}

Enclosure enc_intersect(const Enclosure& a, const Enclosure& b) {
    Rational lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo > hi) throw std::domain_error("empty enclosure intersection");
    return Enclosure(lo, hi);
}

Enclosure enc_round(const Enclosure& a, unsigned prec_bits) {
    return Enclosure(dyadic_floor(a.lo, prec_bits), dyadic_ceil(a.hi, prec_bits));
}

}  // namespace univoq
