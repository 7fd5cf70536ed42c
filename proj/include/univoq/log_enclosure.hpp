#pragma once

#include <univoq/algebraic.hpp>

namespace univoq {

// Certified natural logarithm of a positive rational; the result contains
// ln(x) and has width about 2^(1-prec_bits). Pure rational arithmetic
// (atanh series after scaling x into [3/4, 3/2) by powers of two).
Enclosure log_enclosure(const Rational& x, unsigned prec_bits = 80);

// ln over an enclosure of positives, outward rounded.
Enclosure log_enclosure(const Enclosure& x, unsigned prec_bits = 80);

// Outward interval arithmetic on enclosures.
Enclosure enc_add(const Enclosure& a, const Enclosure& b);
Enclosure enc_sub(const Enclosure& a, const Enclosure& b);
Enclosure enc_neg(const Enclosure& a);
Enclosure enc_mul(const Enclosure& a, const Enclosure& b);
// Requires 0 outside of b.
Enclosure enc_div(const Enclosure& a, const Enclosure& b);
Enclosure enc_intersect(const Enclosure& a, const Enclosure& b);
// Round endpoints outward onto the 2^-prec_bits grid.
Enclosure enc_round(const Enclosure& a, unsigned prec_bits);

}  // namespace univoq
