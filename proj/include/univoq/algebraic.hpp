#pragma once

#include <univoq/polynomial.hpp>

#include <optional>
#include <string>
#include <vector>

namespace univoq {

// Certified rational bounds, lo <= hi.
struct Enclosure {
    Rational lo;
    Rational hi;

    Enclosure() : lo(0), hi(0) {}
    Enclosure(Rational l, Rational h);
    Rational width() const { return hi - lo; }
    Rational midpoint() const { return (lo + hi) / 2; }
    bool contains(const Rational& x) const { return lo <= x && x <= hi; }
    bool contains(const Enclosure& e) const { return lo <= e.lo && e.hi <= hi; }
};

// A real algebraic number: squarefree primitive integer polynomial plus an
// isolating interval. Rational values are the degenerate case lo == hi with
// a linear polynomial. For irrational roots the interval endpoints are never
// roots and the polynomial changes sign across the interval.
class AlgebraicNumber {
public:
    static AlgebraicNumber from_rational(const Rational& r);
    // Validates that p has exactly one real root in [lo, hi].
    static AlgebraicNumber from_poly_interval(const IntPolynomial& p, const Rational& lo,
                                              const Rational& hi);

    const IntPolynomial& defining() const { return poly_; }
    const Rational& lo() const { return lo_; }
    const Rational& hi() const { return hi_; }
    Enclosure enclosure() const { return {lo_, hi_}; }
    bool is_rational() const { return lo_ == hi_; }
    Rational rational_value() const { return lo_; }
    Rational interval_width() const { return hi_ - lo_; }

    // Halves the isolating interval once (no-op when rational).
    void bisect_once();

    double approx() const;
    std::string to_string() const;

private:
    AlgebraicNumber(IntPolynomial p, Rational lo, Rational hi)
        : poly_(std::move(p)), lo_(std::move(lo)), hi_(std::move(hi)) {}
    friend std::vector<AlgebraicNumber> isolate_roots(const IntPolynomial&, const Rational&,
                                                      const Rational&);
    IntPolynomial poly_;
    Rational lo_, hi_;
};

// All distinct real roots of p in the closed range [lo, hi], ascending.
std::vector<AlgebraicNumber> isolate_roots(const IntPolynomial& p, const Rational& lo,
                                           const Rational& hi);

// Exact sign of p at q. Zero iff the root of q is also a root of p (decided
// through gcd); otherwise the isolating interval is refined until interval
// evaluation excludes zero.
int sign_at(const IntPolynomial& p, const AlgebraicNumber& q);

// Same root, isolating interval width <= width.
AlgebraicNumber refine(const AlgebraicNumber& q, const Rational& width);

// Exact order; equality decided through polynomial gcd.
int compare(const AlgebraicNumber& a, const AlgebraicNumber& b);
int compare(const AlgebraicNumber& a, const Rational& b);

// Base argument syntax: decimal literal, "p/q", "golden", "tribonacci",
// or "poly:[c0,c1,...];interval:[lo,hi]".
AlgebraicNumber parse_base(const std::string& text);

AlgebraicNumber golden_ratio();
AlgebraicNumber tribonacci_constant();

}  // namespace univoq
