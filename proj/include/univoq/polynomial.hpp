#pragma once

#include <univoq/rational.hpp>

#include <string>
#include <vector>

namespace univoq {

// Univariate polynomial with arbitrary-precision integer coefficients,
// stored lowest degree first. The zero polynomial has no coefficients;
// otherwise the leading coefficient is nonzero.
class IntPolynomial {
public:
    IntPolynomial() = default;
    explicit IntPolynomial(std::vector<Int> coeffs);
    static IntPolynomial constant(const Int& c);
    // x - r for rational r, scaled to integer coefficients: den*x - num.
    static IntPolynomial linear_root(const Rational& r);
    static IntPolynomial power(unsigned n);  // x^n

    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const Int& coeff(size_t i) const { return coeffs_[i]; }
    const std::vector<Int>& coeffs() const { return coeffs_; }
    const Int& leading() const { return coeffs_.back(); }

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const;
    IntPolynomial derivative() const;
    IntPolynomial primitive_part() const;  // content removed, leading coeff > 0

    IntPolynomial operator-() const;
    IntPolynomial operator+(const IntPolynomial& o) const;
    IntPolynomial operator-(const IntPolynomial& o) const;
    IntPolynomial operator*(const IntPolynomial& o) const;
    IntPolynomial operator*(const Int& c) const;
    bool operator==(const IntPolynomial& o) const { return coeffs_ == o.coeffs_; }

    // Exact division by a known rational root r: self = (den*x - num) * quotient.
    IntPolynomial divide_out_root(const Rational& r) const;

    std::string to_string() const;

private:
    void normalize();
    std::vector<Int> coeffs_;
};

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b);
IntPolynomial squarefree_part(const IntPolynomial& p);

// Sturm chain of p; count_roots_open counts distinct real roots in (a, b),
// requiring p(a) != 0 and p(b) != 0.
class SturmChain {
public:
    explicit SturmChain(const IntPolynomial& p);
    int variations_at(const Rational& x) const;
    int count_roots_open(const Rational& a, const Rational& b) const;

private:
    std::vector<IntPolynomial> chain_;
};

}  // namespace univoq
