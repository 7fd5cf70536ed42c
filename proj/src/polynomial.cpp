#include <univoq/polynomial.hpp>

#include <sstream>
#include <stdexcept>

namespace univoq {

namespace {

Int parse_int10(const std::string& s) {
    Int v;
    if (s.empty() || mpz_set_str(v.get_mpz_t(), s.c_str(), 10) != 0)
        throw std::invalid_argument("bad integer literal: " + s);
    return v;
}

}  // namespace

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos)
        return make_rational(parse_int10(text.substr(0, slash)),
                             parse_int10(text.substr(slash + 1)));
    auto epos = text.find_first_of("eE");
    if (epos != std::string::npos) {
        Rational mantissa = parse_rational(text.substr(0, epos));
        Int expo = parse_int10(text.substr(epos + 1));
        if (!expo.fits_slong_p() || abs(expo) > 16384)
            throw std::invalid_argument("exponent out of range: " + text);
        long e = expo.get_si();
        Int scale = pow_int(Int(10), static_cast<unsigned long>(e < 0 ? -e : e));
        return e < 0 ? Rational(mantissa / Rational(scale)) : Rational(mantissa * Rational(scale));
    }
    auto dot = text.find('.');
    if (dot == std::string::npos) return Rational(parse_int10(text));
    std::string digits = text.substr(0, dot) + text.substr(dot + 1);
    size_t frac_len = text.size() - dot - 1;
    if (digits.empty() || digits == "-" || digits == "+")
        throw std::invalid_argument("bad rational literal: " + text);
    return make_rational(parse_int10(digits), pow_int(Int(10), frac_len));
}

std::string decimal_string(const Rational& x, unsigned digits) {
    bool neg = x < 0;
    Rational a = abs_rational(x);
    Int scale = pow_int(Int(10), digits);
    // round to nearest, ties away from zero
    Rational scaled = a * Rational(scale);
    Int rounded = floor_int(scaled + make_rational(1, 2));
    Int whole = rounded / scale;
    Int frac = rounded % scale;
    std::ostringstream os;
    if (neg && (whole != 0 || frac != 0)) os << '-';
    os << whole.get_str();
    if (frac != 0) {
        std::string f = frac.get_str();
        f.insert(f.begin(), digits - f.size(), '0');
        while (!f.empty() && f.back() == '0') f.pop_back();
        os << '.' << f;
    }
    return os.str();
}

IntPolynomial::IntPolynomial(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) {
    normalize();
}

void IntPolynomial::normalize() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::constant(const Int& c) {
    return IntPolynomial(std::vector<Int>{c});
}

IntPolynomial IntPolynomial::linear_root(const Rational& r) {
    return IntPolynomial({-r.get_num(), r.get_den()});
}

IntPolynomial IntPolynomial::power(unsigned n) {
    std::vector<Int> c(n + 1, Int(0));
    c[n] = 1;
    return IntPolynomial(std::move(c));
}

Rational IntPolynomial::eval(const Rational& x) const {
    // Horner over exact rationals
    Rational acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * x + Rational(*it);
    return acc;
}

int IntPolynomial::sign_at(const Rational& x) const {
    return sgn(eval(x));
}

IntPolynomial IntPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return IntPolynomial();
    std::vector<Int> c(coeffs_.size() - 1);
    for (size_t i = 1; i < coeffs_.size(); ++i) c[i - 1] = coeffs_[i] * Int(static_cast<long>(i));
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::primitive_part() const {
    if (is_zero()) return *this;
    Int g(0);
    for (const auto& c : coeffs_) {
        Int a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) break;
    }
    if (leading() < 0) g = -g;
    if (g == 1) return *this;
    std::vector<Int> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] / g;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-() const {
    std::vector<Int> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = -coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
    std::vector<Int> c(std::max(coeffs_.size(), o.coeffs_.size()), Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] += coeffs_[i];
    for (size_t i = 0; i < o.coeffs_.size(); ++i) c[i] += o.coeffs_[i];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const {
    return *this + (-o);
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
    if (is_zero() || o.is_zero()) return IntPolynomial();
    std::vector<Int> c(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
    for (size_t i = 0; i < coeffs_.size(); ++i)
        for (size_t j = 0; j < o.coeffs_.size(); ++j) c[i + j] += coeffs_[i] * o.coeffs_[j];
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::operator*(const Int& k) const {
    std::vector<Int> c(coeffs_.size());
    for (size_t i = 0; i < coeffs_.size(); ++i) c[i] = coeffs_[i] * k;
    return IntPolynomial(std::move(c));
}

IntPolynomial IntPolynomial::divide_out_root(const Rational& r) const {
    // Synthetic division by (den*x - num); remainder must vanish.
    const Int& num = r.get_num();
    const Int& den = r.get_den();
    if (is_zero()) throw std::logic_error("divide_out_root on zero polynomial");
    int n = degree();
    std::vector<Rational> q(n, Rational(0));
    Rational carry(0);
    for (int i = n; i >= 1; --i) {
        Rational top = Rational(coeffs_[i]) + carry;
        q[i - 1] = top / Rational(den);
        carry = q[i - 1] * Rational(num);
    }
    if (Rational(coeffs_[0]) + carry != 0)
        throw std::logic_error("divide_out_root: r is not a root");
    // clear denominators, then strip content
    Int lcm(1);
    for (auto& qi : q) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), qi.get_den_mpz_t());
    std::vector<Int> c(q.size());
    for (size_t i = 0; i < q.size(); ++i) {
        Rational scaled = q[i] * Rational(lcm);
        c[i] = scaled.get_num();
    }
    return IntPolynomial(std::move(c)).primitive_part();
}

std::string IntPolynomial::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& c = coeffs_[i];
        if (c == 0) continue;
        if (!first) os << (c > 0 ? " + " : " - ");
        else if (c < 0) os << "-";
        Int a = abs(c);
        if (a != 1 || i == 0) os << a.get_str();
        if (i >= 1) {
            os << "x";
            if (i > 1) os << "^" << i;
        }
        first = false;
    }
    return os.str();
}

namespace {

// Strips the (positive) content; unlike primitive_part this never flips the
// sign, which Sturm chains depend on.
IntPolynomial divide_positive_content(const IntPolynomial& p) {
    if (p.is_zero()) return p;
    Int g(0);
    for (const auto& c : p.coeffs()) {
        Int a = abs(c);
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), a.get_mpz_t());
        if (g == 1) return p;
    }
    std::vector<Int> c(p.coeffs().size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = p.coeff(i) / g;
    return IntPolynomial(std::move(c));
}

// Polynomial remainder over Q, scaled by a positive rational into a
// content-free integer polynomial (sign preserved).
IntPolynomial rational_rem(const IntPolynomial& a, const IntPolynomial& b) {
    std::vector<Rational> r(a.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = Rational(a.coeff(i));
    int db = b.degree();
    Rational blead{b.leading()};
    int dr = a.degree();
    auto deg = [&](const std::vector<Rational>& v) {
        int d = static_cast<int>(v.size()) - 1;
        while (d >= 0 && v[d] == 0) --d;
        return d;
    };
    dr = deg(r);
    while (dr >= db) {
        Rational f = r[dr] / blead;
        for (int i = 0; i <= db; ++i) r[dr - db + i] -= f * Rational(b.coeff(i));
        r[dr] = 0;
        dr = deg(r);
    }
    if (dr < 0) return IntPolynomial();
    Int lcm(1);
    for (int i = 0; i <= dr; ++i) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), r[i].get_den_mpz_t());
    std::vector<Int> c(dr + 1);
    for (int i = 0; i <= dr; ++i) c[i] = Rational(r[i] * Rational(lcm)).get_num();
    return divide_positive_content(IntPolynomial(std::move(c)));
}

}  // namespace

IntPolynomial gcd(const IntPolynomial& a, const IntPolynomial& b) {
    IntPolynomial x = a.primitive_part(), y = b.primitive_part();
    while (!y.is_zero()) {
        IntPolynomial r = rational_rem(x, y);
        x = y;
        y = r;
    }
    return x.primitive_part();
}

IntPolynomial squarefree_part(const IntPolynomial& p) {
    if (p.is_zero() || p.degree() == 0) return p;
    IntPolynomial g = gcd(p, p.derivative());
    if (g.degree() == 0) return p.primitive_part();
    // divide p by g over Q
    IntPolynomial q = p, result;
    // long division p / g, exact up to content
    std::vector<Rational> r(p.coeffs().size());
    for (size_t i = 0; i < r.size(); ++i) r[i] = Rational(p.coeff(i));
    int dg = g.degree();
    Rational glead{g.leading()};
    std::vector<Rational> quo(p.degree() - dg + 1, Rational(0));
    auto deg = [&](const std::vector<Rational>& v) {
        int d = static_cast<int>(v.size()) - 1;
        while (d >= 0 && v[d] == 0) --d;
        return d;
    };
    int dr = deg(r);
    while (dr >= dg) {
        Rational f = r[dr] / glead;
        quo[dr - dg] = f;
        for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= f * Rational(g.coeff(i));
        r[dr] = 0;
        dr = deg(r);
    }
    Int lcm(1);
    for (auto& c : quo) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> c(quo.size());
    for (size_t i = 0; i < quo.size(); ++i) c[i] = Rational(quo[i] * Rational(lcm)).get_num();
    return IntPolynomial(std::move(c)).primitive_part();
}

SturmChain::SturmChain(const IntPolynomial& p) {
    chain_.push_back(p.primitive_part());
    if (p.degree() >= 1) {
        chain_.push_back(divide_positive_content(chain_[0].derivative()));
        while (!chain_.back().is_zero() && chain_.back().degree() >= 1) {
            IntPolynomial r = rational_rem(chain_[chain_.size() - 2], chain_.back());
            if (r.is_zero()) break;
            chain_.push_back(-r);
        }
    }
}

int SturmChain::variations_at(const Rational& x) const {
    int var = 0, prev = 0;
    for (const auto& p : chain_) {
        int s = p.sign_at(x);
        if (s != 0) {
            if (prev != 0 && s != prev) ++var;
            prev = s;
        }
    }
    return var;
}

int SturmChain::count_roots_open(const Rational& a, const Rational& b) const {
    // Sturm's theorem counts distinct roots in (a, b] when p(a), p(b) != 0;
    // callers guarantee the endpoints are not roots, so (a, b] = (a, b).
    return variations_at(a) - variations_at(b);
}

}  // namespace univoq
