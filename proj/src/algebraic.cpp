#include <univoq/algebraic.hpp>

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace univoq {

Enclosure::Enclosure(Rational l, Rational h) : lo(std::move(l)), hi(std::move(h)) {
    if (lo > hi) throw std::invalid_argument("enclosure with lo > hi");
}

AlgebraicNumber AlgebraicNumber::from_rational(const Rational& r) {
    return AlgebraicNumber(IntPolynomial::linear_root(r), r, r);
}

AlgebraicNumber AlgebraicNumber::from_poly_interval(const IntPolynomial& p, const Rational& lo,
                                                    const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial");
    if (lo > hi) throw std::invalid_argument("empty interval");
    auto roots = isolate_roots(p, lo, hi);
    if (roots.size() != 1)
        throw std::invalid_argument("interval must isolate exactly one root, found " +
                                    std::to_string(roots.size()));
    return roots.front();
}

void AlgebraicNumber::bisect_once() {
    if (is_rational()) return;
    Rational mid = (lo_ + hi_) / 2;
    int sm = poly_.sign_at(mid);
    if (sm == 0) {
        lo_ = hi_ = mid;
        poly_ = IntPolynomial::linear_root(mid);
        return;
    }
    if (sm == poly_.sign_at(lo_))
        lo_ = mid;
    else
        hi_ = mid;
}

double AlgebraicNumber::approx() const {
    AlgebraicNumber t = refine(*this, make_rational(1, 1000000000L));
    return t.lo_.get_d();
}

std::string AlgebraicNumber::to_string() const {
    std::ostringstream os;
    if (is_rational()) {
        os << lo_.get_str();
    } else {
        os << "root of " << poly_.to_string() << " in [" << lo_.get_str() << ", " << hi_.get_str()
           << "]";
    }
    return os.str();
}

namespace {

struct Isolated {
    IntPolynomial poly;
    Rational lo, hi;
};

// Roots of squarefree f strictly inside (a, b); f(a) != 0 and f(b) != 0.
void isolate_rec(const IntPolynomial& f, const SturmChain& chain, const Rational& a,
                 const Rational& b, std::vector<Isolated>& out) {
    int count = chain.count_roots_open(a, b);
    if (count == 0) return;
    if (count == 1) {
        // single simple root inside (a, b): the sign change is strict
        out.push_back({f, a, b});
        return;
    }
    Rational mid = (a + b) / 2;
    if (f.sign_at(mid) == 0) {
        // Rational root at the midpoint; factor it out so recursion keeps
        // non-root endpoints.
        out.push_back({IntPolynomial::linear_root(mid), mid, mid});
        IntPolynomial g = f.divide_out_root(mid);
        SturmChain gchain(g);
        isolate_rec(g, gchain, a, mid, out);
        isolate_rec(g, gchain, mid, b, out);
        return;
    }
    isolate_rec(f, chain, a, mid, out);
    isolate_rec(f, chain, mid, b, out);
}

struct RootLess {
    bool operator()(const AlgebraicNumber& x, const AlgebraicNumber& y) const {
        return compare(x, y) < 0;
    }
};

}  // namespace

std::vector<AlgebraicNumber> isolate_roots(const IntPolynomial& p, const Rational& lo,
                                           const Rational& hi) {
    if (p.is_zero()) throw std::invalid_argument("isolate_roots: zero polynomial");
    std::vector<AlgebraicNumber> out;
    if (lo > hi) return out;
    IntPolynomial f = squarefree_part(p);
    if (f.degree() == 0) return out;
    std::vector<Isolated> found;
    Rational a = lo, b = hi;
    if (f.sign_at(a) == 0) {
        found.push_back({IntPolynomial::linear_root(a), a, a});
        f = f.divide_out_root(a);
    }
    if (b > a && f.degree() >= 1 && f.sign_at(b) == 0) {
        found.push_back({IntPolynomial::linear_root(b), b, b});
        f = f.divide_out_root(b);
    }
    if (b > a && f.degree() >= 1) {
        SturmChain chain(f);
        isolate_rec(f, chain, a, b, found);
    }
    out.reserve(found.size());
    for (auto& r : found) {
        if (r.poly.degree() == 1 && r.lo != r.hi) {
            // linear factor: the root is an exact rational
            Rational root = make_rational(-r.poly.coeff(0), r.poly.coeff(1));
            out.push_back(AlgebraicNumber(IntPolynomial::linear_root(root), root, root));
        } else {
            out.push_back(AlgebraicNumber(std::move(r.poly), std::move(r.lo), std::move(r.hi)));
        }
    }
    std::sort(out.begin(), out.end(), RootLess{});
    return out;
}

// The recursion below circumvents from_poly_interval's validation cost.
namespace {
bool poly_changes_sign(const IntPolynomial& g, const AlgebraicNumber& q) {
    return g.sign_at(q.lo()) * g.sign_at(q.hi()) < 0;
}
}  // namespace

int sign_at(const IntPolynomial& p, const AlgebraicNumber& q) {
    if (p.is_zero()) return 0;
    if (q.is_rational()) return p.sign_at(q.rational_value());
    IntPolynomial g = gcd(p, q.defining());
    // g's real roots are exactly the common roots; q's interval endpoints are
    // not roots of q.defining, hence not roots of g.
    if (g.degree() >= 1 && poly_changes_sign(g, q)) return 0;
    AlgebraicNumber t = q;
    SturmChain pchain(p);
    for (;;) {
        int slo = p.sign_at(t.lo());
        int shi = p.sign_at(t.hi());
        if (slo != 0 && slo == shi && pchain.count_roots_open(t.lo(), t.hi()) == 0) return slo;
        t.bisect_once();
        if (t.is_rational()) return p.sign_at(t.rational_value());
    }
}

AlgebraicNumber refine(const AlgebraicNumber& q, const Rational& width) {
    if (width <= 0) throw std::invalid_argument("refine: width must be positive");
    AlgebraicNumber t = q;
    while (!t.is_rational() && t.interval_width() > width) t.bisect_once();
    return t;
}

int compare(const AlgebraicNumber& a, const AlgebraicNumber& b) {
    AlgebraicNumber x = a, y = b;
    IntPolynomial g = gcd(x.defining(), y.defining());
    bool maybe_equal = g.degree() >= 1;
    for (;;) {
        if (x.hi() < y.lo()) return -1;
        if (y.hi() < x.lo()) return 1;
        if (x.is_rational() && y.is_rational())
            return x.rational_value() < y.rational_value() ? -1
                 : x.rational_value() > y.rational_value() ? 1
                                                           : 0;
        if (maybe_equal) {
            // Overlapping isolating intervals: the numbers are equal iff the
            // intersection holds a common root.
            Rational jlo = std::max(x.lo(), y.lo());
            Rational jhi = std::min(x.hi(), y.hi());
            if (g.sign_at(jlo) == 0 || g.sign_at(jhi) == 0) return 0;
            if (jlo < jhi && SturmChain(g).count_roots_open(jlo, jhi) > 0) return 0;
        }
        x.bisect_once();
        y.bisect_once();
    }
}

int compare(const AlgebraicNumber& a, const Rational& b) {
    return sign_at(IntPolynomial::linear_root(b), a);
}

AlgebraicNumber golden_ratio() {
    return AlgebraicNumber::from_poly_interval(IntPolynomial({-1, -1, 1}), Rational(1),
                                               Rational(2));
}

AlgebraicNumber tribonacci_constant() {
    return AlgebraicNumber::from_poly_interval(IntPolynomial({-1, -1, -1, 1}), Rational(1),
                                               Rational(2));
}

AlgebraicNumber parse_base(const std::string& text) {
    if (text == "golden") return golden_ratio();
    if (text == "tribonacci") return tribonacci_constant();
    if (text.rfind("poly:", 0) == 0) {
        auto semi = text.find(";interval:");
        if (semi == std::string::npos)
            throw std::invalid_argument("poly base spec needs ;interval:[lo,hi]");
        std::string coeff_part = text.substr(5, semi - 5);
        std::string iv_part = text.substr(semi + 10);
        auto strip_brackets = [](std::string s) {
            if (s.size() < 2 || s.front() != '[' || s.back() != ']')
                throw std::invalid_argument("expected [...] list");
            return s.substr(1, s.size() - 2);
        };
        auto split = [](const std::string& s) {
            std::vector<std::string> items;
            std::string cur;
            for (char ch : s) {
                if (ch == ',') {
                    items.push_back(cur);
                    cur.clear();
                } else if (!isspace(static_cast<unsigned char>(ch))) {
                    cur.push_back(ch);
                }
            }
            if (!cur.empty()) items.push_back(cur);
            return items;
        };
        std::vector<Int> coeffs;
        for (const auto& c : split(strip_brackets(coeff_part))) {
            Rational r = parse_rational(c);
            if (r.get_den() != 1) throw std::invalid_argument("poly coefficients must be integers");
            coeffs.push_back(r.get_num());
        }
        auto iv = split(strip_brackets(iv_part));
        if (iv.size() != 2) throw std::invalid_argument("interval needs two endpoints");
        return AlgebraicNumber::from_poly_interval(IntPolynomial(coeffs), parse_rational(iv[0]),
                                                   parse_rational(iv[1]));
    }
    return AlgebraicNumber::from_rational(parse_rational(text));
}

}  // namespace univoq
