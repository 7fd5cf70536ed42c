#include <univoq/expansion.hpp>
#include <univoq/log_enclosure.hpp>

#include <map>
#include <mutex>

namespace univoq {

namespace {

// Arithmetic in Q[x] modulo the defining polynomial; evaluation at the root
// is a ring homomorphism, so reduced representatives keep the exact value.
struct QuotientCtx {
    int D = 0;
    std::vector<Rational> top_rule;  // x^D = sum top_rule[i] x^i

    static QuotientCtx from(const IntPolynomial& f) {
        QuotientCtx c;
        c.D = f.degree();
        c.top_rule.resize(c.D);
        Rational lead{f.leading()};
        for (int i = 0; i < c.D; ++i) c.top_rule[i] = Rational(-f.coeff(i)) / lead;
        return c;
    }

    void mul_x(std::vector<Rational>& p) const {
        Rational top = p[D - 1];
        for (int i = D - 1; i >= 1; --i) p[i] = p[i - 1];
        p[0] = 0;
        if (top != 0)
            for (int i = 0; i < D; ++i) p[i] += top * top_rule[i];
    }
};

Enclosure interval_eval(const std::vector<Rational>& coeffs, const Enclosure& x) {
    Enclosure acc(Rational(0), Rational(0));
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
        acc = enc_mul(acc, x);
        acc.lo += *it;
        acc.hi += *it;
    }
    return acc;
}

IntPolynomial clear_denominators(const std::vector<Rational>& coeffs) {
    Int lcm(1);
    for (const auto& c : coeffs) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Int> ic(coeffs.size());
    for (size_t i = 0; i < coeffs.size(); ++i) ic[i] = Rational(coeffs[i] * Rational(lcm)).get_num();
    return IntPolynomial(std::move(ic));
}

}  // namespace

struct DigitStream::Impl {
    mutable std::mutex mu;
    AlgebraicNumber q;
    Alphabet alphabet;
    Mode mode;

    bool rational_path;
    Rational rem_rat;
    std::vector<Rational> rem_poly;
    QuotientCtx ctx;
    AlgebraicNumber qa;  // progressively refined copy for interval decisions

    std::vector<int> digits;
    std::optional<size_t> finite_at;
    std::optional<size_t> cycle_start;  // state after step cycle_start repeats
    std::optional<size_t> cycle_len;

    size_t detect_cap = 4096;
    std::map<Rational, size_t> seen_rat;
    std::map<std::vector<Rational>, size_t> seen_poly;

    Impl(AlgebraicNumber base, Alphabet a, Mode m)
        : q(std::move(base)), alphabet(a), mode(m), qa(q) {
        if (compare(q, Rational(1)) <= 0 || compare(q, Rational(alphabet.M + 1)) > 0)
            throw BaseOutOfRange("base must satisfy 1 < q <= M+1");
        rational_path = q.is_rational();
        if (rational_path) {
            rem_rat = 1;
        } else {
            ctx = QuotientCtx::from(q.defining());
            rem_poly.assign(ctx.D, Rational(0));
            rem_poly[0] = 1;
            qa = refine(qa, make_rational(1, 1024));
        }
    }

    // exact sign of the value of v (as polynomial in q), interval-first
    int value_sign(const std::vector<Rational>& v) {
        bool all_zero = true;
        for (const auto& c : v)
            if (c != 0) {
                all_zero = false;
                break;
            }
        if (all_zero) return 0;
        for (int round = 0; round < 3; ++round) {
            Enclosure e = interval_eval(v, qa.enclosure());
            if (e.lo > 0) return 1;
            if (e.hi < 0) return -1;
            for (int i = 0; i < 8; ++i) qa.bisect_once();
        }
        return sign_at(clear_denominators(v), qa);
    }

    // digit chosen at value v = q*r: greedy takes min(M, floor v), quasi the
    // largest digit strictly below v
    int pick_digit(const std::vector<Rational>& v) {
        const bool greedy = mode == Mode::Greedy;
        for (int round = 0; round < 3; ++round) {
            Enclosure e = interval_eval(v, qa.enclosure());
            Int lo_i = greedy ? floor_int(e.lo) : ceil_int(e.lo) - 1;
            Int hi_i = greedy ? floor_int(e.hi) : ceil_int(e.hi) - 1;
            if (lo_i < 0) lo_i = 0;
            if (hi_i > alphabet.M) hi_i = alphabet.M;
            if (lo_i >= hi_i) return static_cast<int>(hi_i.get_si());
            for (int i = 0; i < 8; ++i) qa.bisect_once();
        }
        // exact: largest d in [0, M] with v >= d (greedy) or v > d (quasi)
        int d = 0;
        for (int k = alphabet.M; k >= 1; --k) {
            std::vector<Rational> w = v;
            w[0] -= k;
            int s = value_sign(w);
            if (s > 0 || (mode == Mode::Greedy && s == 0)) {
                d = k;
                break;
            }
        }
        return d;
    }

    int pick_digit_rational(const Rational& v) {
        if (mode == Mode::Greedy) {
            Int f = floor_int(v);
            if (f > alphabet.M) f = alphabet.M;
            if (f < 0) f = 0;
            return static_cast<int>(f.get_si());
        }
        Int f = ceil_int(v) - 1;
        if (f > alphabet.M) f = alphabet.M;
        if (f < 0) f = 0;
        return static_cast<int>(f.get_si());
    }

    void step() {
        if (rational_path) {
            Rational v = q.rational_value() * rem_rat;
            int d = pick_digit_rational(v);
            rem_rat = v - d;
            digits.push_back(d);
            if (mode == Mode::Greedy && rem_rat == 0) {
                finite_at = digits.size();
                return;
            }
            if (!cycle_start && digits.size() <= detect_cap) {
                auto [it, inserted] = seen_rat.try_emplace(rem_rat, digits.size());
                if (!inserted) {
                    cycle_start = it->second;
                    cycle_len = digits.size() - it->second;
                }
            }
        } else {
            std::vector<Rational> v = rem_poly;
            ctx.mul_x(v);
            int d = pick_digit(v);
            v[0] -= d;
            digits.push_back(d);
            if (mode == Mode::Greedy && value_sign(v) == 0) {
                finite_at = digits.size();
                return;
            }
            rem_poly = v;
            if (!cycle_start && digits.size() <= detect_cap) {
                auto [it, inserted] = seen_poly.try_emplace(rem_poly, digits.size());
                if (!inserted) {
                    cycle_start = it->second;
                    cycle_len = digits.size() - it->second;
                }
            }
        }
    }

    int digit_locked(size_t i) {
        while (digits.size() < i) {
            if (finite_at) return 0;
            if (cycle_start) {
                size_t j = *cycle_start, len = *cycle_len;
                return digits[j + (i - 1 - j) % len];
            }
            step();
        }
        return digits[i - 1];
    }
};

DigitStream::DigitStream(AlgebraicNumber q, Alphabet alphabet, Mode mode)
    : impl_(std::make_shared<Impl>(std::move(q), alphabet, mode)) {}

int DigitStream::digit(size_t i) const {
    if (i == 0) throw std::invalid_argument("digits are 1-indexed");
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->digit_locked(i);
}

Word DigitStream::prefix(size_t n) const {
    std::vector<int> d(n);
    std::lock_guard<std::mutex> lock(impl_->mu);
    for (size_t i = 0; i < n; ++i) d[i] = impl_->digit_locked(i + 1);
    return Word(std::move(d), impl_->alphabet.M);
}

std::optional<size_t> DigitStream::finite_at() const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    return impl_->finite_at;
}

std::optional<PeriodicSeq> DigitStream::detected_cycle() const {
    std::lock_guard<std::mutex> lock(impl_->mu);
    if (impl_->finite_at) {
        std::vector<int> pre(impl_->digits.begin(), impl_->digits.begin() + *impl_->finite_at);
        return PeriodicSeq::finite(Word(std::move(pre), impl_->alphabet.M));
    }
    if (!impl_->cycle_start) return std::nullopt;
    size_t j = *impl_->cycle_start, len = *impl_->cycle_len;
    std::vector<int> pre(impl_->digits.begin(), impl_->digits.begin() + j);
    std::vector<int> per(impl_->digits.begin() + j, impl_->digits.begin() + j + len);
    return PeriodicSeq(Word(std::move(pre), impl_->alphabet.M),
                       Word(std::move(per), impl_->alphabet.M));
}

const AlgebraicNumber& DigitStream::base() const { return impl_->q; }
int DigitStream::M() const { return impl_->alphabet.M; }

Word ExpansionSeq::prefix(size_t n) const {
    return exact ? periodic.prefix(n) : stream->prefix(n);
}

Word greedy_expansion(const AlgebraicNumber& q, const Alphabet& alphabet, size_t depth) {
    DigitStream s(q, alphabet, DigitStream::Mode::Greedy);
    return s.prefix(depth);
}

ExpansionSeq beta_of(const AlgebraicNumber& q, const Alphabet& alphabet, size_t detect_cap) {
    DigitStream s(q, alphabet, DigitStream::Mode::Greedy);
    s.digit(detect_cap);
    ExpansionSeq r;
    if (auto ps = s.detected_cycle()) {
        r.exact = true;
        r.periodic = *ps;
    } else {
        r.exact = false;
        r.stream = s;
    }
    return r;
}

ExpansionSeq quasi_greedy_expansion(const AlgebraicNumber& q, const Alphabet& alphabet,
                                    size_t detect_cap) {
    DigitStream s(q, alphabet, DigitStream::Mode::Greedy);
    s.digit(detect_cap);
    ExpansionSeq r;
    if (auto m = s.finite_at()) {
        // beta finite with last nonzero digit at m: alpha is periodic with
        // period beta_1 ... beta_{m-1} (beta_m - 1)
        Word w = s.prefix(*m);
        w.digits.back() -= 1;
        r.exact = true;
        r.periodic = PeriodicSeq(Word({}, alphabet.M), std::move(w));
        return r;
    }
    if (auto ps = s.detected_cycle()) {
        // beta infinite: alpha = beta
        r.exact = true;
        r.periodic = *ps;
        return r;
    }
    r.exact = false;
    r.stream = s;
    return r;
}

DigitStream quasi_greedy_stream(const AlgebraicNumber& q, const Alphabet& alphabet) {
    return DigitStream(q, alphabet, DigitStream::Mode::QuasiGreedy);
}

PiValue::PiValue(AlgebraicNumber q, IntPolynomial num, IntPolynomial den)
    : q_(std::move(q)), num_(std::move(num)), den_(std::move(den)) {}

int PiValue::compare_to(const Rational& r) const {
    // den(q) > 0, r.den > 0, so sign(num/den - r) = sign(num*r.den - r.num*den)
    IntPolynomial diff = num_ * r.get_den() - den_ * r.get_num();
    return sign_at(diff, q_);
}

Enclosure PiValue::enclosure(const Rational& width) const {
    if (width <= 0) throw std::invalid_argument("width must be positive");
    AlgebraicNumber t = refine(q_, make_rational(1, 1024));
    std::vector<Rational> nc(num_.coeffs().size()), dc(den_.coeffs().size());
    for (size_t i = 0; i < nc.size(); ++i) nc[i] = Rational(num_.coeff(i));
    for (size_t i = 0; i < dc.size(); ++i) dc[i] = Rational(den_.coeff(i));
    for (int round = 0; round < 100000; ++round) {
        Enclosure n = interval_eval(nc, t.enclosure());
        Enclosure d = interval_eval(dc, t.enclosure());
        if (d.lo > 0) {
            Enclosure v = enc_div(n, d);
            if (v.width() <= width) return v;
        }
        if (t.is_rational()) {
            Rational v = num_.eval(t.rational_value()) / den_.eval(t.rational_value());
            return Enclosure(v, v);
        }
        t.bisect_once();
    }
    throw std::runtime_error("pi value enclosure did not reach requested width");
}

Rational PiValue::exact_rational() const {
    if (!q_.is_rational()) throw std::logic_error("exact_rational needs a rational base");
    Rational x = q_.rational_value();
    return num_.eval(x) / den_.eval(x);
}

PiValue eval_pi(const AlgebraicNumber& q, const PeriodicSeq& c) {
    if (compare(q, Rational(1)) <= 0) throw BaseOutOfRange("eval_pi requires q > 1");
    size_t s = c.preperiod().size();
    // A(x) = sum_{i=1..s} a_i x^(s-i)
    std::vector<Int> ac(s == 0 ? 1 : s, Int(0));
    for (size_t i = 1; i <= s; ++i) ac[s - i] = c.preperiod()[i - 1];
    IntPolynomial A(std::move(ac));
    if (c.eventually_zero()) {
        return PiValue(q, A, IntPolynomial::power(static_cast<unsigned>(s)));
    }
    size_t p = c.period().size();
    std::vector<Int> bc(p, Int(0));
    for (size_t j = 1; j <= p; ++j) bc[p - j] = c.period()[j - 1];
    IntPolynomial B(std::move(bc));
    IntPolynomial xp1 = IntPolynomial::power(static_cast<unsigned>(p)) - IntPolynomial::constant(1);
    IntPolynomial num = A * xp1 + B;
    IntPolynomial den = IntPolynomial::power(static_cast<unsigned>(s)) * xp1;
    return PiValue(q, num, den);
}

bool is_greedy_admissible(const Word& w) {
    if (w.empty()) throw std::invalid_argument("is_greedy_admissible needs a nonempty word");
    if (w[0] < 1) return false;
    size_t n = w.size();
    for (size_t k = 1; k < n; ++k) {
        // compare w_{k+1..n} with w_{1..n-k}
        for (size_t i = 0; i < n - k; ++i) {
            if (w[k + i] > w[i]) return false;
            if (w[k + i] < w[i]) break;
        }
    }
    return true;
}

namespace {

// shifted(c) compared against alpha; exact when alpha is periodic
Cmp compare_with_alpha(const PeriodicSeq& s, const ExpansionSeq& alpha, size_t depth) {
    if (alpha.exact) return lex_compare(s, alpha.periodic);
    for (size_t i = 1; i <= depth; ++i) {
        int da = s.digit(i), db = alpha.stream->digit(i);
        if (da < db) return Cmp::Less;
        if (da > db) return Cmp::Greater;
    }
    return Cmp::Undecided;
}

}  // namespace

UniquenessResult is_unique_expansion(const AlgebraicNumber& q, const Alphabet& alphabet,
                                     const PeriodicSeq& c, size_t compare_depth) {
    return is_unique_expansion(quasi_greedy_expansion(q, alphabet), alphabet, c, compare_depth);
}

UniquenessResult is_unique_expansion(const ExpansionSeq& alpha, const Alphabet& alphabet,
                                     const PeriodicSeq& c, size_t compare_depth) {
    size_t K = c.preperiod_size(), per = c.period_size();
    size_t bound = K + 2 * per + 2;
    UniquenessResult res;
    res.unique = true;
    res.proved = alpha.exact;
    res.depth = compare_depth;
    bool prefix_all_M = true, prefix_all_0 = true;
    for (size_t k = 1; k <= bound; ++k) {
        int ck = c.digit(k);
        prefix_all_M = prefix_all_M && ck == alphabet.M;
        prefix_all_0 = prefix_all_0 && ck == 0;
        PeriodicSeq tail = c.shifted(k);
        if (!prefix_all_M) {
            Cmp cmp = compare_with_alpha(tail, alpha, compare_depth);
            if (cmp == Cmp::Undecided) throw UndecidedAtDepth(compare_depth);
            if (cmp != Cmp::Less) {
                res.unique = false;
                res.proved = true;
                return res;
            }
        }
        if (!prefix_all_0) {
            Cmp cmp = compare_with_alpha(tail.reflected(), alpha, compare_depth);
            if (cmp == Cmp::Undecided) throw UndecidedAtDepth(compare_depth);
            if (cmp != Cmp::Less) {
                res.unique = false;
                res.proved = true;
                return res;
            }
        }
    }
    return res;
}

namespace {

// digit-by-digit comparison of shifted streams of one sequence
Cmp cmp_shifted_stream(const DigitStream& s, size_t shift_a, bool reflect_a, size_t shift_b,
                       bool reflect_b, size_t depth, int M) {
    for (size_t i = 1; i <= depth; ++i) {
        int da = s.digit(shift_a + i), db = s.digit(shift_b + i);
        if (reflect_a) da = M - da;
        if (reflect_b) db = M - db;
        if (da < db) return Cmp::Less;
        if (da > db) return Cmp::Greater;
    }
    return Cmp::Undecided;
}

Verdict check_shift_conditions(const ExpansionSeq& seq, const Alphabet& alphabet, size_t depth,
                               size_t k_from, bool strict_upper) {
    const int M = alphabet.M;
    if (seq.exact) {
        const PeriodicSeq& c = seq.periodic;
        PeriodicSeq refl = c.reflected();
        size_t bound = c.preperiod_size() + c.period_size() + 1;
        for (size_t k = k_from; k <= bound; ++k) {
            PeriodicSeq tail = c.shifted(k);
            Cmp left = lex_compare(refl, tail);
            if (left != Cmp::Less) return {Verdict::Status::RefutedAt, k};
            Cmp right = lex_compare(tail, c);
            if (right == Cmp::Greater || (strict_upper && right == Cmp::Equal))
                return {Verdict::Status::RefutedAt, k};
        }
        return {Verdict::Status::Proved, bound};
    }
    const DigitStream& s = *seq.stream;
    bool all_decided = true;
    for (size_t k = k_from; k <= depth; ++k) {
        Cmp left = cmp_shifted_stream(s, 0, true, k, false, 2 * depth, M);
        if (left == Cmp::Greater || left == Cmp::Equal) return {Verdict::Status::RefutedAt, k};
        Cmp right = cmp_shifted_stream(s, k, false, 0, false, 2 * depth, M);
        if (right == Cmp::Greater || (strict_upper && right == Cmp::Equal))
            return {Verdict::Status::RefutedAt, k};
        if (left == Cmp::Undecided || right == Cmp::Undecided) all_decided = false;
    }
    (void)all_decided;
    return {Verdict::Status::VerifiedTo, depth};
}

}  // namespace

Verdict in_univoque_U(const AlgebraicNumber& q, const Alphabet& alphabet, size_t depth) {
    if (compare(q, Rational(1)) <= 0 || compare(q, Rational(alphabet.M + 1)) > 0)
        throw BaseOutOfRange("in_univoque_U requires 1 < q <= M+1");
    // q = M+1 has the unique expansion M^inf of 1
    if (compare(q, Rational(alphabet.M + 1)) == 0) return {Verdict::Status::Proved, 0};
    ExpansionSeq beta = beta_of(q, alphabet, std::max<size_t>(depth, 64));
    return check_shift_conditions(beta, alphabet, depth, 1, /*strict_upper=*/true);
}

Verdict in_U_closure(const AlgebraicNumber& q, const Alphabet& alphabet, size_t depth) {
    if (compare(q, Rational(1)) <= 0 || compare(q, Rational(alphabet.M + 1)) > 0)
        throw BaseOutOfRange("in_U_closure requires 1 < q <= M+1");
    ExpansionSeq alpha = quasi_greedy_expansion(q, alphabet, std::max<size_t>(depth, 64));
    return check_shift_conditions(alpha, alphabet, depth, 0, /*strict_upper=*/false);
}

}  // namespace univoq
