#include <univoq/dimension.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <sstream>
#include <thread>

namespace univoq {

std::string DimensionEstimate::method_name() const {
    switch (method) {
        case DimMethod::ClosedFormAbove: return "closed_form";
        case DimMethod::ZeroBelowKL: return "zero";
        case DimMethod::Sandwich: return ambiguous_region ? "sandwich_ambiguous" : "sandwich";
    }
    return "?";
}

int thue_morse_digit(size_t i) {
    int parity = 0;
    while (i) {
        parity ^= static_cast<int>(i & 1);
        i >>= 1;
    }
    return parity;
}

namespace {

// certified sign of f(x) = sum tau_i x^-i - 1 for rational x > 1 (x not the
// root itself; the root is irrational)
int tm_series_sign(const Rational& x) {
    Rational inv = Rational(1) / x;
    for (size_t K = 64;; K *= 2) {
        Rational s(0), p(1);
        for (size_t i = 1; i <= K; ++i) {
            p *= inv;
            if (thue_morse_digit(i)) s += p;
        }
        // 0 <= tail <= x^-K / (x-1)
        Rational tail = p / (x - 1);
        if (s > 1) return 1;
        if (s + tail < 1) return -1;
        if (K > (1u << 20)) throw std::runtime_error("thue-morse sign did not resolve");
    }
}

}  // namespace

Enclosure kl_thue_morse_enclosure(const Rational& width) {
    if (width <= 0) throw std::invalid_argument("width must be positive");
    static std::mutex mu;
    static std::optional<std::pair<Rational, Enclosure>> cache;
    std::lock_guard<std::mutex> lock(mu);
    Rational lo = make_rational(3, 2), hi(2);
    if (cache && cache->first <= width) return cache->second;
    if (cache) {
        lo = cache->second.lo;
        hi = cache->second.hi;
    }
    // f decreasing: f(lo) > 0 > f(hi)
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (tm_series_sign(mid) > 0)
            lo = mid;
        else
            hi = mid;
    }
    cache = {width, Enclosure(lo, hi)};
    return cache->second;
}

namespace {

// smallest schedule depth whose strict window shift certifies positive
// entropy (hence a base above the smallest univoque base), or 0
size_t positive_entropy_cert(const Rational& q, const Alphabet& alphabet, size_t cap) {
    for (size_t n = 4; n <= cap; n += (n < 16 ? 4 : n / 2)) {
        ForbiddenSpec su =
            build_spec(AlgebraicNumber::from_rational(q), alphabet, n, SftMode::StrictU);
        EdgeGraph g = build_graph_automaton(su);
        if (!g.has_biinfinite_walk()) continue;
        PerronBounds pb = perron_bounds(g, make_rational(1, 10000));
        if (pb.spectral_radius.lo > 1) return n;
    }
    return 0;
}

// smallest schedule depth whose closed window shift certifies zero entropy
// (hence a base at or below the smallest univoque base), or 0
size_t zero_entropy_cert(const Rational& q, const Alphabet& alphabet, size_t cap) {
    for (size_t n = 4; n <= cap; n += (n < 16 ? 4 : n / 2)) {
        ForbiddenSpec sv =
            build_spec(AlgebraicNumber::from_rational(q), alphabet, n, SftMode::ClosedV);
        EdgeGraph g = build_graph_automaton(sv);
        if (!g.has_biinfinite_walk()) return n;
        PerronBounds pb = perron_bounds(g, make_rational(1, 10000));
        if (pb.spectral_radius.hi <= 1) return n;
    }
    return 0;
}

}  // namespace

KLConstant kl_constant(int M, const Rational& width, size_t depth) {
    if (width <= 0) throw std::invalid_argument("width must be positive");
    Alphabet alphabet(M);
    if (depth == 0) depth = 128;
    KLConstant kl;
    kl.M = M;
    kl.certificate_depth = depth;

    // The univoque-base predicate is not monotone in q (the set of univoque
    // bases has gaps above its minimum), so the bracket moves on one-sided
    // entropy certificates instead: zero entropy of the closed window shift
    // puts a base at or below the constant, positive entropy of the strict
    // window shift puts it strictly above.
    double w = std::max(width.get_d(), 1e-18);
    size_t cert_cap = static_cast<size_t>(64 + 4.0 * (-std::log2(w)));
    Rational lo = make_rational(3, 2), hi(M + 1);
    if (zero_entropy_cert(lo, alphabet, cert_cap) == 0)
        throw CertificateDepthExceeded("no zero-entropy certificate at the bracket start");
    while (hi - lo > width) {
        Rational mid = (lo + hi) / 2;
        if (zero_entropy_cert(mid, alphabet, cert_cap) != 0) {
            lo = mid;
        } else if (positive_entropy_cert(mid, alphabet, cert_cap) != 0) {
            hi = mid;
        } else {
            throw CertificateDepthExceeded("entropy certificates exhausted at width " +
                                           decimal_string(hi - lo, 20));
        }
    }
    kl.entropy_certified = true;
    kl.enclosure = Enclosure(lo, hi);

    if (M == 1) {
        // independent enclosure: the root of the shifted Thue-Morse series.
        // Width is tied to the verification depth so that the upper endpoint
        // stays verifiable: a base within q'^-(depth+margin) of the constant
        // shows no shift violation before `depth`.
        unsigned tm_bits = static_cast<unsigned>(depth + 48);
        Enclosure tm = kl_thue_morse_enclosure(make_rational(1, Int(1) << tm_bits));
        if (tm.hi < lo || tm.lo > hi)
            throw InternalConsistencyAlarm("KL bisection disagrees with Thue-Morse enclosure");
        kl.tm_cross_checked = true;
        // both enclose the constant; intersect
        kl.enclosure = Enclosure(std::max(lo, tm.lo), std::min(hi, tm.hi));
    }

    Verdict vlo = in_univoque_U(AlgebraicNumber::from_rational(kl.enclosure.lo), alphabet, depth);
    if (vlo.holds())
        throw InternalConsistencyAlarm("lower KL endpoint not refuted by the shift inequalities");
    kl.lo_refuted_at = vlo.index;
    Verdict vhi = in_univoque_U(AlgebraicNumber::from_rational(kl.enclosure.hi), alphabet, depth);
    kl.hi_verified = vhi.holds();
    kl.hi_proved = vhi.proved();
    if (!vhi.holds()) kl.hi_refuted_at = vhi.index;  // hi sits in a gap above the constant
    return kl;
}

const KLConstant& kl_cached(int M) {
    static std::mutex mu;
    static std::map<int, KLConstant> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(M);
    if (it == cache.end())
        it = cache.emplace(M, kl_constant(M, make_rational(1, 1000000))).first;
    return it->second;
}

DimensionEstimate dimension(const AlgebraicNumber& q, const Alphabet& alphabet,
                            const Rational& tol, const DimensionOptions& opts) {
    if (compare(q, Rational(1)) <= 0) throw BaseOutOfRange("dimension requires q > 1");
    DimensionEstimate est;
    const int M = alphabet.M;
    if (compare(q, Rational(M + 1)) >= 0) {
        AlgebraicNumber qr = refine(q, make_rational(1, Int(1) << 70));
        Enclosure lnq = log_enclosure(Enclosure(qr.lo(), qr.hi()), 96);
        Enclosure lnM1 = log_enclosure(Rational(M + 1), 96);
        est.enclosure = enc_div(lnM1, lnq);
        est.method = DimMethod::ClosedFormAbove;
        est.certified_dimension_formula = true;
        est.tol_reached = true;
        return est;
    }
    const KLConstant& kl = kl_cached(M);
    if (compare(q, kl.enclosure.lo) < 0) {
        est.enclosure = Enclosure(Rational(0), Rational(0));
        est.method = DimMethod::ZeroBelowKL;
        est.certified_dimension_formula = true;
        est.tol_reached = true;
        return est;
    }
    est.ambiguous_region = compare(q, kl.enclosure.hi) <= 0;
    est.method = est.ambiguous_region ? DimMethod::Sandwich : DimMethod::Sandwich;
    AlgebraicNumber qr = refine(q, make_rational(1, Int(1) << 48));
    Enclosure lnq = log_enclosure(Enclosure(qr.lo(), qr.hi()), 96);
    Rational h_tol = tol * lnq.lo / 2;
    RefineOptions ro;
    ro.depth_cap = opts.depth_cap;
    ro.builder = opts.builder;
    EntropyBounds h = refine_entropy(q, alphabet, h_tol, ro);
    Rational d_lo = h.lower / lnq.hi;
    Rational d_hi = h.upper / lnq.lo;
    if (est.ambiguous_region) d_lo = 0;  // q may still be at or below the KL constant
    if (d_hi > 1) d_hi = 1;
    if (d_lo < 0) d_lo = 0;
    est.enclosure = Enclosure(d_lo, d_hi);
    est.depth = h.depth;
    est.tol_reached = est.enclosure.width() <= tol;
    try {
        est.certified_dimension_formula = certify_separation(q, alphabet, h.depth);
    } catch (const DepthExceeded&) {
        est.certified_dimension_formula = false;
    }
    return est;
}

bool certify_separation(const AlgebraicNumber& q, const Alphabet& alphabet, size_t n,
                        bool use_beta, size_t digit_cap) {
    ExpansionSeq seq = use_beta ? beta_of(q, alphabet, digit_cap)
                                : quasi_greedy_expansion(q, alphabet, digit_cap);
    size_t N = 0;
    for (size_t i = 1; i <= digit_cap; ++i)
        if (seq.digit(i) < alphabet.M) {
            N = i;
            break;
        }
    if (N == 0)
        throw DepthExceeded("all computed digits equal M; no separation index within cap");
    if (n <= N) return false;
    // q^(n-N) (q-1) > M, exactly
    IntPolynomial p = IntPolynomial::power(static_cast<unsigned>(n - N)) *
                          (IntPolynomial::power(1) - IntPolynomial::constant(1)) -
                      IntPolynomial::constant(alphabet.M);
    return sign_at(p, q) > 0;
}

std::vector<SweepRow> staircase_sweep(const Alphabet& alphabet, const std::vector<Rational>& grid,
                                      const Rational& tol, unsigned jobs,
                                      const DimensionOptions& opts) {
    std::vector<SweepRow> rows(grid.size());
    // KL enclosure computed once up front, shared read-only afterwards
    if (!grid.empty()) kl_cached(alphabet.M);
    auto work = [&](size_t start, size_t stride) {
        for (size_t i = start; i < grid.size(); i += stride) {
            rows[i].q = grid[i];
            try {
                rows[i].estimate =
                    dimension(AlgebraicNumber::from_rational(grid[i]), alphabet, tol, opts);
            } catch (const std::exception& e) {
                rows[i].error = e.what();
            }
        }
    };
    if (jobs <= 1 || grid.size() <= 1) {
        work(0, 1);
    } else {
        unsigned n = std::min<unsigned>(jobs, static_cast<unsigned>(grid.size()));
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < n; ++t) threads.emplace_back(work, t, n);
        for (auto& th : threads) th.join();
    }
    return rows;
}

std::string sweep_csv(const std::vector<SweepRow>& rows, unsigned precision) {
    std::ostringstream os;
    os << "q,D_lo,D_hi,depth,method,certified\n";
    for (const auto& r : rows) {
        os << decimal_string(r.q, precision) << ",";
        if (!r.error.empty()) {
            os << ",,0,error," << "false\n";
            continue;
        }
        os << decimal_string(r.estimate.enclosure.lo, precision) << ","
           << decimal_string(r.estimate.enclosure.hi, precision) << "," << r.estimate.depth << ","
           << r.estimate.method_name() << ","
           << (r.estimate.certified_dimension_formula ? "true" : "false") << "\n";
    }
    return os.str();
}

std::string sweep_json(const std::vector<SweepRow>& rows, unsigned precision) {
    std::ostringstream os;
    os << "[";
    for (size_t i = 0; i < rows.size(); ++i) {
        const auto& r = rows[i];
        if (i) os << ",";
        os << "{\"q\":" << decimal_string(r.q, precision);
        if (!r.error.empty()) {
            os << ",\"error\":\"" << r.error << "\"}";
            continue;
        }
        os << ",\"D_lo\":" << decimal_string(r.estimate.enclosure.lo, precision)
           << ",\"D_hi\":" << decimal_string(r.estimate.enclosure.hi, precision)
           << ",\"depth\":" << r.estimate.depth << ",\"method\":\"" << r.estimate.method_name()
           << "\",\"certified\":" << (r.estimate.certified_dimension_formula ? "true" : "false")
           << "}";
    }
    os << "]";
    return os.str();
}

Enclosure plateau_derivative(const AlgebraicNumber& q, const Rational& h_nats) {
    if (compare(q, Rational(1)) <= 0) throw BaseOutOfRange("plateau_derivative requires q > 1");
    if (h_nats < 0) throw std::invalid_argument("entropy must be nonnegative");
    if (h_nats == 0) return Enclosure(Rational(0), Rational(0));
    AlgebraicNumber qr = refine(q, make_rational(1, Int(1) << 60));
    Enclosure qe(qr.lo(), qr.hi());
    Enclosure lnq = log_enclosure(qe, 96);
    Enclosure den = enc_mul(qe, enc_mul(lnq, lnq));
    Enclosure h(h_nats, h_nats);
    return enc_neg(enc_div(h, den));
}

SigmaBound sigma_lower_bound(int M, int N) {
    if (N < 2) throw std::invalid_argument("sigma needs N >= 2");
    Int base(M + 1);
    Int T = pow_int(base, N) - 2;
    if (T <= 1) throw std::invalid_argument("sigma needs (M+1)^N > 3");
    SigmaBound sb;
    sb.M = M;
    sb.N = N;
    // exact when (M+1)^N - 2 is a pure power of M+1
    Int p(1);
    for (int j = 0; j <= N; ++j) {
        if (p == T) {
            Rational s = make_rational(Int(j), Int(N));
            sb.sigma = Enclosure(s, s);
            sb.exact = true;
            break;
        }
        p *= base;
    }
    if (!sb.exact) {
        Enclosure lnT = log_enclosure(Rational(T), 96);
        Enclosure lnB = log_enclosure(Rational(base), 96);
        sb.sigma = enc_div(lnT, enc_mul(Enclosure(Rational(N), Rational(N)), lnB));
    }
    const KLConstant& kl = kl_cached(M);
    Rational denom{M * pow_int(base, 2 * static_cast<unsigned long>(N))};
    Rational c_lo = (kl.enclosure.lo - 1) * (kl.enclosure.lo - 1) / denom;
    Rational c_hi = (kl.enclosure.hi - 1) * (kl.enclosure.hi - 1) / denom;
    sb.separation_c = Enclosure(c_lo, c_hi);
    return sb;
}

Int hatU_block_count(int M, int N, size_t n) {
    if (n < 2) throw std::invalid_argument("hatU_block_count needs n >= 2");
    Int base = pow_int(Int(M + 1), N) - 2;
    return pow_int(base, n - 2);
}

}  // namespace univoq
