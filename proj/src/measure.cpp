#include <univoq/measure.hpp>

#include <random>
#include <sstream>
#include <thread>

namespace univoq {

namespace {

AlgebraicNumber isolate_unique_in_base_range(const IntPolynomial& p, int M,
                                             const std::string& what) {
    auto roots = isolate_roots(p, Rational(1), Rational(M + 1));
    if (roots.size() != 1)
        throw InternalConsistencyAlarm(what + ": expected one root in [1, M+1], found " +
                                       std::to_string(roots.size()));
    return roots.front();
}

}  // namespace

IntervalTriple interval_triple(const Alphabet& alphabet, const Word& prefix, unsigned t) {
    if (!is_greedy_admissible(prefix))
        throw NotAdmissible("prefix is not a greedy-admissible word");
    if (t < 1) throw std::invalid_argument("t must be >= 1");
    const size_t n = prefix.size();
    const int M = alphabet.M;
    // p1 = x^n - sum eta_i x^(n-i)
    std::vector<Int> c1(n + 1, Int(0));
    c1[n] = 1;
    for (size_t i = 1; i <= n; ++i) c1[n - i] -= prefix[i - 1];
    IntPolynomial p1(std::move(c1));
    // p3 = x^(n+t) - sum eta_i x^(n+t-i) - 1
    std::vector<Int> c3(n + t + 1, Int(0));
    c3[n + t] = 1;
    for (size_t i = 1; i <= n; ++i) c3[n + t - i] -= prefix[i - 1];
    c3[0] -= 1;
    IntPolynomial p3(std::move(c3));
    // p2 = (x-1)(x^n - sum eta_i x^(n-i)) - M
    IntPolynomial xm1({-1, 1});
    IntPolynomial p2 = xm1 * p1 - IntPolynomial::constant(M);

    IntervalTriple tr;
    tr.prefix = prefix;
    tr.t = t;
    tr.q1 = isolate_unique_in_base_range(p1, M, "q1");
    tr.q3 = isolate_unique_in_base_range(p3, M, "q3");
    tr.q2 = isolate_unique_in_base_range(p2, M, "q2");
    tr.boundary = compare(tr.q1, Rational(1)) == 0;
    if (compare(tr.q1, tr.q3) > 0 || compare(tr.q3, tr.q2) > 0)
        throw InternalConsistencyAlarm("interval triple out of order");
    return tr;
}

RatioBoundResult check_ratio_bound(const IntervalTriple& triple, const Rational& width) {
    if (triple.boundary) throw DegenerateBoundary("q1 = 1: ratio bound degenerates");
    if (compare(triple.q1, triple.q2) == 0)
        throw DegenerateBoundary("q1 = q2: empty base interval");
    const int M = triple.prefix.M;
    Rational m2{Int(M) * Int(M)};
    AlgebraicNumber a = triple.q1, b = triple.q2, c = triple.q3;
    Rational w = make_rational(1, 1024);
    for (int round = 0; round < 40; ++round) {
        a = refine(a, w);
        b = refine(b, w);
        c = refine(c, w);
        Enclosure e1(a.lo(), a.hi()), e2(b.lo(), b.hi()), e3(c.lo(), c.hi());
        Enclosure num = enc_sub(e3, e1);
        Enclosure den = enc_sub(e2, e1);
        if (den.lo > 0 && num.lo >= 0) {
            RatioBoundResult res;
            res.ratio = enc_div(num, den);
            Enclosure q1m1 = enc_sub(e1, Enclosure(Rational(1), Rational(1)));
            Enclosure cube = enc_mul(q1m1, enc_mul(q1m1, q1m1));
            Enclosure q2pow(pow_rational(e2.lo, triple.t + 2), pow_rational(e2.hi, triple.t + 2));
            res.bound = enc_div(cube, enc_mul(Enclosure(m2, m2), q2pow));
            if (res.ratio.hi < res.bound.lo) {
                res.holds = false;
                throw InternalConsistencyAlarm(
                    "interval ratio bound certified violated: implementation bug");
            }
            if (res.ratio.lo >= res.bound.hi && res.ratio.width() <= width &&
                res.bound.width() <= width) {
                res.holds = true;
                return res;
            }
        }
        w /= 16;
    }
    throw std::runtime_error("check_ratio_bound: could not separate ratio from bound");
}

Enclosure measure_lower_bound(int M, const Rational& p, const Rational& r, unsigned t) {
    if (!(1 < p && p < r && r <= M + 1)) throw std::range_error("need 1 < p < r <= M+1");
    Rational v = (p - 1) * (p - 1) * (p - 1) / (Rational(Int(M) * Int(M)) * pow_rational(r, t + 2)) *
                 (r - p);
    return Enclosure(v, v);
}

namespace {

std::vector<Rational> sample_bases(const Rational& lo_open, const Rational& hi_open,
                                   unsigned samples, uint64_t seed) {
    // uniform rationals with fixed denominator 2^64
    std::mt19937_64 rng(seed);
    Int den = Int(1) << 64;
    Int lo_num = floor_int(lo_open * Rational(den)) + 1;
    Int hi_num = ceil_int(hi_open * Rational(den)) - 1;
    Int span = hi_num - lo_num + 1;
    if (span <= 0) throw std::range_error("sampling range is empty at denominator 2^64");
    std::vector<Rational> out(samples);
    for (unsigned i = 0; i < samples; ++i) {
        Int u{rng()};
        u = (u << 64) | Int(rng());
        Int num = lo_num + u % span;
        out[i] = make_rational(num, den);
    }
    return out;
}

}  // namespace

Rational measure_empirical_fraction(int M, const Rational& p, const Rational& r, unsigned n,
                                    unsigned t, unsigned samples, uint64_t seed) {
    if (!(1 < p && p < r && r <= M + 1)) throw std::range_error("need 1 < p < r <= M+1");
    auto bases = sample_bases(p, r, samples, seed);
    Alphabet alphabet(M);
    unsigned hits = 0;
    for (const auto& q : bases) {
        Word w = greedy_expansion(AlgebraicNumber::from_rational(q), alphabet, n + t);
        bool zeros = true;
        for (unsigned i = n; i < n + t && zeros; ++i) zeros = w[i] == 0;
        if (zeros) ++hits;
    }
    return make_rational(Int(hits), Int(samples));
}

DivergentSchedule divergent_schedule(const Rational& s, size_t count) {
    if (s <= 1) throw std::invalid_argument("divergent_schedule needs s > 1");
    if (count < 1) throw std::invalid_argument("count must be >= 1");
    DivergentSchedule ds;
    ds.s = s;
    ds.partial_sum_inverse = 0;
    Rational running_sum(0);
    for (size_t k = 0; k < count; ++k) {
        // smallest n with s^n > running_sum + n
        unsigned n = 1;
        Rational sp = s;
        while (sp <= running_sum + n) {
            ++n;
            sp *= s;
        }
        ds.terms.push_back(n);
        running_sum += n;
        ds.partial_sum_inverse += Rational(1) / sp;
    }
    return ds;
}

std::string ZeroRunReport::to_json(unsigned precision) const {
    std::ostringstream os;
    os << "{\"M\":" << M << ",\"r\":" << decimal_string(r, precision)
       << ",\"samples\":" << samples << ",\"depth\":" << depth << ",\"seed\":" << seed
       << ",\"successes\":" << successes
       << ",\"fraction\":" << decimal_string(fraction, precision) << "}";
    return os.str();
}

std::string ZeroRunReport::to_csv(unsigned precision) const {
    std::ostringstream os;
    os << "q,deepest_m\n";
    for (const auto& s : per_sample)
        os << decimal_string(s.q, precision) << "," << s.deepest_m << "\n";
    return os.str();
}

ZeroRunReport zero_run_experiment(int M, const Rational& r, unsigned samples, size_t depth,
                                  uint64_t seed, unsigned jobs) {
    if (!(1 < r && r <= M + 1)) throw std::range_error("need 1 < r <= M+1");
    if (samples < 1 || depth < 1) throw std::invalid_argument("samples and depth must be >= 1");
    ZeroRunReport rep;
    rep.M = M;
    rep.r = r;
    rep.samples = samples;
    rep.depth = depth;
    rep.seed = seed;
    // epsilon keeps the samples clear of the q = 1 boundary
    Rational eps = make_rational(1, 1 << 20);
    rep.per_sample.resize(samples);
    auto bases = sample_bases(Rational(1) + eps, r, samples, seed);
    Alphabet alphabet(M);
    auto work = [&](unsigned start, unsigned stride) {
        for (unsigned i = start; i < samples; i += stride) {
            const Rational& q = bases[i];
            rep.per_sample[i].q = q;
            DigitStream s(AlgebraicNumber::from_rational(q), alphabet,
                          DigitStream::Mode::Greedy);
            size_t zrun = 0, deepest = 0;
            // powers of r by run length, grown on demand
            std::vector<Rational> rpow{Rational(1)};
            for (size_t m = 1; m <= depth; ++m) {
                if (s.digit(m) == 0)
                    ++zrun;
                else
                    zrun = 0;
                while (rpow.size() <= zrun) rpow.push_back(rpow.back() * r);
                // success at m iff zrun > log_r m, i.e. r^zrun > m
                if (zrun > 0 && rpow[zrun] > Rational(static_cast<unsigned long>(m)))
                    deepest = m;
            }
            rep.per_sample[i].deepest_m = deepest;
        }
    };
    if (jobs <= 1 || samples <= 1) {
        work(0, 1);
    } else {
        unsigned nthreads = std::min(jobs, samples);
        std::vector<std::thread> threads;
        for (unsigned t = 0; t < nthreads; ++t) threads.emplace_back(work, t, nthreads);
        for (auto& th : threads) th.join();
    }
    for (const auto& s : rep.per_sample)
        if (s.deepest_m > 0) ++rep.successes;
    rep.fraction = make_rational(Int(rep.successes), Int(samples));
    return rep;
}

}  // namespace univoq
