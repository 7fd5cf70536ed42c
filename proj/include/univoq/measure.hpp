#pragma once

#include <univoq/expansion.hpp>
#include <univoq/log_enclosure.hpp>

namespace univoq {

// Greedy-prefix interval data: q1 solves sum eta_i x^-i = 1, q3 adds the
// extra digit 1 at position n+t, q2 fills everything past n with M.
struct IntervalTriple {
    Word prefix;
    unsigned t = 1;
    AlgebraicNumber q1, q2, q3;
    bool boundary = false;  // q1 == 1 (degenerate left endpoint)

    IntervalTriple() : q1(AlgebraicNumber::from_rational(1)), q2(q1), q3(q1) {}
};

IntervalTriple interval_triple(const Alphabet& alphabet, const Word& prefix, unsigned t);

struct RatioBoundResult {
    Enclosure ratio;  // (q3-q1)/(q2-q1)
    Enclosure bound;  // (q1-1)^3 / (M^2 q2^(t+2))
    bool holds = false;
};

// Certified evaluation of both sides of the interval-ratio inequality, each
// enclosure refined to at most `width`. A certified violation throws
// InternalConsistencyAlarm: the inequality is a theorem, so a violation
// means an implementation bug.
RatioBoundResult check_ratio_bound(const IntervalTriple& triple,
                                   const Rational& width = Rational(1, 1 << 20));

// Closed-form lower bound (p-1)^3 / (M^2 r^(t+2)) * (r-p) on the measure of
// bases in [p, r) whose greedy digits n+1..n+t vanish.
Enclosure measure_lower_bound(int M, const Rational& p, const Rational& r, unsigned t);

// Empirical companion: fraction of sampled bases in [p, r) with
// beta_{n+1} = ... = beta_{n+t} = 0.
Rational measure_empirical_fraction(int M, const Rational& p, const Rational& r, unsigned n,
                                    unsigned t, unsigned samples, uint64_t seed);

struct DivergentSchedule {
    Rational s;
    std::vector<unsigned> terms;
    Rational partial_sum_inverse;  // sum of s^-n_k over emitted terms
};

// Greedy minimal n_k with s^(n_k) > n_1 + ... + n_k.
DivergentSchedule divergent_schedule(const Rational& s, size_t count);

struct ZeroRunSample {
    Rational q;
    size_t deepest_m = 0;  // deepest m <= depth whose prefix ends with > log_r m zeros
};

struct ZeroRunReport {
    int M = 1;
    Rational r;
    unsigned samples = 0;
    size_t depth = 0;
    uint64_t seed = 0;
    unsigned successes = 0;
    Rational fraction;
    std::vector<ZeroRunSample> per_sample;

    std::string to_json(unsigned precision = 12) const;
    std::string to_csv(unsigned precision = 20) const;
};

ZeroRunReport zero_run_experiment(int M, const Rational& r, unsigned samples, size_t depth,
                                  uint64_t seed, unsigned jobs = 1);

}  // namespace univoq
