#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <univoq/measure.hpp>

#include <random>

using namespace univoq;

namespace {

Word mk(std::initializer_list<int> d, int M) { return Word(std::vector<int>(d), M); }

// random greedy-admissible prefix with a digit below M and q1 > 1
Word random_prefix(std::mt19937& rng, int M) {
    for (;;) {
        size_t len = 1 + rng() % 8;
        std::vector<int> d(len);
        for (auto& x : d) x = static_cast<int>(rng() % (M + 1));
        d[0] = 1 + static_cast<int>(rng() % M);
        Word w(d, M);
        if (!is_greedy_admissible(w)) continue;
        bool below = false;
        long sum = 0;
        for (int x : d) {
            below = below || x < M;
            sum += x;
        }
        if (!below || sum <= 1) continue;
        return w;
    }
}

}  // namespace

TEST_CASE("interval triple reproduces golden, tribonacci and 2") {
    IntervalTriple tr = interval_triple(Alphabet(1), mk({1, 1}, 1), 1);
    CHECK(!tr.boundary);
    CHECK(compare(tr.q1, golden_ratio()) == 0);
    CHECK(compare(tr.q3, tribonacci_constant()) == 0);
    CHECK(compare(tr.q2, AlgebraicNumber::from_rational(Rational(2))) == 0);
}

TEST_CASE("interval triple flags the degenerate left endpoint") {
    IntervalTriple tr = interval_triple(Alphabet(1), mk({1}, 1), 1);
    CHECK(tr.boundary);
    CHECK(compare(tr.q1, Rational(1)) == 0);
    CHECK_THROWS_AS(check_ratio_bound(tr), DegenerateBoundary);
    CHECK_THROWS_AS(interval_triple(Alphabet(1), mk({0, 1}, 1), 1), NotAdmissible);
}

TEST_CASE("interval triple over the ternary alphabet") {
    IntervalTriple tr = interval_triple(Alphabet(2), mk({2}, 2), 2);
    CHECK(compare(tr.q1, Rational(2)) == 0);
    CHECK(compare(tr.q2, Rational(3)) == 0);
    AlgebraicNumber q3 = refine(tr.q3, make_rational(1, 1 << 20));
    CHECK(q3.lo() > parse_rational("2.205"));
    CHECK(q3.hi() < parse_rational("2.206"));
}

TEST_CASE("ratio bound on the golden triple to three decimals") {
    IntervalTriple tr = interval_triple(Alphabet(1), mk({1, 1}, 1), 1);
    RatioBoundResult res = check_ratio_bound(tr);
    CHECK(res.holds);
    CHECK(res.ratio.lo > parse_rational("0.5792"));
    CHECK(res.ratio.hi < parse_rational("0.5794"));
    CHECK(res.bound.lo > parse_rational("0.0294"));
    CHECK(res.bound.hi < parse_rational("0.0296"));
}

TEST_CASE("larger zero block shrinks the bound geometrically") {
    IntervalTriple t1 = interval_triple(Alphabet(1), mk({1, 1}, 1), 1);
    IntervalTriple t5 = interval_triple(Alphabet(1), mk({1, 1}, 1), 5);
    RatioBoundResult r1 = check_ratio_bound(t1);
    RatioBoundResult r5 = check_ratio_bound(t5);
    CHECK(r5.holds);
    // same q1, q2; bound scales by q2^-4 = 2^-4
    CHECK(compare(t5.q1, t1.q1) == 0);
    CHECK(compare(t5.q2, t1.q2) == 0);
    CHECK(r5.bound.hi * 15 < r1.bound.lo);
    CHECK(r5.bound.lo * 17 > r1.bound.hi);
}

TEST_CASE("ratio bound holds on the ternary single-digit prefix") {
    IntervalTriple tr = interval_triple(Alphabet(2), mk({2}, 2), 1);
    CHECK(check_ratio_bound(tr).holds);
}

TEST_CASE("ratio bound holds across a randomized admissible corpus") {
    std::mt19937 rng(20240607);
    int done = 0;
    while (done < 100) {
        int M = 1 + static_cast<int>(rng() % 2);
        Word prefix = random_prefix(rng, M);
        unsigned t = 1 + rng() % 4;
        IntervalTriple tr = interval_triple(Alphabet(M), prefix, t);
        if (tr.boundary || compare(tr.q1, tr.q2) == 0) continue;
        RatioBoundResult res = check_ratio_bound(tr);
        CHECK(res.holds);
        // strict ordering whenever the prefix has a digit below M
        CHECK(compare(tr.q1, tr.q3) < 0);
        CHECK(compare(tr.q3, tr.q2) < 0);
        ++done;
    }
    CHECK(done == 100);
}

TEST_CASE("measure lower bound closed form") {
    Enclosure b = measure_lower_bound(1, parse_rational("1.8"), Rational(2), 2);
    CHECK(b.lo == make_rational(4, 625));  // 0.0064 exactly
    CHECK(b.hi == b.lo);
    // monotone decay in t
    Rational prev = b.lo;
    for (unsigned t = 3; t <= 8; ++t) {
        Rational v = measure_lower_bound(1, parse_rational("1.8"), Rational(2), t).lo;
        CHECK(v < prev);
        CHECK(v > 0);
        prev = v;
    }
    // cubic vanishing near p = 1
    CHECK(measure_lower_bound(1, parse_rational("1.0001"), Rational(2), 1).hi <
          make_rational(1, 1000000000L));
    CHECK_THROWS_AS(measure_lower_bound(1, Rational(2), parse_rational("1.8"), 1),
                    std::range_error);
}

TEST_CASE("empirical zero-digit fraction clears the measure bound") {
    Rational p = parse_rational("1.8"), r(2);
    unsigned t = 2, n = 10, samples = 400;
    Rational fraction = measure_empirical_fraction(1, p, r, n, t, samples, 777);
    Enclosure bound = measure_lower_bound(1, p, r, t);
    // lambda >= bound, so the sampled fraction times (r-p) should not fall
    // 3 binomial sigmas below it
    Rational target = bound.lo / (r - p);
    // sqrt(p(1-p)/n) <= 1/(2 sqrt(n)); 3 sigma <= 3/(2*20) = 0.075
    CHECK(fraction >= target - make_rational(3, 40));
    CHECK(fraction > 0);
}

TEST_CASE("divergent schedule greedy terms") {
    DivergentSchedule s2 = divergent_schedule(Rational(2), 9);
    CHECK(s2.terms == std::vector<unsigned>{1, 2, 3, 4, 4, 5, 5, 5, 6});
    DivergentSchedule s4 = divergent_schedule(Rational(4), 5);
    CHECK(s4.terms == std::vector<unsigned>{1, 1, 1, 2, 2});
    CHECK_THROWS(divergent_schedule(Rational(1), 4));
}

TEST_CASE("divergent schedule satisfies its inequality termwise") {
    for (auto s : {Rational(2), make_rational(3, 2), Rational(4)}) {
        DivergentSchedule ds = divergent_schedule(s, 400);
        Rational running(0);
        for (unsigned nk : ds.terms) {
            running += nk;
            // n_k > log_s(S_k)  <=>  s^(n_k) > S_k
            CHECK(pow_rational(s, nk) > running);
        }
        // S_k grows at most linearly with k * n_k
        CHECK(running <= Rational(400) * ds.terms.back());
    }
}

TEST_CASE("divergent schedule partial sums keep growing") {
    Rational s1 = divergent_schedule(Rational(2), 1000).partial_sum_inverse;
    Rational s2 = divergent_schedule(Rational(2), 10000).partial_sum_inverse;
    Rational s3 = divergent_schedule(Rational(2), 100000).partial_sum_inverse;
    CHECK(s1 > parse_rational("1.555"));
    CHECK(s2 > s1 + make_rational(1, 10));
    CHECK(s3 > s2 + make_rational(1, 12));
    CHECK(s3 < Rational(2));
}

TEST_CASE("zero run experiment is deterministic and monotone in depth") {
    ZeroRunReport shallow = zero_run_experiment(1, Rational(2), 120, 60, 424242);
    ZeroRunReport deep = zero_run_experiment(1, Rational(2), 120, 120, 424242);
    REQUIRE(shallow.per_sample.size() == deep.per_sample.size());
    for (size_t i = 0; i < shallow.per_sample.size(); ++i) {
        CHECK(shallow.per_sample[i].q == deep.per_sample[i].q);
        // success at a shallow depth persists at a deeper one
        if (shallow.per_sample[i].deepest_m > 0) CHECK(deep.per_sample[i].deepest_m > 0);
        CHECK(deep.per_sample[i].deepest_m >= shallow.per_sample[i].deepest_m);
    }
    CHECK(deep.fraction >= shallow.fraction);
    ZeroRunReport again = zero_run_experiment(1, Rational(2), 120, 60, 424242);
    CHECK(again.fraction == shallow.fraction);
    CHECK(again.to_csv() == shallow.to_csv());
}

TEST_CASE("zero run experiment base cases") {
    ZeroRunReport one = zero_run_experiment(1, Rational(2), 60, 1, 7);
    CHECK(one.fraction == Rational(0));  // beta_1 >= 1, no trailing zero at m=1
    ZeroRunReport r = zero_run_experiment(2, make_rational(5, 2), 60, 80, 7);
    CHECK(r.fraction > 0);
    CHECK(r.to_json().find("\"samples\":60") != std::string::npos);
    CHECK_THROWS_AS(zero_run_experiment(1, Rational(3), 10, 10, 1), std::range_error);
}
