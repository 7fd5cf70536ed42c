#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <univoq/entropy.hpp>

#include <random>

using namespace univoq;

namespace {

// certified ln of an algebraic number via its refined isolating interval
Enclosure ln_of(const AlgebraicNumber& x, unsigned prec = 72) {
    AlgebraicNumber r = refine(x, make_rational(1, Int(1) << 40));
    return log_enclosure(Enclosure(r.lo(), r.hi()), prec);
}

ForbiddenSpec trib_v3() {
    return build_spec(tribonacci_constant(), Alphabet(1), 3, SftMode::ClosedV);
}

}  // namespace

TEST_CASE("perron bounds are exact on constant row sums") {
    ForbiddenSpec full = build_spec(AlgebraicNumber::from_rational(Rational(2)), Alphabet(1), 2,
                                    SftMode::ClosedV);
    EdgeGraph g = build_graph_naive(full);
    PerronBounds pb = perron_bounds(g, make_rational(1, 100000000));
    CHECK(pb.spectral_radius.lo == Rational(2));
    CHECK(pb.spectral_radius.hi == Rational(2));
    CHECK(pb.irreducible);
}

TEST_CASE("perron bounds enclose the golden ratio on the run-free shift") {
    EdgeGraph g = build_graph_naive(trib_v3());
    PerronBounds pb = perron_bounds(g, make_rational(1, Int(1) << 30));
    CHECK(pb.spectral_radius.width() <= make_rational(1, 100000000));
    // oracle: the golden ratio from its defining polynomial
    AlgebraicNumber phi = refine(golden_ratio(), make_rational(1, Int(1) << 50));
    CHECK(pb.spectral_radius.lo <= phi.hi());
    CHECK(pb.spectral_radius.hi >= phi.lo());
}

TEST_CASE("single self-loop has unit spectral radius") {
    EdgeGraph g;
    size_t v = g.add_vertex();
    g.add_edge(v, v, 0);
    PerronBounds pb = perron_bounds(g, make_rational(1, 1000));
    CHECK(pb.spectral_radius.lo == Rational(1));
    CHECK(pb.spectral_radius.hi == Rational(1));
    CHECK_THROWS_AS(perron_bounds(EdgeGraph{}, make_rational(1, 10)), EmptyGraph);
}

TEST_CASE("perron bounds on a reducible graph take the dominant component") {
    // two disjoint cycles: lengths 1 (self loop doubled => radius 2) and 2
    EdgeGraph g;
    size_t a = g.add_vertex();
    size_t b = g.add_vertex(), c = g.add_vertex();
    g.add_edge(a, a, 0);
    g.add_edge(a, a, 1);
    g.add_edge(b, c, 0);
    g.add_edge(c, b, 1);
    PerronBounds pb = perron_bounds(g, make_rational(1, 1000000));
    CHECK(pb.component_count == 2);
    CHECK(!pb.irreducible);
    CHECK(pb.spectral_radius.contains(Rational(2)));
    CHECK(pb.spectral_radius.width() <= make_rational(1, 1000000));
}

TEST_CASE("entropy of the full shift is ln(M+1)") {
    for (int M : {1, 2}) {
        ForbiddenSpec full = build_spec(AlgebraicNumber::from_rational(Rational(M + 1)),
                                        Alphabet(M), 2, SftMode::ClosedV);
        Enclosure h = entropy_of(full, make_rational(1, 1 << 20));
        Enclosure lnM1 = log_enclosure(Rational(M + 1), 80);
        CHECK(h.lo <= lnM1.hi);
        CHECK(h.hi >= lnM1.lo);
        CHECK(h.width() <= make_rational(1, 1 << 18));
    }
}

TEST_CASE("entropy of the run-free shift encloses ln golden") {
    Enclosure h = entropy_of(trib_v3(), make_rational(1, 1 << 24));
    Enclosure lnphi = ln_of(golden_ratio());
    CHECK(h.lo <= lnphi.hi);
    CHECK(h.hi >= lnphi.lo);
    CHECK(h.width() <= make_rational(1, 1 << 20));
}

TEST_CASE("empty window language has zero entropy") {
    ForbiddenSpec gold = build_spec(golden_ratio(), Alphabet(1), 2, SftMode::StrictU);
    Enclosure h = entropy_of(gold, make_rational(1, 100));
    CHECK(h.lo == Rational(0));
    CHECK(h.hi == Rational(0));
}

TEST_CASE("sandwich level at q = 2 matches the run-length oracle") {
    // strict window 4 at q=2 avoids 0000 and 1111; growth rate is the
    // tribonacci constant
    SandwichLevel lvl = sandwich(AlgebraicNumber::from_rational(Rational(2)), Alphabet(1), 4,
                                 make_rational(1, 1 << 24));
    Enclosure lntrib = ln_of(tribonacci_constant());
    CHECK(lvl.lower.lo <= lntrib.hi);
    CHECK(lvl.lower.hi >= lntrib.lo);
    Enclosure ln2 = log_enclosure(Rational(2), 72);
    CHECK(lvl.upper.lo <= ln2.hi);
    CHECK(lvl.upper.hi >= ln2.lo);
    CHECK(lvl.lower.lo <= lvl.upper.hi);
}

TEST_CASE("sandwich level just above golden has zero strict entropy") {
    SandwichLevel lvl = sandwich(AlgebraicNumber::from_rational(parse_rational("1.62")),
                                 Alphabet(1), 2, make_rational(1, 1024));
    CHECK(lvl.lower.lo == Rational(0));
    CHECK(lvl.lower.hi == Rational(0));
    CHECK(lvl.upper.hi >= Rational(0));
}

TEST_CASE("refined entropy at q = 2 converges to ln 2") {
    std::vector<std::pair<Rational, Rational>> trace;
    RefineOptions opts;
    opts.depth_cap = 64;
    opts.on_level = [&](size_t, const Rational& lo, const Rational& hi) {
        trace.emplace_back(lo, hi);
    };
    EntropyBounds h = refine_entropy(AlgebraicNumber::from_rational(Rational(2)), Alphabet(1),
                                     make_rational(1, 100), opts);
    CHECK(h.tol_reached);
    Enclosure ln2 = log_enclosure(Rational(2), 72);
    CHECK(h.lower <= ln2.hi);
    CHECK(h.upper >= ln2.lo);
    CHECK(h.upper - h.lower <= make_rational(1, 100));
    // upper bound is ln 2 up to rounding at every level
    for (auto& [lo, hi] : trace) CHECK(hi - ln2.hi <= make_rational(1, Int(1) << 40));
    // monotone refinement along the schedule
    for (size_t i = 1; i < trace.size(); ++i) {
        CHECK(trace[i].first >= trace[i - 1].first);
        CHECK(trace[i].second <= trace[i - 1].second);
    }
}

TEST_CASE("refined entropy at the tribonacci base encloses ln golden") {
    EntropyBounds h = refine_entropy(tribonacci_constant(), Alphabet(1), make_rational(1, 1000));
    CHECK(h.tol_reached);
    Enclosure lnphi = ln_of(golden_ratio());
    CHECK(h.lower <= lnphi.hi);
    CHECK(h.upper >= lnphi.lo);
    CHECK(h.upper - h.lower <= make_rational(1, 1000));
}

TEST_CASE("entropy bounds respect the block-count infimum") {
    // h = inf_k ln|B_k|/k, so every finite-k ratio dominates the lower bound
    std::vector<ForbiddenSpec> specs{
        trib_v3(),
        build_spec(AlgebraicNumber::from_rational(Rational(2)), Alphabet(1), 4, SftMode::StrictU),
        build_spec(AlgebraicNumber::from_rational(parse_rational("1.9")), Alphabet(1), 5,
                   SftMode::ClosedV)};
    for (const auto& spec : specs) {
        EdgeGraph g = build_graph_naive(spec);
        Enclosure h = entropy_of(spec, make_rational(1, 1 << 20));
        size_t nverts = 0;
        for (size_t v = 0; v < g.vertex_count(); ++v)
            if (g.walk_supporting()[v]) ++nverts;
        REQUIRE(nverts > 0);
        Enclosure lnV = log_enclosure(Rational(static_cast<long>(nverts)), 64);
        for (size_t k = 4; k <= 20; k += 4) {
            Int cnt = count_blocks(g, k).count;
            REQUIRE(cnt > 0);
            Enclosure ratio = log_enclosure(Rational(cnt), 64);
            ratio.lo /= static_cast<long>(k);
            ratio.hi /= static_cast<long>(k);
            // ln|B_k|/k >= h >= lower
            CHECK(ratio.hi >= h.lo);
            // two-sided: the ratio sits within 2 ln(V)/k of the enclosure
            CHECK(ratio.lo <= h.hi + 2 * lnV.hi / static_cast<long>(k));
        }
    }
}
