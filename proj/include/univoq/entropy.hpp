#pragma once

#include <univoq/log_enclosure.hpp>
#include <univoq/sft.hpp>

namespace univoq {

struct PerronBounds {
    Enclosure spectral_radius;
    size_t component_count = 0;  // strongly connected components of the graph
    bool irreducible = false;
    bool tol_reached = true;
};

// Certified spectral radius of the adjacency (with edge multiplicities) via
// per-component Collatz-Wielandt ratios of a shifted power iteration. All
// arithmetic is rational with denominator-capped outward rounding.
PerronBounds perron_bounds(const EdgeGraph& g, const Rational& tol,
                           size_t max_iters = 10000, unsigned prec_bits = 256);

enum class EntropySource { Sandwich, ClosedForm, Zero };

struct EntropyBounds {
    Rational lower{0};
    Rational upper{0};
    size_t depth = 0;
    EntropySource source = EntropySource::Sandwich;
    bool tol_reached = false;

    Rational gap() const { return upper - lower; }
    std::string to_json() const;
};

enum class GraphBuilder { Naive, Automaton };

// Topological entropy enclosure (nats) of the window SFT; an empty language
// reports zero.
Enclosure entropy_of(const ForbiddenSpec& spec, const Rational& tol,
                     GraphBuilder builder = GraphBuilder::Automaton);

// One sandwich level: lower from the strict spec, upper from the closed
// specs. lower.lo <= h(U'_q) <= upper.hi for every 1 < q <= M+1.
struct SandwichLevel {
    Enclosure lower;
    Enclosure upper;
};
SandwichLevel sandwich(const AlgebraicNumber& q, const Alphabet& alphabet, size_t n,
                       const Rational& tol, GraphBuilder builder = GraphBuilder::Automaton);

struct RefineOptions {
    size_t start_depth = 4;
    size_t depth_cap = 4096;
    GraphBuilder builder = GraphBuilder::Automaton;
    // called per depth with the running bounds, for reporting
    std::function<void(size_t, const Rational&, const Rational&)> on_level;
};

// Monotone refinement along the doubling depth schedule; running max of
// lower bounds and min of upper bounds. tol_reached=false is a sound partial
// result, not a failure.
EntropyBounds refine_entropy(const AlgebraicNumber& q, const Alphabet& alphabet,
                             const Rational& tol, const RefineOptions& opts = {});

}  // namespace univoq
