#pragma once

#include <univoq/entropy.hpp>

namespace univoq {

enum class DimMethod { ClosedFormAbove, ZeroBelowKL, Sandwich };

struct DimensionEstimate {
    Enclosure enclosure;
    DimMethod method = DimMethod::Sandwich;
    size_t depth = 0;
    bool certified_dimension_formula = false;
    // the base enclosure straddled the Komornik-Loreti enclosure; the result
    // is the conservative [0, upper]
    bool ambiguous_region = false;
    bool tol_reached = true;

    std::string method_name() const;
};

struct KLConstant {
    int M = 1;
    Enclosure enclosure;
    size_t certificate_depth = 0;
    // entropy certificates backing the bisection moves: zero entropy at and
    // below lo, positive entropy at and above hi
    bool entropy_certified = false;
    // in_univoque_U endpoint metadata at certificate_depth
    size_t lo_refuted_at = 0;  // violating shift index at the lower endpoint
    bool hi_verified = false;  // no violation found at the upper endpoint
    bool hi_proved = false;
    size_t hi_refuted_at = 0;       // set when the upper endpoint sits in a gap
    bool tm_cross_checked = false;  // M=1: independent Thue-Morse enclosure agreed
};

struct SigmaBound {
    int M = 1;
    int N = 2;
    Enclosure sigma;
    bool exact = false;       // sigma is an exact rational (enclosure degenerate)
    Enclosure separation_c;   // Lemma-5.1 style constant from the KL enclosure
};

// i-th digit (i >= 1) of the shifted Thue-Morse sequence: parity of the
// binary digit sum of i.
int thue_morse_digit(size_t i);

// Certified enclosure of the M=1 Komornik-Loreti constant as the root of
// sum tau_i x^-i = 1, by bisection with exact partial sums and tail bounds.
Enclosure kl_thue_morse_enclosure(const Rational& width);

// Smallest univoque base: bisection with the in_univoque_U predicate.
// The lower endpoint is exactly refuted, the upper endpoint verified to
// certificate_depth. For M=1 the result is cross-checked against the
// Thue-Morse series root.
KLConstant kl_constant(int M, const Rational& width, size_t depth = 0);

// Cached KL enclosure at width 1e-6, shared across dimension queries.
const KLConstant& kl_cached(int M);

struct DimensionOptions {
    size_t depth_cap = 4096;
    GraphBuilder builder = GraphBuilder::Automaton;
};

// Certified enclosure of the Hausdorff dimension of the univoque set.
DimensionEstimate dimension(const AlgebraicNumber& q, const Alphabet& alphabet,
                            const Rational& tol, const DimensionOptions& opts = {});

// Separation condition q^(n-N) (q-1) > M with N the first index where the
// alpha digits (beta for the W family) drop below M. Throws DepthExceeded
// when no such index shows up within digit_cap.
bool certify_separation(const AlgebraicNumber& q, const Alphabet& alphabet, size_t n,
                        bool use_beta = false, size_t digit_cap = 256);

struct SweepRow {
    Rational q;
    DimensionEstimate estimate;
    std::string error;  // empty on success
};

std::vector<SweepRow> staircase_sweep(const Alphabet& alphabet, const std::vector<Rational>& grid,
                                      const Rational& tol, unsigned jobs = 1,
                                      const DimensionOptions& opts = {});

std::string sweep_csv(const std::vector<SweepRow>& rows, unsigned precision = 6);
std::string sweep_json(const std::vector<SweepRow>& rows, unsigned precision = 6);

// -h / (q ln^2 q) with outward rounding; the derivative of h/ln q on an
// entropy plateau.
Enclosure plateau_derivative(const AlgebraicNumber& q, const Rational& h_nats);

// sigma(N) from (M+1)^N - 2 = (M+1)^(sigma N), exact when the left side is a
// pure power of M+1.
SigmaBound sigma_lower_bound(int M, int N);

// ((M+1)^N - 2)^(n-2) for n >= 2.
Int hatU_block_count(int M, int N, size_t n);

}  // namespace univoq
