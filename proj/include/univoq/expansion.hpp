#pragma once

#include <univoq/algebraic.hpp>
#include <univoq/errors.hpp>
#include <univoq/words.hpp>

#include <memory>
#include <optional>

namespace univoq {

// Lazily generated digit sequence of a greedy or quasi-greedy expansion.
// Digits are memoized; concurrent reads return identical values.
class DigitStream {
public:
    enum class Mode { Greedy, QuasiGreedy };

    DigitStream(AlgebraicNumber q, Alphabet alphabet, Mode mode);

    int digit(size_t i) const;  // 1-indexed
    Word prefix(size_t n) const;

    // Set when the greedy remainder hit an exact zero: index of the last
    // nonzero digit.
    std::optional<size_t> finite_at() const;
    // Set when the exact remainder state repeated: the sequence is known
    // eventually periodic. Digits must have been generated past the cycle.
    std::optional<PeriodicSeq> detected_cycle() const;

    const AlgebraicNumber& base() const;
    int M() const;

private:
    struct Impl;
    std::shared_ptr<Impl> impl_;
};

// Greedy or quasi-greedy expansion of 1 with exactness information. When
// `exact` the sequence is the eventually periodic `periodic`; otherwise only
// `stream` is meaningful (aperiodic as far as was explored).
struct ExpansionSeq {
    bool exact = false;
    PeriodicSeq periodic;
    std::optional<DigitStream> stream;

    int digit(size_t i) const { return exact ? periodic.digit(i) : stream->digit(i); }
    Word prefix(size_t n) const;
};

// First n digits of the greedy expansion beta(q) of 1. Requires 1 < q <= M+1.
Word greedy_expansion(const AlgebraicNumber& q, const Alphabet& alphabet, size_t depth);

// beta(q) with finiteness detected exactly within detect_cap digits.
ExpansionSeq beta_of(const AlgebraicNumber& q, const Alphabet& alphabet,
                     size_t detect_cap = 256);

// alpha(q), the lexicographically largest infinite expansion of 1. Exact
// (periodic) whenever beta(q) is finite or an exact remainder cycle shows up
// within detect_cap digits.
ExpansionSeq quasi_greedy_expansion(const AlgebraicNumber& q, const Alphabet& alphabet,
                                    size_t detect_cap = 256);

// The raw quasi-greedy digit recursion; used as an independent cross-check of
// quasi_greedy_expansion's Lemma-2.4 construction.
DigitStream quasi_greedy_stream(const AlgebraicNumber& q, const Alphabet& alphabet);

// Exact value of sum c_i q^-i as a ratio of integer polynomials in q with
// positive denominator.
class PiValue {
public:
    PiValue(AlgebraicNumber q, IntPolynomial num, IntPolynomial den);

    // sign of (value - r), exact
    int compare_to(const Rational& r) const;
    Enclosure enclosure(const Rational& width) const;
    // exact rational value when q is rational
    Rational exact_rational() const;

    const IntPolynomial& num() const { return num_; }
    const IntPolynomial& den() const { return den_; }

private:
    AlgebraicNumber q_;
    IntPolynomial num_, den_;
};

PiValue eval_pi(const AlgebraicNumber& q, const PeriodicSeq& c);

// Finite Parry condition: w is a prefix of the greedy expansion of 1 in some
// base iff w1 >= 1 and every suffix is lexicographically <= the same-length
// prefix.
bool is_greedy_admissible(const Word& w);

struct UniquenessResult {
    bool unique = false;
    bool proved = false;   // false means verified only to `depth`
    size_t depth = 0;
};

// Lexicographic uniqueness test for the expansion c of pi_q(c).
UniquenessResult is_unique_expansion(const AlgebraicNumber& q, const Alphabet& alphabet,
                                     const PeriodicSeq& c, size_t compare_depth = 512);

// Same test with alpha(q) precomputed, for sweeps over many sequences at one
// base.
UniquenessResult is_unique_expansion(const ExpansionSeq& alpha, const Alphabet& alphabet,
                                     const PeriodicSeq& c, size_t compare_depth = 512);

struct Verdict {
    enum class Status { Proved, VerifiedTo, RefutedAt } status;
    size_t index = 0;  // depth for VerifiedTo, violating shift for RefutedAt

    bool holds() const { return status != Status::RefutedAt; }
    bool proved() const { return status == Status::Proved; }
};

// Univoque-base test: beta(q) satisfies the two-sided strict shift
// inequalities. Refutation is exact, verification depth-limited unless the
// expansion is eventually periodic.
Verdict in_univoque_U(const AlgebraicNumber& q, const Alphabet& alphabet, size_t depth);

// Closure test on alpha(q): reflected alpha < shifted alpha <= alpha.
Verdict in_U_closure(const AlgebraicNumber& q, const Alphabet& alphabet, size_t depth);

}  // namespace univoq
