#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace univoq {

// Digit alphabet {0, ..., M}.
struct Alphabet {
    int M = 1;
    explicit Alphabet(int m);
    int size() const { return M + 1; }
    int reflect(int digit) const { return M - digit; }
};

// Finite digit word over {0..M}.
struct Word {
    std::vector<int> digits;
    int M = 1;

    Word() = default;
    Word(std::vector<int> d, int m);
    size_t size() const { return digits.size(); }
    bool empty() const { return digits.empty(); }
    int operator[](size_t i) const { return digits[i]; }
    bool operator==(const Word& o) const { return digits == o.digits && M == o.M; }

    Word reflected() const;
    Word prefix(size_t n) const;
    bool all_equal_to(int d) const;

    // "110" style rendering; requires M <= 9.
    std::string to_string() const;
};

// Lexicographic comparison of equal-length words.
int lex_compare_words(const Word& a, const Word& b);

enum class Cmp : int8_t { Less = -1, Equal = 0, Greater = 1, Undecided = 2 };

// Eventually periodic digit sequence: preperiod then period repeated.
// Empty period encodes a trailing-zero tail. Canonical form has minimal
// period and minimal preperiod.
class PeriodicSeq {
public:
    PeriodicSeq() = default;
    PeriodicSeq(Word preperiod, Word period);
    static PeriodicSeq constant(int digit, int M);
    static PeriodicSeq finite(Word w);  // w followed by zeros

    const Word& preperiod() const { return preperiod_; }
    const Word& period() const { return period_; }
    int M() const { return M_; }
    bool eventually_zero() const { return period_.empty(); }

    // 1-indexed digit access.
    int digit(size_t i) const;
    Word prefix(size_t n) const;

    PeriodicSeq reflected() const;
    PeriodicSeq shifted(size_t k) const;  // drop the first k digits

    bool operator==(const PeriodicSeq& o) const;

    // Number of digits after which the sequence is purely periodic; the shift
    // orbit {shifted(k)} has at most preperiod+period distinct elements.
    size_t preperiod_size() const { return preperiod_.size(); }
    size_t period_size() const { return period_.empty() ? 1 : period_.size(); }

    // "110(10)" = preperiod 110, period 10; trailing zeros render as "110".
    std::string to_string() const;
    static PeriodicSeq parse(const std::string& text, int M);

private:
    void canonicalize();
    Word preperiod_;
    Word period_;
    int M_ = 1;
};

// Exact lexicographic comparison of eventually periodic sequences.
Cmp lex_compare(const PeriodicSeq& a, const PeriodicSeq& b);

// Prefix comparison to a finite depth; Undecided when equal through depth.
Cmp lex_compare_prefix(const PeriodicSeq& a, const PeriodicSeq& b, size_t depth);

}  // namespace univoq
