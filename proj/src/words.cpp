#include <univoq/words.hpp>

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace univoq {

Alphabet::Alphabet(int m) : M(m) {
    if (m < 1) throw std::invalid_argument("alphabet needs M >= 1");
}

Word::Word(std::vector<int> d, int m) : digits(std::move(d)), M(m) {
    for (int x : digits)
        if (x < 0 || x > M) throw std::invalid_argument("digit out of [0, M]");
}

Word Word::reflected() const {
    Word r = *this;
    for (int& d : r.digits) d = M - d;
    return r;
}

Word Word::prefix(size_t n) const {
    Word r;
    r.M = M;
    r.digits.assign(digits.begin(), digits.begin() + std::min(n, digits.size()));
    return r;
}

bool Word::all_equal_to(int d) const {
    return std::all_of(digits.begin(), digits.end(), [&](int x) { return x == d; });
}

std::string Word::to_string() const {
    if (M > 9) throw std::logic_error("digit rendering requires M <= 9");
    std::string s;
    s.reserve(digits.size());
    for (int d : digits) s.push_back(static_cast<char>('0' + d));
    return s;
}

int lex_compare_words(const Word& a, const Word& b) {
    if (a.size() != b.size()) throw std::invalid_argument("lex_compare_words: lengths differ");
    for (size_t i = 0; i < a.size(); ++i) {
        if (a[i] < b[i]) return -1;
        if (a[i] > b[i]) return 1;
    }
    return 0;
}

PeriodicSeq::PeriodicSeq(Word preperiod, Word period)
    : preperiod_(std::move(preperiod)), period_(std::move(period)) {
    if (!preperiod_.empty() && !period_.empty() && preperiod_.M != period_.M)
        throw std::invalid_argument("mismatched alphabets");
    M_ = period_.empty() ? preperiod_.M : period_.M;
    preperiod_.M = period_.M = M_;
    canonicalize();
}

PeriodicSeq PeriodicSeq::constant(int digit, int M) {
    return PeriodicSeq(Word({}, M), Word({digit}, M));
}

PeriodicSeq PeriodicSeq::finite(Word w) {
    int m = w.M;
    return PeriodicSeq(std::move(w), Word({}, m));
}

void PeriodicSeq::canonicalize() {
    // all-zero period is the trailing-zero representation
    if (!period_.empty() && period_.all_equal_to(0)) period_.digits.clear();
    if (period_.empty()) {
        while (!preperiod_.digits.empty() && preperiod_.digits.back() == 0)
            preperiod_.digits.pop_back();
        return;
    }
    // minimal period: smallest divisor d of |period| with period = d-prefix repeated
    size_t p = period_.size();
    for (size_t d = 1; d < p; ++d) {
        if (p % d != 0) continue;
        bool ok = true;
        for (size_t i = d; i < p && ok; ++i) ok = period_.digits[i] == period_.digits[i % d];
        if (ok) {
            period_.digits.resize(d);
            p = d;
            break;
        }
    }
    // minimal preperiod: absorb matching tail digits into the rotation
    while (!preperiod_.digits.empty() && preperiod_.digits.back() == period_.digits.back()) {
        preperiod_.digits.pop_back();
        std::rotate(period_.digits.begin(), period_.digits.end() - 1, period_.digits.end());
    }
}

int PeriodicSeq::digit(size_t i) const {
    if (i == 0) throw std::invalid_argument("digits are 1-indexed");
    size_t idx = i - 1;
    if (idx < preperiod_.size()) return preperiod_[idx];
    if (period_.empty()) return 0;
    return period_[(idx - preperiod_.size()) % period_.size()];
}

Word PeriodicSeq::prefix(size_t n) const {
    std::vector<int> d(n);
    for (size_t i = 0; i < n; ++i) d[i] = digit(i + 1);
    return Word(std::move(d), M_);
}

PeriodicSeq PeriodicSeq::reflected() const {
    Word pp = preperiod_.reflected();
    Word p = period_.empty() ? Word({M_}, M_) : period_.reflected();
    return PeriodicSeq(std::move(pp), std::move(p));
}

PeriodicSeq PeriodicSeq::shifted(size_t k) const {
    if (k <= preperiod_.size()) {
        Word pp;
        pp.M = M_;
        pp.digits.assign(preperiod_.digits.begin() + k, preperiod_.digits.end());
        return PeriodicSeq(std::move(pp), period_);
    }
    if (period_.empty()) return PeriodicSeq(Word({}, M_), Word({}, M_));
    size_t r = (k - preperiod_.size()) % period_.size();
    Word p = period_;
    std::rotate(p.digits.begin(), p.digits.begin() + r, p.digits.end());
    return PeriodicSeq(Word({}, M_), std::move(p));
}

bool PeriodicSeq::operator==(const PeriodicSeq& o) const {
    return M_ == o.M_ && preperiod_ == o.preperiod_ && period_ == o.period_;
}

std::string PeriodicSeq::to_string() const {
    std::string s = preperiod_.to_string();
    if (!period_.empty()) s += "(" + period_.to_string() + ")";
    return s;
}

PeriodicSeq PeriodicSeq::parse(const std::string& text, int M) {
    if (M > 9) throw std::invalid_argument("sequence parsing requires M <= 9");
    std::vector<int> pp, p;
    bool in_period = false, closed = false;
    for (char ch : text) {
        if (ch == '(') {
            if (in_period || closed) throw std::invalid_argument("bad sequence literal");
            in_period = true;
        } else if (ch == ')') {
            if (!in_period) throw std::invalid_argument("bad sequence literal");
            in_period = false;
            closed = true;
        } else if (ch >= '0' && ch <= '9') {
            if (closed) throw std::invalid_argument("digits after period");
            (in_period ? p : pp).push_back(ch - '0');
        } else {
            throw std::invalid_argument("bad character in sequence literal");
        }
    }
    if (in_period) throw std::invalid_argument("unterminated period");
    return PeriodicSeq(Word(std::move(pp), M), Word(std::move(p), M));
}

Cmp lex_compare(const PeriodicSeq& a, const PeriodicSeq& b) {
    // Two eventually periodic sequences that agree past both preperiods for a
    // full lcm of the periods agree everywhere.
    size_t pa = a.period_size(), pb = b.period_size();
    size_t l = std::lcm(pa, pb);
    size_t bound = std::max(a.preperiod_size(), b.preperiod_size()) + l;
    for (size_t i = 1; i <= bound; ++i) {
        int da = a.digit(i), db = b.digit(i);
        if (da < db) return Cmp::Less;
        if (da > db) return Cmp::Greater;
    }
    return Cmp::Equal;
}

Cmp lex_compare_prefix(const PeriodicSeq& a, const PeriodicSeq& b, size_t depth) {
    for (size_t i = 1; i <= depth; ++i) {
        int da = a.digit(i), db = b.digit(i);
        if (da < db) return Cmp::Less;
        if (da > db) return Cmp::Greater;
    }
    return Cmp::Undecided;
}

}  // namespace univoq
