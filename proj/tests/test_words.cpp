#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <univoq/words.hpp>

#include <random>

using namespace univoq;

TEST_CASE("word basics and reflection") {
    Word w({1, 1, 0, 1}, 1);
    CHECK(w.to_string() == "1101");
    CHECK(w.reflected().to_string() == "0010");
    Word v({2, 1, 2, 1}, 2);
    CHECK(v.reflected().to_string() == "0101");
    CHECK_THROWS(Word({3}, 2));
}

TEST_CASE("reflection is an involution on random words") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        int M = 1 + static_cast<int>(rng() % 3);
        std::vector<int> d(1 + rng() % 12);
        for (auto& x : d) x = static_cast<int>(rng() % (M + 1));
        Word w(d, M);
        CHECK(w.reflected().reflected() == w);
    }
}

TEST_CASE("periodic sequence digit access and canonical form") {
    PeriodicSeq s(Word({1, 1, 0}, 1), Word({1, 0}, 1));  // 110(10)
    CHECK(s.digit(1) == 1);
    CHECK(s.digit(3) == 0);
    CHECK(s.digit(4) == 1);
    CHECK(s.digit(5) == 0);
    CHECK(s.digit(6) == 1);
    // canonical form absorbs the redundant preperiod digits: 110(10) = 1(10)
    CHECK(s.preperiod_size() == 1);
    CHECK(s.period().to_string() == "10");

    PeriodicSeq t(Word({}, 1), Word({1, 0, 1, 0}, 1));
    CHECK(t.period().to_string() == "10");  // minimal period

    PeriodicSeq z = PeriodicSeq::finite(Word({1, 1, 0, 0}, 1));
    CHECK(z.eventually_zero());
    CHECK(z.preperiod().to_string() == "11");
    CHECK(z.digit(2) == 1);
    CHECK(z.digit(3) == 0);
    CHECK(z.digit(100) == 0);
}

TEST_CASE("sequence text format round trips") {
    PeriodicSeq s = PeriodicSeq::parse("110(10)", 1);
    CHECK(s.digit(1) == 1);
    CHECK(s.digit(4) == 1);
    CHECK(s.to_string() == "1(10)");  // canonical rendering
    CHECK(PeriodicSeq::parse(s.to_string(), 1) == s);
    CHECK(PeriodicSeq::parse("110", 1).eventually_zero());
    CHECK_THROWS(PeriodicSeq::parse("1(1", 1));
    CHECK_THROWS(PeriodicSeq::parse("1)1", 1));
    CHECK_THROWS(PeriodicSeq::parse("1(2)", 1));
}

TEST_CASE("shift of a periodic sequence") {
    PeriodicSeq s(Word({1, 1, 0}, 1), Word({1, 0}, 1));
    PeriodicSeq sh = s.shifted(2);
    for (size_t i = 1; i <= 20; ++i) CHECK(sh.digit(i) == s.digit(i + 2));
    PeriodicSeq deep = s.shifted(7);
    for (size_t i = 1; i <= 20; ++i) CHECK(deep.digit(i) == s.digit(i + 7));
}

TEST_CASE("exact lexicographic comparison of periodic sequences") {
    PeriodicSeq a(Word({}, 1), Word({1, 0}, 1));   // (10)^inf
    PeriodicSeq b(Word({}, 1), Word({0, 1}, 1));   // (01)^inf
    CHECK(lex_compare(a, b) == Cmp::Greater);
    CHECK(lex_compare(b, a) == Cmp::Less);
    CHECK(lex_compare(a, a) == Cmp::Equal);

    // 110^inf vs (110)^inf differ at index 4
    PeriodicSeq fin = PeriodicSeq::finite(Word({1, 1, 0}, 1));
    PeriodicSeq per(Word({}, 1), Word({1, 1, 0}, 1));
    CHECK(lex_compare(fin, per) == Cmp::Less);

    // equal sequences written with different period alignments
    PeriodicSeq x(Word({1}, 1), Word({0, 1}, 1));
    PeriodicSeq y(Word({1, 0}, 1), Word({1, 0}, 1));
    CHECK(lex_compare(x, y) == Cmp::Equal);
    CHECK(x == y);
}

TEST_CASE("prefix comparison reports undecided on agreement") {
    PeriodicSeq a(Word({}, 1), Word({1, 0}, 1));
    PeriodicSeq b(Word({1, 0}, 1), Word({1, 0}, 1));
    CHECK(lex_compare_prefix(a, b, 64) == Cmp::Undecided);
    PeriodicSeq c(Word({1, 1}, 1), Word({1, 0}, 1));
    CHECK(lex_compare_prefix(a, c, 64) == Cmp::Less);
}

TEST_CASE("lex_compare_words requires equal lengths") {
    Word a({1, 0}, 1), b({1, 0, 1}, 1);
    CHECK_THROWS(lex_compare_words(a, b));
    CHECK(lex_compare_words(a, Word({0, 1}, 1)) == 1);
}
