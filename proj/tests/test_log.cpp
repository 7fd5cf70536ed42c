#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <univoq/log_enclosure.hpp>

using namespace univoq;

TEST_CASE("log enclosure brackets known constants") {
    Enclosure l2 = log_enclosure(Rational(2), 80);
    CHECK(l2.lo < parse_rational("0.69314718055994531"));
    CHECK(l2.hi > parse_rational("0.69314718055994530"));
    CHECK(l2.width() < make_rational(1, Int(1) << 76));

    Enclosure l10 = log_enclosure(Rational(10), 80);
    CHECK(l10.lo < parse_rational("2.302585092994046"));
    CHECK(l10.hi > parse_rational("2.302585092994045"));

    Enclosure lhalf = log_enclosure(make_rational(1, 2), 80);
    CHECK(lhalf.hi < 0);
    CHECK(lhalf.lo > parse_rational("-0.6931471805599454"));
}

TEST_CASE("log of one is a tight zero") {
    Enclosure l1 = log_enclosure(Rational(1), 80);
    CHECK(l1.contains(Rational(0)));
    CHECK(l1.width() <= make_rational(1, Int(1) << 76));
}

TEST_CASE("log is additive across enclosures") {
    Enclosure a = log_enclosure(make_rational(3, 2), 80);
    Enclosure b = log_enclosure(make_rational(4, 3), 80);
    Enclosure sum = enc_add(a, b);
    Enclosure l2 = log_enclosure(Rational(2), 80);
    CHECK(sum.lo <= l2.hi);
    CHECK(sum.hi >= l2.lo);
}

TEST_CASE("ratio of logs recovers integer exponents") {
    Enclosure num = log_enclosure(Rational(4), 96);
    Enclosure den = log_enclosure(Rational(2), 96);
    Enclosure r = enc_div(num, den);
    CHECK(r.contains(Rational(2)));
    CHECK(r.width() < make_rational(1, Int(1) << 80));
}

TEST_CASE("enclosure arithmetic rounds outward and guards zero division") {
    Enclosure a(make_rational(1, 3), make_rational(1, 2));
    Enclosure b(make_rational(-1, 5), make_rational(1, 7));
    Enclosure p = enc_mul(a, b);
    CHECK(p.lo == make_rational(-1, 10));
    CHECK(p.hi == make_rational(1, 14));
    CHECK_THROWS_AS(enc_div(a, b), std::domain_error);
    Enclosure r = enc_round(Enclosure(make_rational(1, 3), make_rational(1, 3)), 8);
    CHECK(r.lo <= make_rational(1, 3));
    CHECK(r.hi >= make_rational(1, 3));
    CHECK(r.width() <= make_rational(2, 256));
}

TEST_CASE("log rejects non-positive arguments") {
    CHECK_THROWS_AS(log_enclosure(Rational(0), 64), std::domain_error);
    CHECK_THROWS_AS(log_enclosure(Rational(-3), 64), std::domain_error);
}

TEST_CASE("log enclosure over an interval is monotone-outward") {
    Enclosure x(make_rational(3, 2), Rational(5));
    Enclosure l = log_enclosure(x, 64);
    CHECK(l.lo <= parse_rational("0.405465109"));
    CHECK(l.hi >= parse_rational("1.609437912"));
    CHECK(l.lo > parse_rational("0.40546510"));
    CHECK(l.hi < parse_rational("1.60943792"));
}
