#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "kahler/errors.hpp"
#include "kahler/rational.hpp"

using kahler::Rational;

namespace {

Rational random_rational(std::mt19937_64& rng) {
    std::uniform_int_distribution<std::int64_t> num(-1000000, 1000000);
    std::uniform_int_distribution<std::int64_t> den(1, 1000000);
    return Rational(num(rng), den(rng));
}

bool canonical(const Rational& r) {
    mpz_class g;
    mpz_class a = abs(r.numerator());
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), r.denominator().get_mpz_t());
    return r.denominator() > 0 && g == 1;
}

} // namespace

TEST_CASE("parse reduces and validates") {
    CHECK(Rational::parse("3/6") == Rational(1, 2));
    CHECK(Rational::parse("2") == Rational(2, 1));
    CHECK(Rational::parse("-4/10") == Rational(-2, 5));
    CHECK(Rational::parse("0/7").to_string() == "0");
    CHECK_THROWS_AS(Rational::parse("1/0"), kahler::ParseError);
    CHECK_THROWS_AS(Rational::parse(""), kahler::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/"), kahler::ParseError);
    CHECK_THROWS_AS(Rational::parse("+1"), kahler::ParseError);
    CHECK_THROWS_AS(Rational::parse("1.5"), kahler::ParseError);
    CHECK_THROWS_AS(Rational::parse("1/-2"), kahler::ParseError);
    CHECK_THROWS_AS(Rational::parse("--1"), kahler::ParseError);
}

TEST_CASE("construction normalises sign and gcd") {
    const Rational r(6, -4);
    CHECK(r.to_string() == "-3/2");
    CHECK(r.denominator() == 2);
    CHECK_THROWS_AS(Rational(1, 0), kahler::DomainError);
    CHECK_THROWS_AS(Rational(1) / Rational(0), kahler::DomainError);
}

TEST_CASE("ring axioms hold exactly on random rationals") {
    std::mt19937_64 rng(20240611);
    for (int i = 0; i < 300; ++i) {
        const Rational a = random_rational(rng);
        const Rational b = random_rational(rng);
        const Rational c = random_rational(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a + b == b + a);
        CHECK(a - a == Rational(0));
        CHECK(canonical(a * b + c));
        CHECK(canonical(a - b * c));
        if (!b.is_zero()) {
            CHECK((a / b) * b == a);
            CHECK(canonical(a / b));
        }
    }
}

TEST_CASE("string round trip") {
    std::mt19937_64 rng(7);
    for (int i = 0; i < 100; ++i) {
        const Rational a = random_rational(rng) * random_rational(rng);
        CHECK(Rational::parse(a.to_string()) == a);
    }
}

TEST_CASE("factorials, binomials and powers") {
    CHECK(kahler::factorial(0) == Rational(1));
    CHECK(kahler::factorial(10) == Rational(3628800));
    CHECK(kahler::binomial(10, 3) == Rational(120));
    CHECK(Rational(-2, 3).pow(3) == Rational(-8, 27));
    CHECK(Rational(5, 7).pow(0) == Rational(1));
    CHECK(Rational(1, 3).to_double() == doctest::Approx(1.0 / 3.0));
    CHECK(Rational(1, 2) < Rational(2, 3));
}
