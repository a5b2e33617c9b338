#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kahler/bell.hpp"
#include "kahler/errors.hpp"

using kahler::BellInput;
using kahler::Rational;

namespace {

BellInput random_input(std::mt19937_64& rng, std::size_t m) {
    std::uniform_int_distribution<std::int64_t> num(-9, 9);
    std::uniform_int_distribution<std::int64_t> den(1, 7);
    std::vector<Rational> x;
    for (std::size_t j = 0; j < m; ++j) {
        x.emplace_back(num(rng), den(rng));
    }
    return BellInput(std::move(x));
}

BellInput ones(std::size_t m) { return BellInput(std::vector<Rational>(m, Rational(1))); }

const double kZeta2 = std::numbers::pi * std::numbers::pi / 6.0;

} // namespace

TEST_CASE("bell_partial_enum edge cases") {
    std::mt19937_64 rng(1);
    const BellInput x = random_input(rng, 10);
    for (std::size_t n = 1; n <= 10; ++n) {
        CHECK(kahler::bell_partial_enum(n, 1, x) == x(n));
        CHECK(kahler::bell_partial_enum(n, n, x) == x(1).pow(static_cast<unsigned>(n)));
    }
    CHECK(kahler::bell_partial_enum(3, 2, x) == Rational(3) * x(1) * x(2));
    CHECK_THROWS_AS(kahler::bell_partial_enum(3, 4, x), kahler::DomainError);
    CHECK_THROWS_AS(kahler::bell_partial_enum(3, 0, x), kahler::DomainError);
    CHECK_THROWS_AS(kahler::bell_partial_enum(5, 1, BellInput(std::vector<Rational>(3))),
                    kahler::InputTooShort);
    CHECK_THROWS_AS(kahler::bell_partial_enum(26, 2, ones(26)), kahler::DomainError);
    // Stirling numbers of the second kind: S(26, 25) = C(26, 2).
    CHECK(kahler::bell_partial_enum(26, 25, ones(26), true) == Rational(325));
}

TEST_CASE("bell_partial values") {
    std::mt19937_64 rng(2);
    const BellInput x = random_input(rng, 6);
    CHECK(kahler::bell_partial(4, 2, x) ==
          Rational(4) * x(1) * x(3) + Rational(3) * x(2) * x(2));
    const BellInput a = BellInput::factorial_over_square(4);
    // 12 (1/9 + 1/16 + 1/9) = 41/12
    CHECK(kahler::bell_partial(4, 2, a) == Rational(41, 12));
    CHECK(kahler::bell_partial(4, 2, a) == kahler::bell_partial_enum(4, 2, a));
    // Short inputs are fine as long as x_{n-k+1} exists.
    CHECK(kahler::bell_partial(5, 3, BellInput(std::vector<Rational>(3, Rational(1)))) ==
          Rational(25));
}

TEST_CASE("diagonal and first column for n <= 30") {
    std::mt19937_64 rng(3);
    const BellInput x = random_input(rng, 30);
    const kahler::BellTable table(x, 30);
    for (std::size_t n = 1; n <= 30; ++n) {
        CHECK(table.at(n, 1) == x(n));
        CHECK(table.at(n, n) == x(1).pow(static_cast<unsigned>(n)));
    }
    CHECK_THROWS_AS(table.at(31, 1), kahler::DomainError);
    CHECK_THROWS_AS(kahler::BellTable(x, 31), kahler::InputTooShort);
}

TEST_CASE("bell_partial_nested") {
    std::mt19937_64 rng(4);
    const BellInput x = random_input(rng, 8);
    CHECK(kahler::bell_partial_nested(3, 2, x) == Rational(3) * x(1) * x(2));
    for (std::size_t n = 2; n <= 8; ++n) {
        CHECK(kahler::bell_partial_nested(n, n, x) == x(1).pow(static_cast<unsigned>(n)));
    }
    // S(5, 3) = 25
    CHECK(kahler::bell_partial_nested(5, 3, ones(5)) == Rational(25));
    CHECK(kahler::bell_partial_nested(5, 3, ones(5)) == kahler::bell_partial_enum(5, 3, ones(5)));
    CHECK_THROWS_AS(kahler::bell_partial_nested(5, 1, x), kahler::DomainError);
    CHECK_THROWS_AS(kahler::bell_partial_nested(5, 6, x), kahler::DomainError);
}

TEST_CASE("three evaluators agree for 1 <= k <= n <= 12") {
    std::mt19937_64 rng(5);
    std::vector<BellInput> inputs{BellInput::factorial_over_square(12)};
    for (int i = 0; i < 4; ++i) {
        inputs.push_back(random_input(rng, 12));
    }
    for (const auto& x : inputs) {
        const kahler::BellTable table(x, 12);
        for (std::size_t n = 1; n <= 12; ++n) {
            for (std::size_t k = 1; k <= n; ++k) {
                const Rational e = kahler::bell_partial_enum(n, k, x);
                CHECK(table.at(n, k) == e);
                if (k >= 2) {
                    CHECK(kahler::bell_partial_nested(n, k, x) == e);
                }
            }
        }
    }
}

TEST_CASE("bell_complete") {
    std::mt19937_64 rng(6);
    const BellInput x = random_input(rng, 10);
    CHECK(kahler::bell_complete(0, x) == Rational(1));
    CHECK(kahler::bell_complete(1, x) == x(1));
    CHECK(kahler::bell_complete(3, ones(3)) == Rational(5));
    CHECK(kahler::bell_complete(10, ones(10)) == Rational(115975));
    CHECK_THROWS_AS(kahler::bell_complete(11, x), kahler::InputTooShort);
    for (std::size_t n = 1; n <= 10; ++n) {
        const Rational r(-3, 2);
        CHECK(kahler::bell_complete(n, x.rescaled(Rational(1), r)) ==
              r.pow(static_cast<unsigned>(n)) * kahler::bell_complete(n, x));
    }
}

TEST_CASE("homogeneity identity") {
    std::mt19937_64 rng(7);
    const BellInput x = random_input(rng, 8);
    CHECK(kahler::bell_homogeneity_check(6, 3, x, Rational(1), Rational(1)));
    CHECK(kahler::bell_homogeneity_check(6, 3, x, Rational(0), Rational(5, 3)));
    std::uniform_int_distribution<std::size_t> pick(1, 8);
    std::uniform_int_distribution<std::int64_t> num(-5, 5);
    std::uniform_int_distribution<std::int64_t> den(1, 4);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = pick(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, n)(rng);
        CHECK(kahler::bell_homogeneity_check(n, k, random_input(rng, 8), Rational(num(rng), den(rng)),
                                             Rational(num(rng), den(rng))));
    }
}

TEST_CASE("bell_ratio") {
    // 16 * (41/12) / 4! = 41/18
    CHECK(kahler::bell_ratio(2, 1) == Rational(41, 18));
    CHECK_THROWS_AS(kahler::bell_ratio(1, 2), kahler::DomainError);
    CHECK_THROWS_AS(kahler::bell_ratio(0, 1), kahler::DomainError);

    const kahler::BellTable table(BellInput::factorial_over_square(200), 200, 4);
    for (std::size_t k = 1; k <= 3; ++k) {
        const double limit = std::pow(kZeta2, double(k)) / std::tgamma(double(k) + 1.0);
        double prev = 1e300;
        for (std::size_t n : {25, 50, 100}) {
            const double err = std::abs(kahler::bell_ratio(table, n, k).to_double() - limit);
            CHECK(err < prev);
            prev = err;
        }
    }
}

TEST_CASE("A_j(k) recursion") {
    for (std::size_t k = 1; k <= 4; ++k) {
        CHECK(kahler::a_sequence(k, 1).front() == Rational(1));
    }
    // k = 1 unrolls to A_1 = 1, A_j = 1/j^2.
    const auto a1 = kahler::a_sequence(1, 30);
    for (std::size_t j = 2; j <= 30; ++j) {
        CHECK(a1[j - 1] == Rational(1, std::int64_t(j * j)));
    }
    Rational h(0);
    for (std::int64_t j = 1; j <= 30; ++j) {
        h += Rational(1, j * j);
    }
    CHECK(kahler::a_sequence_partial_sum(1, 30) == h);
    // k = 2: A_3(2) = 2/9 + 2 A_2(1)/4 = 2/9 + 1/8
    CHECK(kahler::a_sequence(2, 3)[2] == Rational(2, 9) + Rational(1, 8));

    const double s50 = kahler::a_sequence_partial_sum(2, 50).to_double();
    const double s200 = kahler::a_sequence_partial_sum(2, 200).to_double();
    CHECK(s200 > s50);
    CHECK(kahler::a_sequence_partial_sum(1, 200).to_double() < kZeta2);
    CHECK(kZeta2 - kahler::a_sequence_partial_sum(1, 200).to_double() < 1.0 / 199.0);
    CHECK_THROWS_AS(kahler::a_sequence(0, 5), kahler::DomainError);
}
