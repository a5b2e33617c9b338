#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "kahler/errors.hpp"
#include "kahler/polylog.hpp"
#include "kahler/quadrature.hpp"

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kPi2Over6 = kPi * kPi / 6.0;

// Re sum_j (-rho e^{i alpha})^j / j^2 for rho < 1.
double circle_series(double rho, double alpha) {
    double sum = 0.0;
    double power = 1.0;
    for (int j = 1; j < 5000; ++j) {
        power *= -rho;
        const double term = power * std::cos(j * alpha) / (double(j) * j);
        sum += term;
        if (std::abs(power) / (double(j) * j) < 1e-18) {
            break;
        }
    }
    return sum;
}

// -int_0^x log(1 - y)/y dy by quadrature, the defining integral of Li2.
double li2_by_quadrature(double x) {
    auto f = [](double y) { return -std::log1p(-y) / y; };
    return kahler::integrate_adaptive(f, 0.0, x, 1e-13, {1.0}).value;
}

} // namespace

TEST_CASE("li2_real special values") {
    CHECK(kahler::li2_real(0.0).value == 0.0);
    CHECK(std::abs(kahler::li2_real(1.0).value - kPi2Over6) < 1e-12);

    // Alternating series sum_{j>=1} (-1)^j / j^2, averaged over two
    // consecutive partial sums (error O(J^-3)).
    double s = 0.0;
    double prev = 0.0;
    const int terms = 200000;
    for (int j = 1; j <= terms; ++j) {
        prev = s;
        s += ((j % 2) ? -1.0 : 1.0) / (double(j) * j);
    }
    const double alternating = 0.5 * (s + prev);
    CHECK(std::abs(kahler::li2_real(-1.0).value - alternating) < 1e-12);
    CHECK(std::abs(kahler::li2_real(-1.0).value + kPi * kPi / 12.0) < 1e-12);

    // Li2(1/2) = pi^2/12 - ln^2(2)/2; Li2(phi^-2) = pi^2/15 - ln^2(phi).
    const double ln2 = std::log(2.0);
    CHECK(std::abs(kahler::li2_real(0.5).value - (kPi * kPi / 12.0 - 0.5 * ln2 * ln2)) < 1e-14);
    const double phi = 0.5 * (1.0 + std::sqrt(5.0));
    const double lp = std::log(phi);
    CHECK(std::abs(kahler::li2_real(1.0 / (phi * phi)).value - (kPi * kPi / 15.0 - lp * lp)) <
          1e-14);
    CHECK_THROWS_AS(kahler::li2_real(1.5), kahler::DomainError);
    CHECK_THROWS_AS(kahler::li2_real(std::nan("")), kahler::DomainError);
}

TEST_CASE("li2_real agrees with its defining integral and bounds its error") {
    for (double x : {-1e8, -1e4, -37.5, -3.0, -1.0, -0.75, -0.5, -0.1, 0.2, 0.5, 0.6, 0.9,
                     0.999}) {
        const auto v = kahler::li2_real(x);
        CHECK(v.est_error >= 0.0);
        CHECK(v.est_error <= 1e-12);
        if (x >= -40.0) {
            CHECK(std::abs(v.value - li2_by_quadrature(x)) < 1e-10);
        }
    }
    // Inversion formula against the asymptotic expansion for huge |x|.
    const double big = 1e8;
    const double l = std::log(big);
    const double asymptotic = -kPi2Over6 - 0.5 * l * l + 1.0 / big;
    CHECK(std::abs(kahler::li2_real(-big).value - asymptotic) < 1e-12);
}

TEST_CASE("cigar potential integral form") {
    auto f = [](double s) { return std::log1p(s) / s; };
    for (double x : {0.5, 1.0, 3.0, 10.0}) {
        const double q = kahler::integrate_adaptive(f, 0.0, x, 1e-13).value;
        CHECK(std::abs(-kahler::li2_real(-x).value - q) < 1e-10);
    }
}

TEST_CASE("re_li2_circle") {
    CHECK(kahler::re_li2_circle(0.0, 1.3).value == 0.0);
    for (double rho : {0.3, 1.0, 2.5, 40.0}) {
        CHECK(kahler::re_li2_circle(rho, 0.0).value == kahler::li2_real(-rho).value);
        CHECK(std::abs(kahler::re_li2_circle(rho, 2.0 * kPi).value - kahler::li2_real(-rho).value) <
              1e-12);
    }
    CHECK(std::abs(kahler::re_li2_circle(0.7, 1.0).value - circle_series(0.7, 1.0)) < 1e-9);
    CHECK_THROWS_AS(kahler::re_li2_circle(-0.1, 0.0), kahler::DomainError);

    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> rho_d(0.0, 0.9);
    std::uniform_real_distribution<double> alpha_d(0.0, 2.0 * kPi);
    for (int i = 0; i < 50; ++i) {
        const double rho = rho_d(rng);
        const double alpha = alpha_d(rng);
        const auto v = kahler::re_li2_circle(rho, alpha);
        CHECK(std::abs(v.value - circle_series(rho, alpha)) < 1e-9);
        CHECK(v.est_error < 1e-10);
    }
}

TEST_CASE("re_li2_circle symmetry") {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> rho_d(0.0, 6.0);
    std::uniform_real_distribution<double> alpha_d(0.0, 2.0 * kPi);
    for (int i = 0; i < 40; ++i) {
        const double rho = rho_d(rng);
        const double alpha = alpha_d(rng);
        const double v = kahler::re_li2_circle(rho, alpha).value;
        CHECK(std::abs(v - kahler::re_li2_circle(rho, -alpha).value) < 1e-12);
        CHECK(std::abs(v - kahler::re_li2_circle(rho, 2.0 * kPi - alpha).value) < 1e-12);
    }
}

TEST_CASE("circle real part is extremal at alpha = 0 and pi") {
    // log(1 + 2y cos(alpha) + y^2) is smallest at alpha = pi, so the real part
    // peaks there at li2_lower_bound(rho) and bottoms out at alpha = 0.
    for (double rho : {0.5, 2.0, 5.0}) {
        const double top = kahler::li2_lower_bound(rho).value;
        const double bottom = kahler::li2_real(-rho).value;
        for (int i = 0; i <= 128; ++i) {
            const double alpha = 2.0 * kPi * i / 128.0;
            const double v = kahler::re_li2_circle(rho, alpha).value;
            CHECK(v <= top + 1e-9);
            CHECK(v >= bottom - 1e-9);
        }
        CHECK(std::abs(kahler::re_li2_circle(rho, kPi).value - top) < 1e-9);
        CHECK(top > bottom);
    }
}

TEST_CASE("li2_lower_bound") {
    CHECK(kahler::li2_lower_bound(0.0).value == 0.0);
    CHECK(std::abs(kahler::li2_lower_bound(1.0).value - kPi2Over6) < 1e-12);
    // both branches meet at rho = 1
    CHECK(std::abs(kahler::li2_lower_bound(1.0 + 1e-9).value - kPi2Over6) < 1e-6);
    CHECK(std::abs(kahler::li2_lower_bound(1.0 - 1e-9).value - kPi2Over6) < 1e-6);
    CHECK(std::abs(kahler::li2_lower_bound(2.0).value - (kPi2Over6 + kPi * kPi / 12.0)) < 1e-12);

    auto f = [](double y) { return y == 1.0 ? 0.0 : -std::log(std::abs(1.0 - y)) / y; };
    for (double rho : {0.4, 2.0, 3.7, 12.0}) {
        const double q = kahler::integrate_adaptive(f, 0.0, rho, 1e-12, {1.0}).value;
        CHECK(std::abs(kahler::li2_lower_bound(rho).value - q) < 1e-9);
    }
    CHECK_THROWS_AS(kahler::li2_lower_bound(-1.0), kahler::DomainError);
}

TEST_CASE("integrate_adaptive") {
    auto poly = [](double x) { return 3.0 * x * x; };
    CHECK(std::abs(kahler::integrate_adaptive(poly, 0.0, 2.0, 1e-12).value - 8.0) < 1e-13);
    CHECK(std::abs(kahler::integrate_adaptive(poly, 2.0, 0.0, 1e-12).value + 8.0) < 1e-13);
    // int_0^1 log(x) dx = -1, endpoint singularity
    auto lg = [](double x) { return std::log(x); };
    CHECK(std::abs(kahler::integrate_adaptive(lg, 0.0, 1.0, 1e-12).value + 1.0) < 1e-10);
    CHECK_THROWS(kahler::integrate_adaptive(lg, 0.0, 1.0, 0.0));
}
