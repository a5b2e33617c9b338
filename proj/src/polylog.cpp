#include "kahler/polylog.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "kahler/errors.hpp"
#include "kahler/quadrature.hpp"

namespace kahler {

namespace {

constexpr double kPi2Over6 = std::numbers::pi * std::numbers::pi / 6.0;
constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr double kCircleTolerance = 1e-11;

// Direct sum for |x| <= 1/2. The tail after the last term is bounded by
// |x|^{J+1} / ((J+1)^2 (1-|x|)).
Li2Value li2_series(double x) {
    const double ax = std::abs(x);
    double sum = 0.0;
    double power = x;
    int j = 1;
    for (; j < 200; ++j) {
        const double term = power / (static_cast<double>(j) * j);
        sum += term;
        if (std::abs(term) < 1e-18 * std::abs(sum) || power == 0.0) {
            break;
        }
        power *= x;
    }
    const double next = static_cast<double>(j + 1);
    const double tail = std::pow(ax, next) / (next * next * (1.0 - ax));
    return {sum, tail + 4.0 * kEps * std::abs(sum)};
}

} // namespace

Li2Value li2_real(double x) {
    if (std::isnan(x) || x > 1.0) {
        throw DomainError("li2_real needs x <= 1, got " + std::to_string(x));
    }
    if (x == 1.0) {
        return {kPi2Over6, kEps * kPi2Over6};
    }
    if (std::abs(x) <= 0.5) {
        return li2_series(x);
    }
    if (x > 0.5) {
        const Li2Value r = li2_real(1.0 - x);
        const double log_term = std::log(x) * std::log1p(-x);
        const double value = kPi2Over6 - log_term - r.value;
        return {value, r.est_error + 4.0 * kEps * (kPi2Over6 + std::abs(log_term) + std::abs(value))};
    }
    if (x >= -1.0) {
        const Li2Value r = li2_real(x / (x - 1.0));
        const double l = std::log1p(-x);
        const double value = -r.value - 0.5 * l * l;
        return {value, r.est_error + 4.0 * kEps * (0.5 * l * l + std::abs(value))};
    }
    const Li2Value r = li2_real(1.0 / x);
    const double l = std::log(-x);
    const double value = -kPi2Over6 - 0.5 * l * l - r.value;
    return {value, r.est_error + 4.0 * kEps * (kPi2Over6 + 0.5 * l * l + std::abs(value))};
}

Li2Value re_li2_circle(double rho, double alpha) {
    if (std::isnan(rho) || rho < 0.0) {
        throw DomainError("re_li2_circle needs rho >= 0, got " + std::to_string(rho));
    }
    if (rho == 0.0) {
        return {0.0, 0.0};
    }
    // Fold alpha into [0, pi]; the integrand only sees cos(alpha).
    double a = std::remainder(alpha, 2.0 * std::numbers::pi);
    a = std::abs(a);
    if (a == 0.0) {
        return li2_real(-rho);
    }
    const double c = std::cos(a);
    const double s = std::sin(a);
    // log(1 + 2 y c + y^2) / y; near the minimiser write the argument as
    // (y + c)^2 + s^2 to keep relative accuracy where it approaches zero.
    auto integrand = [c, s](double y) {
        const double u = y * (2.0 * c + y);
        if (u > -0.5) {
            return std::log1p(u) / y;
        }
        const double d = y + c;
        return std::log(d * d + s * s) / y;
    };
    const double minimiser = -c;
    const QuadratureResult q =
        integrate_adaptive(integrand, 0.0, rho, kCircleTolerance, {1.0, minimiser});
    const double value = -0.5 * q.value;
    return {value, 0.5 * q.est_error + 16.0 * kEps * std::abs(value)};
}

Li2Value li2_lower_bound(double rho) {
    if (std::isnan(rho) || rho < 0.0) {
        throw DomainError("li2_lower_bound needs rho >= 0, got " + std::to_string(rho));
    }
    if (rho <= 1.0) {
        return li2_real(rho);
    }
    const Li2Value r = li2_real(1.0 - rho);
    const double log_term = std::log(rho - 1.0) * std::log(rho);
    const double value = kPi2Over6 - r.value - log_term;
    return {value, r.est_error + 4.0 * kEps * (kPi2Over6 + std::abs(log_term) + std::abs(value))};
}

} // namespace kahler
