#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace kahler {

struct QuadratureResult {
    double value = 0.0;
    double est_error = 0.0; // sum of |fine - coarse| over accepted panels
    std::size_t evaluations = 0;
};

namespace detail {

inline constexpr std::size_t kGaussPoints = 12;

struct GaussRule {
    std::array<double, kGaussPoints> nodes{};
    std::array<double, kGaussPoints> weights{};
};

// Legendre roots by Newton iteration from the Chebyshev guess.
inline GaussRule make_gauss_rule() {
    GaussRule rule;
    constexpr std::size_t n = kGaussPoints;
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double z = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) /
                            (static_cast<double>(n) + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0;
            double p2 = 0.0;
            for (std::size_t j = 1; j <= n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2.0 * static_cast<double>(j) - 1.0) * z * p2 -
                      (static_cast<double>(j) - 1.0) * p3) /
                     static_cast<double>(j);
            }
            dp = static_cast<double>(n) * (z * p1 - p2) / (z * z - 1.0);
            const double z_old = z;
            z = z_old - p1 / dp;
            if (std::abs(z - z_old) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - z * z) * dp * dp);
        rule.nodes[i] = -z;
        rule.nodes[n - 1 - i] = z;
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    return rule;
}

inline const GaussRule& gauss_rule() {
    static const GaussRule rule = make_gauss_rule();
    return rule;
}

template <typename F>
double gauss_panel(F& f, double a, double b, std::size_t& evals) {
    const auto& rule = gauss_rule();
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double sum = 0.0;
    for (std::size_t i = 0; i < kGaussPoints; ++i) {
        sum += rule.weights[i] * f(mid + half * rule.nodes[i]);
    }
    evals += kGaussPoints;
    return half * sum;
}

template <typename F>
void adapt(F& f, double a, double b, double whole, double tol, int depth, QuadratureResult& out) {
    const double mid = 0.5 * (a + b);
    const double left = gauss_panel(f, a, mid, out.evaluations);
    const double right = gauss_panel(f, mid, b, out.evaluations);
    const double diff = std::abs(left + right - whole);
    if (diff <= tol || depth <= 0 || mid <= a || mid >= b) {
        out.value += left + right;
        out.est_error += diff;
        return;
    }
    adapt(f, a, mid, left, 0.5 * tol, depth - 1, out);
    adapt(f, mid, b, right, 0.5 * tol, depth - 1, out);
}

} // namespace detail

/// Adaptive Gauss-Legendre quadrature of f over [a, b] by recursive
/// bisection: a panel is accepted once its two halves agree with the whole to
/// within its share of abs_tol. `breakpoints` (any order, outside points
/// ignored) are used as fixed panel edges; put integrable singularities there.
template <typename F>
QuadratureResult integrate_adaptive(F&& f, double a, double b, double abs_tol,
                                    std::initializer_list<double> breakpoints = {},
                                    int max_depth = 48) {
    if (!(abs_tol > 0.0)) {
        throw std::invalid_argument("integrate_adaptive: abs_tol must be positive");
    }
    QuadratureResult out;
    if (a == b) {
        return out;
    }
    const double sign = b < a ? -1.0 : 1.0;
    const double lo = std::min(a, b);
    const double hi = std::max(a, b);

    std::vector<double> edges{lo};
    std::vector<double> interior;
    for (double p : breakpoints) {
        if (p > lo && p < hi) {
            interior.push_back(p);
        }
    }
    std::sort(interior.begin(), interior.end());
    for (double p : interior) {
        if (p > edges.back()) {
            edges.push_back(p);
        }
    }
    edges.push_back(hi);

    const double span = hi - lo;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        const double pa = edges[i];
        const double pb = edges[i + 1];
        const double share = abs_tol * (pb - pa) / span;
        const double whole = detail::gauss_panel(f, pa, pb, out.evaluations);
        detail::adapt(f, pa, pb, whole, share, max_depth, out);
    }
    out.value *= sign;
    return out;
}

} // namespace kahler
