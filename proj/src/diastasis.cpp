#include "kahler/diastasis.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <thread>
#include <vector>

#include "kahler/errors.hpp"
#include "kahler/polylog.hpp"

namespace kahler {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

void require_modulus(double rho, const char* what) {
    if (!std::isfinite(rho) || rho < 0.0) {
        throw DomainError(std::string(what) + " must be a finite non-negative modulus, got " +
                          std::to_string(rho));
    }
}

bool is_diagonal_angle(double alpha) {
    return std::remainder(alpha, kTwoPi) == 0.0;
}

double closed_form(const PotentialSpec& spec, double rho1, double rho2, double alpha) {
    switch (spec.kind()) {
    case PotentialSpec::Kind::cigar:
        return cigar_diastasis(rho1, rho2, alpha);
    case PotentialSpec::Kind::fubini_study: {
        // log((1 + rho1^2)(1 + rho2^2) / |1 + z wbar|^2)
        const double p = rho1 * rho2;
        const double cross = is_diagonal_angle(alpha) ? (1.0 + p) * (1.0 + p)
                                                      : 1.0 + 2.0 * p * std::cos(alpha) + p * p;
        return std::log1p(rho1 * rho1) + std::log1p(rho2 * rho2) - std::log(cross);
    }
    case PotentialSpec::Kind::flat: {
        const double c = is_diagonal_angle(alpha) ? 1.0 : std::cos(alpha);
        return rho1 * rho1 + rho2 * rho2 - 2.0 * rho1 * rho2 * c;
    }
    case PotentialSpec::Kind::custom:
        break;
    }
    throw NamedSpecRequired("no closed form for potential '" + spec.name() + "'");
}

} // namespace

PolarPoint PolarPoint::make(double rho, double theta) {
    require_modulus(rho, "rho");
    if (!std::isfinite(theta)) {
        throw DomainError("theta must be finite");
    }
    return PolarPoint{rho, theta};
}

double cigar_potential(double x) {
    if (std::isnan(x) || x < 0.0) {
        throw DomainError("cigar_potential needs x >= 0, got " + std::to_string(x));
    }
    return -li2_real(-x).value;
}

double cigar_diastasis(const PolarPoint& z, const PolarPoint& w) {
    return cigar_diastasis(z.rho, w.rho, z.theta - w.theta);
}

double cigar_diastasis(double rho1, double rho2, double alpha) {
    require_modulus(rho1, "rho1");
    require_modulus(rho2, "rho2");
    const double cross = re_li2_circle(rho1 * rho2, alpha).value;
    return cigar_potential(rho1 * rho1) + cigar_potential(rho2 * rho2) + 2.0 * cross;
}

double cigar_diastasis_lower_bound(double rho1, double rho2) {
    require_modulus(rho1, "rho1");
    require_modulus(rho2, "rho2");
    return cigar_potential(rho1 * rho1) + cigar_potential(rho2 * rho2) +
           2.0 * li2_lower_bound(rho1 * rho2).value;
}

double lower_bound_ratio(double rho1, double rho2) {
    const double potential = cigar_potential(rho1 * rho1);
    if (potential == 0.0) {
        throw DomainError("lower_bound_ratio needs rho1 > 0");
    }
    return cigar_diastasis_lower_bound(rho1, rho2) / potential;
}

ScanResult positivity_scan(double rho_max, double rho_step, std::size_t alpha_steps,
                           double tolerance) {
    if (!(rho_max > 0.0) || !(rho_step > 0.0) || !std::isfinite(rho_max) ||
        !std::isfinite(rho_step)) {
        throw ConfigError("positivity_scan needs rho_max > 0 and rho_step > 0");
    }
    if (alpha_steps < 2) {
        throw ConfigError("positivity_scan needs at least 2 alpha steps");
    }
    if (rho_step > rho_max) {
        throw ConfigError("rho_step exceeds rho_max; the grid would hold only the origin");
    }
    if (!(tolerance >= 0.0)) {
        throw ConfigError("tolerance must be non-negative");
    }

    const auto rho_count = static_cast<std::size_t>(std::floor(rho_max / rho_step + 1e-9)) + 1;
    std::vector<double> rhos(rho_count);
    for (std::size_t i = 0; i < rho_count; ++i) {
        rhos[i] = static_cast<double>(i) * rho_step;
    }
    std::vector<double> alphas(alpha_steps);
    for (std::size_t i = 0; i < alpha_steps; ++i) {
        alphas[i] = kTwoPi * static_cast<double>(i) / static_cast<double>(alpha_steps - 1);
    }

    struct RowStats {
        double min_value = std::numeric_limits<double>::infinity();
        double min_rho2 = 0.0;
        double min_alpha = 0.0;
        double min_off_diagonal = std::numeric_limits<double>::infinity();
        std::size_t negative = 0;
        std::size_t bound_violations = 0;
    };
    std::vector<RowStats> rows(rho_count);

    std::atomic<std::size_t> next{0};
    auto worker = [&]() {
        for (std::size_t i = next++; i < rho_count; i = next++) {
            RowStats& st = rows[i];
            const double r1 = rhos[i];
            for (std::size_t j = 0; j < rho_count; ++j) {
                const double r2 = rhos[j];
                const double bound = cigar_diastasis_lower_bound(r1, r2);
                for (std::size_t a = 0; a < alpha_steps; ++a) {
                    const double alpha = alphas[a];
                    const double v = cigar_diastasis(r1, r2, alpha);
                    if (v < st.min_value) {
                        st.min_value = v;
                        st.min_rho2 = r2;
                        st.min_alpha = alpha;
                    }
                    const bool diagonal = (i == j) && (r1 == 0.0 || a == 0 || a + 1 == alpha_steps);
                    if (!diagonal) {
                        st.min_off_diagonal = std::min(st.min_off_diagonal, v);
                    }
                    if (v < -tolerance) {
                        ++st.negative;
                    }
                    if (v < bound - tolerance) {
                        ++st.bound_violations;
                    }
                }
            }
        }
    };
    const std::size_t threads =
        std::clamp<std::size_t>(std::thread::hardware_concurrency(), 1, rho_count);
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (std::size_t t = 0; t < threads; ++t) {
        pool.emplace_back(worker);
    }
    for (auto& th : pool) {
        th.join();
    }

    ScanResult out;
    out.rho_max = rho_max;
    out.rho_step = rho_step;
    out.alpha_steps = alpha_steps;
    out.tolerance = tolerance;
    out.points = rho_count * rho_count * alpha_steps;
    out.min_value = std::numeric_limits<double>::infinity();
    out.min_off_diagonal = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < rho_count; ++i) {
        const RowStats& st = rows[i];
        if (st.min_value < out.min_value) {
            out.min_value = st.min_value;
            out.argmin_rho1 = rhos[i];
            out.argmin_rho2 = st.min_rho2;
            out.argmin_alpha = st.min_alpha;
        }
        out.min_off_diagonal = std::min(out.min_off_diagonal, st.min_off_diagonal);
        out.count_negative += st.negative;
        out.lower_bound_violations += st.bound_violations;
    }
    return out;
}

double convergence_radius_estimate(const PotentialSpec& spec, std::size_t order) {
    std::size_t last = 0;
    std::size_t prev = 0;
    for (std::size_t j = 1; j <= order; ++j) {
        if (!spec.coefficient(j).is_zero()) {
            prev = last;
            last = j;
        }
    }
    if (prev == 0) {
        return std::numeric_limits<double>::infinity();
    }
    const double ratio =
        std::abs(spec.coefficient(prev).to_double() / spec.coefficient(last).to_double());
    return std::pow(ratio, 1.0 / static_cast<double>(last - prev));
}

double radial_diastasis(const PotentialSpec& spec, const PolarPoint& z, const PolarPoint& w,
                        DiastasisRoute route, std::size_t order) {
    require_modulus(z.rho, "rho1");
    require_modulus(w.rho, "rho2");
    const double alpha = z.theta - w.theta;
    if (route == DiastasisRoute::closed_form ||
        (route == DiastasisRoute::automatic && spec.is_named())) {
        return closed_form(spec, z.rho, w.rho, alpha);
    }

    const double radius = convergence_radius_estimate(spec, order);
    const double reach = std::max(z.rho * z.rho, w.rho * w.rho);
    if (!(reach < radius)) {
        throw OutOfConvergenceRadius("max(|z|^2, |w|^2) = " + std::to_string(reach) +
                                     " is not inside the estimated radius " +
                                     std::to_string(radius));
    }
    const double x1 = z.rho * z.rho;
    const double x2 = w.rho * w.rho;
    const double p = z.rho * w.rho;
    const bool diagonal_angle = is_diagonal_angle(alpha);
    double p1 = 1.0;
    double p2 = 1.0;
    double pp = 1.0;
    double sum = 0.0;
    for (std::size_t j = 1; j <= order; ++j) {
        p1 *= x1;
        p2 *= x2;
        pp *= p;
        const Rational d = spec.coefficient(j);
        if (d.is_zero()) {
            continue;
        }
        const double c = diagonal_angle ? 1.0 : std::cos(static_cast<double>(j) * alpha);
        sum += d.to_double() * (p1 + p2 - 2.0 * pp * c);
    }
    return sum;
}

double cos_metric_diastasis(double p_re, double p_im, double q_re, double q_im) {
    // cos(p - pbar) = cosh(2 Im p); cos(p - qbar) + cos(q - pbar) =
    // 2 cos(Re p - Re q) cosh(Im p + Im q).
    const double dre = p_re - q_re;
    const double dim = p_im - q_im;
    const double bracket = std::cosh(2.0 * p_im) + std::cosh(2.0 * q_im) -
                           2.0 * std::cos(dre) * std::cosh(p_im + q_im);
    return 4.0 * bracket - (dre * dre + dim * dim);
}

} // namespace kahler
