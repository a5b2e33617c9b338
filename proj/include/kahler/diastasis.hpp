#pragma once

#include <cstddef>
#include <string>

#include "kahler/potential.hpp"

namespace kahler {

/// Point rho e^{i theta} of the complex line.
struct PolarPoint {
    double rho = 0.0;
    double theta = 0.0;

    /// DomainError on negative or non-finite modulus.
    static PolarPoint make(double rho, double theta);
};

/// Cigar potential D_0(x) = -Li_2(-x), x = |z|^2 >= 0.
double cigar_potential(double x);

/// D(z, w) = -Li2(-rho1^2) - Li2(-rho2^2) + 2 Re Li2(-rho1 rho2 e^{i alpha}),
/// alpha = theta1 - theta2. Defined on all of C x C.
double cigar_diastasis(const PolarPoint& z, const PolarPoint& w);
/// Same, in terms of (rho1, rho2, alpha) directly.
double cigar_diastasis(double rho1, double rho2, double alpha);

/// Alpha-independent lower bound: the diastasis with Re Li2(-P e^{i alpha})
/// replaced by its value at alpha = pi, P = rho1 rho2.
double cigar_diastasis_lower_bound(double rho1, double rho2);

/// D(z, w) / (-Li2(-rho1^2)) evaluated on the lower bound. Reported as a
/// large-rho1 diagnostic only.
double lower_bound_ratio(double rho1, double rho2);

struct ScanResult {
    double rho_max = 0.0;
    double rho_step = 0.0;
    std::size_t alpha_steps = 0;
    double tolerance = 0.0;

    double min_value = 0.0;
    double argmin_rho1 = 0.0;
    double argmin_rho2 = 0.0;
    double argmin_alpha = 0.0;
    std::size_t count_negative = 0; // points with value < -tolerance
    std::size_t points = 0;

    /// Smallest value among points with rho1 != rho2 or alpha != 0 (mod 2 pi),
    /// i.e. away from the diagonal z = w.
    double min_off_diagonal = 0.0;
    /// Points where the diastasis fell below cigar_diastasis_lower_bound - tolerance.
    std::size_t lower_bound_violations = 0;
};

/// Grid defaults used by the CLI.
inline constexpr double kScanRhoMax = 8.0;
inline constexpr double kScanRhoStep = 0.25;
inline constexpr std::size_t kScanAlphaSteps = 65;
inline constexpr double kNegativityTolerance = 1e-9;

/// Evaluates cigar_diastasis on rho1, rho2 in {0, step, ..., rho_max} and
/// alpha_steps uniformly spaced angles on [0, 2 pi] (endpoints included).
/// Rows are evaluated in parallel; the reduction is deterministic.
/// ConfigError on a degenerate grid.
ScanResult positivity_scan(double rho_max, double rho_step, std::size_t alpha_steps,
                           double tolerance = kNegativityTolerance);

enum class DiastasisRoute {
    automatic,   // closed form for builtins, series otherwise
    closed_form, // NamedSpecRequired for custom specs
    series,      // truncated series, radius-checked
};

/// Estimated radius of convergence of sum d_j x^j from the last two nonzero
/// coefficients among d_1..d_order (ratio test). Infinity for polynomials.
double convergence_radius_estimate(const PotentialSpec& spec, std::size_t order);

/// D(z, w) = Phi(rho1^2) + Phi(rho2^2) - 2 Re Phi~(rho1 rho2 e^{i alpha}).
/// The series route sums d_j ((rho1^2)^j + (rho2^2)^j - 2 (rho1 rho2)^j cos(j alpha))
/// up to `order` and requires max(rho1^2, rho2^2) inside the estimated radius
/// (OutOfConvergenceRadius otherwise).
double radial_diastasis(const PotentialSpec& spec, const PolarPoint& z, const PolarPoint& w,
                        DiastasisRoute route = DiastasisRoute::automatic,
                        std::size_t order = 200);

/// Diastasis of the metric with Kaehler form (4 cos(z - zbar) - 1) dz ^ dzbar:
/// 4 [cos(p - pbar) + cos(q - qbar) - cos(p - qbar) - cos(q - pbar)] - |p - q|^2,
/// for p = p_re + i p_im and q = q_re + i q_im.
double cos_metric_diastasis(double p_re, double p_im, double q_re, double q_im);

} // namespace kahler
