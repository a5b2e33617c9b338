#pragma once

namespace kahler {

/// A dilogarithm value with a non-negative a-posteriori error estimate.
struct Li2Value {
    double value = 0.0;
    double est_error = 0.0;
};

/// Li_2(x) for real x <= 1 (DomainError above 1).
///
/// |x| <= 1/2 is summed directly. Other arguments are mapped into that disc:
///   1/2 < x <= 1      Li2(x) = pi^2/6 - ln(x) ln(1-x) - Li2(1-x)
///   -1 <= x < -1/2    Li2(x) = -Li2(x/(x-1)) - ln^2(1-x)/2
///   x < -1            Li2(x) = -pi^2/6 - ln^2(-x)/2 - Li2(1/x)
/// est_error is the tail bound of the truncated series plus a rounding term.
Li2Value li2_real(double x);

/// Re Li_2(-rho e^{i alpha}) = -1/2 int_0^rho log(1 + 2 y cos(alpha) + y^2) / y dy,
/// by adaptive quadrature (absolute tolerance 1e-11). Panels are split at
/// y = 1 and at the minimiser y = -cos(alpha) of the logarithm's argument.
/// alpha is in radians and only enters through its class mod 2 pi.
Li2Value re_li2_circle(double rho, double alpha);

/// -int_0^rho log|1 - y| / y dy, i.e. Re Li_2(rho); the minimum over alpha of
/// re_li2_circle(rho, alpha), attained at alpha = pi.
Li2Value li2_lower_bound(double rho);

} // namespace kahler
