#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "kahler/bell.hpp"
#include "kahler/potential.hpp"
#include "kahler/rational.hpp"

namespace kahler {

// Calabi's test for a radial potential D_0: (M, c g) immerses locally into
// complex projective space iff every Taylor coefficient b_n of exp(c D_0(x))
// is non-negative, and the number of non-zero b_n is the embedding dimension.
// All orders n >= 1 are tested, odd and even.

/// b_1..b_N of exp(c D_0(x)), exactly. NonpositiveScale unless c > 0;
/// DomainError if N == 0.
std::vector<Rational> criterion_coefficients(const PotentialSpec& spec, const Rational& c,
                                             std::size_t order);

/// b_n recomputed as Y_n(a) / n! with a_j = c d_j j!, through Bell polynomials.
Rational bell_route_coefficient(const PotentialSpec& spec, const Rational& c, std::size_t n);

/// Smallest n <= N with b_n < 0.
std::optional<std::size_t> first_violation(const PotentialSpec& spec, const Rational& c,
                                           std::size_t order);

/// #{1 <= n <= N : b_n != 0}.
std::size_t embedding_dimension_count(const PotentialSpec& spec, const Rational& c,
                                      std::size_t order);

enum class Verdict { no_violation_up_to_n, violation_at_n };

std::string to_string(Verdict v);

struct CriterionReport {
    std::string metric;
    Rational c;
    std::size_t order_max = 0;
    std::vector<std::pair<std::size_t, Rational>> coefficients; // (n, b_n), n = 1..order_max
    std::optional<std::size_t> first_violation;
    std::size_t nonzero_count = 0;
    Verdict verdict = Verdict::no_violation_up_to_n;

    /// Orders n <= bell_check_limit where n! b_n == Y_n(c d_j j!) was confirmed.
    std::size_t bell_checked_up_to = 0;
    bool bell_agrees = true;
    /// Sign of the violating coefficient recomputed through the Bell route.
    std::optional<int> violation_sign_bell;
    /// 1 - exp(-c pi^2/6), for the cigar only.
    std::optional<double> limit_target;
};

inline constexpr std::size_t kBellCheckLimit = 20;

CriterionReport criterion_report(const PotentialSpec& spec, const Rational& c, std::size_t order);

/// sum_{k=1}^{2n-1} (-1)^{k+1} c^k (2n)^2 B_{2n,k+1}(a) / (2n)!, a_j = j!/j^2.
/// The cigar's b_{2n} is negative exactly when this is below 1.
Rational lhs_sequence(const Rational& c, std::size_t n);
/// Same, reusing a table of B_{m,k}(a) with m >= 2n and full columns.
Rational lhs_sequence(const BellTable& a_table, const Rational& c, std::size_t n);

/// 1 - exp(-c pi^2 / 6), the limit of lhs_sequence(c, n) as n grows.
double limit_target(const Rational& c);

struct ViolationRow {
    Rational c;
    std::optional<std::size_t> first_violation;
    std::string status; // "violation" or "OrderTooSmall"
};

/// first_violation for each scale, rows evaluated in parallel.
std::vector<ViolationRow> violation_table(const PotentialSpec& spec,
                                          const std::vector<Rational>& c_list, std::size_t order);

/// Truncation order for cigar sweeps: twice the first violation at c = 1,
/// capped at 400.
std::size_t default_cigar_order();

} // namespace kahler
