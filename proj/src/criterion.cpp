#include "kahler/criterion.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <thread>

#include "kahler/errors.hpp"
#include "kahler/series.hpp"

namespace kahler {

namespace {

constexpr std::size_t kCigarOrderCap = 400;

void require_positive(const Rational& c) {
    if (c.sign() <= 0) {
        throw NonpositiveScale("scale c must be positive, got " + c.to_string());
    }
}

void require_order(std::size_t order) {
    if (order == 0) {
        throw DomainError("truncation order must be at least 1");
    }
}

// b_0..b_N; element 0 is the constant 1.
std::vector<Rational> exp_coefficients(const PotentialSpec& spec, const Rational& c,
                                       std::size_t order) {
    std::vector<Rational> g(order + 1);
    for (std::size_t j = 1; j <= order; ++j) {
        g[j] = c * spec.coefficient(j);
    }
    const Series f = series_exp(Series(std::move(g)));
    return {f.coeffs().begin(), f.coeffs().end()};
}

} // namespace

std::vector<Rational> criterion_coefficients(const PotentialSpec& spec, const Rational& c,
                                             std::size_t order) {
    require_positive(c);
    require_order(order);
    auto all = exp_coefficients(spec, c, order);
    return {all.begin() + 1, all.end()};
}

Rational bell_route_coefficient(const PotentialSpec& spec, const Rational& c, std::size_t n) {
    require_positive(c);
    require_order(n);
    std::vector<Rational> a;
    a.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) {
        a.push_back(c * spec.coefficient(j) * factorial(static_cast<unsigned>(j)));
    }
    return bell_complete(n, BellInput(std::move(a))) / factorial(static_cast<unsigned>(n));
}

std::optional<std::size_t> first_violation(const PotentialSpec& spec, const Rational& c,
                                           std::size_t order) {
    const auto b = criterion_coefficients(spec, c, order);
    for (std::size_t i = 0; i < b.size(); ++i) {
        if (b[i].sign() < 0) {
            return i + 1;
        }
    }
    return std::nullopt;
}

std::size_t embedding_dimension_count(const PotentialSpec& spec, const Rational& c,
                                      std::size_t order) {
    const auto b = criterion_coefficients(spec, c, order);
    return static_cast<std::size_t>(
        std::count_if(b.begin(), b.end(), [](const Rational& v) { return !v.is_zero(); }));
}

std::string to_string(Verdict v) {
    return v == Verdict::violation_at_n ? "violation_at_n" : "no_violation_up_to_N";
}

CriterionReport criterion_report(const PotentialSpec& spec, const Rational& c, std::size_t order) {
    CriterionReport r;
    r.metric = spec.name();
    r.c = c;
    r.order_max = order;
    const auto b = criterion_coefficients(spec, c, order);
    r.coefficients.reserve(b.size());
    for (std::size_t i = 0; i < b.size(); ++i) {
        const std::size_t n = i + 1;
        r.coefficients.emplace_back(n, b[i]);
        if (!b[i].is_zero()) {
            ++r.nonzero_count;
        }
        if (!r.first_violation && b[i].sign() < 0) {
            r.first_violation = n;
        }
    }
    r.verdict = r.first_violation ? Verdict::violation_at_n : Verdict::no_violation_up_to_n;

    r.bell_checked_up_to = std::min(order, kBellCheckLimit);
    for (std::size_t n = 1; n <= r.bell_checked_up_to; ++n) {
        if (bell_route_coefficient(spec, c, n) != b[n - 1]) {
            r.bell_agrees = false;
        }
    }
    if (r.first_violation) {
        r.violation_sign_bell = bell_route_coefficient(spec, c, *r.first_violation).sign();
    }
    if (spec.kind() == PotentialSpec::Kind::cigar) {
        r.limit_target = limit_target(c);
    }
    return r;
}

Rational lhs_sequence(const Rational& c, std::size_t n) {
    require_positive(c);
    if (n < 1) {
        throw DomainError("lhs_sequence needs n >= 1");
    }
    const BellTable table(BellInput::factorial_over_square(2 * n), 2 * n);
    return lhs_sequence(table, c, n);
}

Rational lhs_sequence(const BellTable& a_table, const Rational& c, std::size_t n) {
    require_positive(c);
    if (n < 1) {
        throw DomainError("lhs_sequence needs n >= 1");
    }
    const std::size_t m = 2 * n;
    if (a_table.n_max() < m || a_table.k_max() < m) {
        throw DomainError("lhs_sequence needs a full Bell table up to " + std::to_string(m));
    }
    Rational sum(0);
    Rational c_power(1);
    for (std::size_t k = 1; k + 1 <= m; ++k) {
        c_power *= c;
        const Rational term = c_power * a_table.at(m, k + 1);
        if (k % 2 == 1) {
            sum += term;
        } else {
            sum -= term;
        }
    }
    const auto mm = static_cast<std::int64_t>(m);
    return sum * Rational(mm * mm) / factorial(static_cast<unsigned>(m));
}

double limit_target(const Rational& c) {
    require_positive(c);
    return -std::expm1(-c.to_double() * std::numbers::pi * std::numbers::pi / 6.0);
}

std::vector<ViolationRow> violation_table(const PotentialSpec& spec,
                                          const std::vector<Rational>& c_list, std::size_t order) {
    for (const auto& c : c_list) {
        require_positive(c);
    }
    require_order(order);
    std::vector<ViolationRow> rows(c_list.size());
    std::vector<std::thread> pool;
    pool.reserve(c_list.size());
    for (std::size_t i = 0; i < c_list.size(); ++i) {
        pool.emplace_back([&, i]() {
            rows[i].c = c_list[i];
            rows[i].first_violation = first_violation(spec, c_list[i], order);
            rows[i].status = rows[i].first_violation ? "violation" : "OrderTooSmall";
        });
    }
    for (auto& t : pool) {
        t.join();
    }
    return rows;
}

std::size_t default_cigar_order() {
    const auto n = first_violation(PotentialSpec::cigar(), Rational(1), kCigarOrderCap);
    return n ? std::min(2 * *n, kCigarOrderCap) : kCigarOrderCap;
}

} // namespace kahler
