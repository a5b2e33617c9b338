#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kahler/rational.hpp"

namespace kahler {

/// Truncated power series sum_{i=0}^{N} c_i x^i with exact rational
/// coefficients. Binary operations truncate to the smaller of the two orders.
class Series {
public:
    /// Zero series of the given truncation order.
    explicit Series(std::size_t order);
    /// Takes ownership of coefficients c_0..c_N; order is size() - 1.
    /// Throws DomainError on an empty list.
    explicit Series(std::vector<Rational> coeffs);

    static Series zero(std::size_t order) { return Series(order); }
    static Series one(std::size_t order);
    /// The monomial x truncated at `order`.
    static Series x(std::size_t order);

    std::size_t order() const noexcept { return coeffs_.size() - 1; }
    std::span<const Rational> coeffs() const noexcept { return coeffs_; }
    const Rational& operator[](std::size_t i) const { return coeffs_.at(i); }

    /// Copy truncated to a lower order. DomainError if `order` exceeds ours.
    Series truncated(std::size_t order) const;

    Series operator-() const;

    friend bool operator==(const Series&, const Series&) = default;

private:
    std::vector<Rational> coeffs_;
};

Series series_add(const Series& a, const Series& b);
Series series_sub(const Series& a, const Series& b);
Series series_mul(const Series& a, const Series& b);
Series series_scale(const Series& a, const Rational& c);

/// exp(g) for g with g_0 = 0, via n f_n = sum_{j=1}^{n} j g_j f_{n-j}.
/// Throws NonzeroConstantTerm otherwise.
Series series_exp(const Series& g);

/// Horner evaluation in double precision. Diagnostics only.
double series_eval_float(const Series& a, double x);

inline Series operator+(const Series& a, const Series& b) { return series_add(a, b); }
inline Series operator-(const Series& a, const Series& b) { return series_sub(a, b); }
inline Series operator*(const Series& a, const Series& b) { return series_mul(a, b); }

} // namespace kahler
