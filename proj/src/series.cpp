#include "kahler/series.hpp"

#include <algorithm>

#include "kahler/errors.hpp"

namespace kahler {

Series::Series(std::size_t order) : coeffs_(order + 1) {}

Series::Series(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) {
        throw DomainError("a series needs at least the constant coefficient");
    }
}

Series Series::one(std::size_t order) {
    Series s(order);
    s.coeffs_[0] = Rational(1);
    return s;
}

Series Series::x(std::size_t order) {
    Series s(order);
    if (order >= 1) {
        s.coeffs_[1] = Rational(1);
    }
    return s;
}

Series Series::truncated(std::size_t order) const {
    if (order > this->order()) {
        throw DomainError("cannot raise truncation order");
    }
    return Series(std::vector<Rational>(coeffs_.begin(),
                                        coeffs_.begin() + static_cast<std::ptrdiff_t>(order + 1)));
}

Series Series::operator-() const {
    Series out(order());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        out.coeffs_[i] = -coeffs_[i];
    }
    return out;
}

Series series_add(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i] = a[i] + b[i];
    }
    return Series(std::move(c));
}

Series series_sub(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        c[i] = a[i] - b[i];
    }
    return Series(std::move(c));
}

Series series_mul(const Series& a, const Series& b) {
    const std::size_t n = std::min(a.order(), b.order());
    const auto ac = a.coeffs();
    const auto bc = b.coeffs();
    std::vector<Rational> c(n + 1);
    for (std::size_t i = 0; i <= n; ++i) {
        if (ac[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; i + j <= n; ++j) {
            if (!bc[j].is_zero()) {
                c[i + j] += ac[i] * bc[j];
            }
        }
    }
    return Series(std::move(c));
}

Series series_scale(const Series& a, const Rational& c) {
    std::vector<Rational> out(a.coeffs().begin(), a.coeffs().end());
    for (auto& v : out) {
        v *= c;
    }
    return Series(std::move(out));
}

Series series_exp(const Series& g) {
    if (!g[0].is_zero()) {
        throw NonzeroConstantTerm("exp needs g_0 = 0, got " + g[0].to_string());
    }
    const std::size_t n_max = g.order();
    const auto gc = g.coeffs();

    // j * g_j, computed once.
    std::vector<Rational> dg(n_max + 1);
    for (std::size_t j = 1; j <= n_max; ++j) {
        dg[j] = gc[j] * Rational(static_cast<std::int64_t>(j));
    }

    std::vector<Rational> f(n_max + 1);
    f[0] = Rational(1);
    for (std::size_t n = 1; n <= n_max; ++n) {
        mpq_class acc(0);
        for (std::size_t j = 1; j <= n; ++j) {
            if (!dg[j].is_zero() && !f[n - j].is_zero()) {
                acc += dg[j].raw() * f[n - j].raw();
            }
        }
        acc /= static_cast<unsigned long>(n);
        f[n] = Rational(std::move(acc));
    }
    return Series(std::move(f));
}

double series_eval_float(const Series& a, double x) {
    const auto c = a.coeffs();
    double acc = 0.0;
    for (std::size_t i = c.size(); i-- > 0;) {
        acc = acc * x + c[i].to_double();
    }
    return acc;
}

} // namespace kahler
