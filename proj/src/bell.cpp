#include "kahler/bell.hpp"

#include <string>

#include "kahler/errors.hpp"

namespace kahler {

namespace {

constexpr std::size_t kEnumerationLimit = 25;

void check_indices(std::size_t n, std::size_t k, const BellInput& x) {
    if (k < 1 || k > n) {
        throw DomainError("B_{n,k} needs 1 <= k <= n, got n=" + std::to_string(n) +
                          ", k=" + std::to_string(k));
    }
    if (x.size() < n - k + 1) {
        throw InputTooShort("B_{" + std::to_string(n) + "," + std::to_string(k) + "} needs " +
                            std::to_string(n - k + 1) + " arguments, got " +
                            std::to_string(x.size()));
    }
}

Rational sq(std::size_t j) {
    const auto v = static_cast<std::int64_t>(j);
    return Rational(v * v);
}

// Walks multiplicities s_part for part sizes part, part-1, ..., 1 and adds the
// weight n! / prod(s_i! (i!)^{s_i}) * prod x_i^{s_i} of each solution.
void enumerate_partitions(std::size_t part, std::size_t remaining_sum, std::size_t remaining_count,
                          const BellInput& x, const Rational& prefix, Rational& total) {
    if (part == 1) {
        if (remaining_sum != remaining_count) {
            return;
        }
        const auto s = static_cast<unsigned>(remaining_count);
        total += prefix * x(1).pow(s) / factorial(s);
        return;
    }
    // Each of the other remaining_count - s blocks has size >= 1.
    for (std::size_t s = 0; s <= remaining_count && s * part <= remaining_sum; ++s) {
        if (remaining_sum - s * part < remaining_count - s) {
            break;
        }
        Rational next = prefix;
        if (s > 0) {
            const auto su = static_cast<unsigned>(s);
            next *= (x(part) / factorial(static_cast<unsigned>(part))).pow(su) / factorial(su);
        }
        enumerate_partitions(part - 1, remaining_sum - s * part, remaining_count - s, x, next,
                             total);
    }
}

void nested_sum(std::size_t depth, std::size_t upper, std::size_t k, const BellInput& x,
                const Rational& prefix, Rational& total) {
    // Level `depth` (1-based) picks a_depth in [k - depth + 1, upper - 1]. The
    // last index also contributes x_{a_k}.
    for (std::size_t a = k - depth + 1; a + 1 <= upper; ++a) {
        Rational term = prefix * binomial(static_cast<unsigned>(upper), static_cast<unsigned>(a)) *
                        x(upper - a);
        if (depth == k) {
            total += term * x(a);
        } else {
            nested_sum(depth + 1, a, k, x, term, total);
        }
    }
}

} // namespace

BellInput BellInput::factorial_over_square(std::size_t m) {
    return scaled_factorial_over_square(m, Rational(1));
}

BellInput BellInput::scaled_factorial_over_square(std::size_t m, const Rational& scale) {
    std::vector<Rational> x;
    x.reserve(m);
    for (std::size_t j = 1; j <= m; ++j) {
        x.push_back(scale * factorial(static_cast<unsigned>(j)) / sq(j));
    }
    return BellInput(std::move(x));
}

BellInput BellInput::rescaled(const Rational& t, const Rational& r) const {
    std::vector<Rational> y;
    y.reserve(x_.size());
    Rational rj = r;
    for (const auto& v : x_) {
        y.push_back(t * rj * v);
        rj *= r;
    }
    return BellInput(std::move(y));
}

BellTable::BellTable(const BellInput& x, std::size_t n_max, std::size_t k_max)
    : n_max_(n_max), k_max_(k_max == 0 ? n_max : std::min(k_max, n_max)) {
    if (x.size() < n_max) {
        throw InputTooShort("BellTable up to n=" + std::to_string(n_max) + " needs " +
                            std::to_string(n_max) + " arguments, got " + std::to_string(x.size()));
    }
    // Pascal rows C(m, i) for m < n_max.
    std::vector<std::vector<mpz_class>> pascal(n_max == 0 ? 1 : n_max);
    pascal[0] = {1};
    for (std::size_t m = 1; m < pascal.size(); ++m) {
        pascal[m].resize(m + 1);
        pascal[m][0] = 1;
        pascal[m][m] = 1;
        for (std::size_t i = 1; i < m; ++i) {
            pascal[m][i] = pascal[m - 1][i - 1] + pascal[m - 1][i];
        }
    }

    rows_.resize(n_max + 1);
    rows_[0] = {Rational(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
        const std::size_t top = std::min(n, k_max_);
        rows_[n].assign(top + 1, Rational(0));
        for (std::size_t k = 1; k <= top; ++k) {
            mpq_class acc(0);
            for (std::size_t j = 1; j + k - 1 <= n; ++j) {
                const auto& prev_row = rows_[n - j];
                if (k - 1 >= prev_row.size()) {
                    continue;
                }
                const Rational& prev = prev_row[k - 1];
                if (prev.is_zero() || x(j).is_zero()) {
                    continue;
                }
                acc += mpq_class(pascal[n - 1][j - 1]) * x(j).raw() * prev.raw();
            }
            rows_[n][k] = Rational(std::move(acc));
        }
    }
}

const Rational& BellTable::at(std::size_t n, std::size_t k) const {
    if (n > n_max_ || k < 1 || k > n || k > k_max_) {
        throw DomainError("BellTable entry (" + std::to_string(n) + "," + std::to_string(k) +
                          ") out of range");
    }
    return rows_[n][k];
}

Rational BellTable::complete(std::size_t n) const {
    if (n == 0) {
        return Rational(1);
    }
    if (n > n_max_ || n > k_max_) {
        throw DomainError("complete Bell Y_" + std::to_string(n) + " needs a full table row");
    }
    Rational y(0);
    for (std::size_t k = 1; k <= n; ++k) {
        y += rows_[n][k];
    }
    return y;
}

Rational bell_partial_enum(std::size_t n, std::size_t k, const BellInput& x, bool allow_large) {
    check_indices(n, k, x);
    if (n > kEnumerationLimit && !allow_large) {
        throw DomainError("partition enumeration capped at n=" +
                          std::to_string(kEnumerationLimit) + "; pass allow_large to override");
    }
    Rational total(0);
    enumerate_partitions(n - k + 1, n, k, x, factorial(static_cast<unsigned>(n)), total);
    return total;
}

Rational bell_partial(std::size_t n, std::size_t k, const BellInput& x) {
    check_indices(n, k, x);
    // The table wants x_1..x_n; columns k >= 2 never read past x_{n-k+1}, so
    // pad a short input with zeros rather than demanding unused entries.
    if (x.size() < n) {
        std::vector<Rational> padded = x.values();
        padded.resize(n, Rational(0));
        return BellTable(BellInput(std::move(padded)), n, k).at(n, k);
    }
    return BellTable(x, n, k).at(n, k);
}

Rational bell_partial_nested(std::size_t n, std::size_t k_plus_1, const BellInput& x) {
    if (k_plus_1 < 2 || k_plus_1 > n) {
        throw DomainError("nested form needs 2 <= k+1 <= n, got n=" + std::to_string(n) +
                          ", k+1=" + std::to_string(k_plus_1));
    }
    check_indices(n, k_plus_1, x);
    const std::size_t k = k_plus_1 - 1;
    Rational total(0);
    nested_sum(1, n, k, x, Rational(1), total);
    return total / factorial(static_cast<unsigned>(k_plus_1));
}

Rational bell_complete(std::size_t n, const BellInput& x) {
    if (n == 0) {
        return Rational(1);
    }
    if (x.size() < n) {
        throw InputTooShort("Y_" + std::to_string(n) + " needs " + std::to_string(n) +
                            " arguments, got " + std::to_string(x.size()));
    }
    return BellTable(x, n).complete(n);
}

bool bell_homogeneity_check(std::size_t n, std::size_t k, const BellInput& x, const Rational& t,
                            const Rational& r) {
    check_indices(n, k, x);
    const Rational lhs = bell_partial(n, k, x.rescaled(t, r));
    const Rational rhs = t.pow(static_cast<unsigned>(k)) * r.pow(static_cast<unsigned>(n)) *
                         bell_partial(n, k, x);
    return lhs == rhs;
}

Rational bell_ratio(std::size_t n, std::size_t k) {
    if (n < 1 || k < 1 || k + 1 > 2 * n) {
        throw DomainError("bell_ratio needs n >= 1, k >= 1, k+1 <= 2n");
    }
    const BellTable table(BellInput::factorial_over_square(2 * n), 2 * n, k + 1);
    return bell_ratio(table, n, k);
}

Rational bell_ratio(const BellTable& a_table, std::size_t n, std::size_t k) {
    if (n < 1 || k < 1 || k + 1 > 2 * n) {
        throw DomainError("bell_ratio needs n >= 1, k >= 1, k+1 <= 2n");
    }
    const std::size_t m = 2 * n;
    return sq(m) * a_table.at(m, k + 1) / factorial(static_cast<unsigned>(m));
}

std::vector<Rational> a_sequence(std::size_t k, std::size_t j_max) {
    if (k < 1 || j_max < 1) {
        throw DomainError("A_j(k) needs k >= 1 and j_max >= 1");
    }
    // prev holds A_.(level-1), 1-based with a dummy slot 0.
    std::vector<Rational> prev(j_max + 1, Rational(0));
    prev[1] = Rational(1);
    std::vector<Rational> cur(j_max + 1, Rational(0));
    std::vector<Rational> inv_sq(j_max + 1, Rational(0));
    for (std::size_t s = 1; s <= j_max; ++s) {
        inv_sq[s] = Rational(1) / sq(s);
    }
    for (std::size_t level = 1; level <= k; ++level) {
        const Rational lv(static_cast<std::int64_t>(level));
        cur.assign(j_max + 1, Rational(0));
        cur[1] = Rational(1);
        for (std::size_t j = 2; j <= j_max; ++j) {
            Rational inner(0);
            for (std::size_t s = 2; s + 1 <= j; ++s) {
                const Rational& p = prev[j - s + 1];
                if (!p.is_zero()) {
                    inner += p * inv_sq[s];
                }
            }
            cur[j] = lv * (inv_sq[j] + inner);
        }
        std::swap(prev, cur);
    }
    return std::vector<Rational>(prev.begin() + 1, prev.end());
}

Rational a_sequence_partial_sum(std::size_t k, std::size_t j_max) {
    Rational sum(0);
    for (const auto& v : a_sequence(k, j_max)) {
        sum += v;
    }
    return sum;
}

} // namespace kahler
