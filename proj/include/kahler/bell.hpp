#pragma once

#include <cstddef>
#include <vector>

#include "kahler/rational.hpp"

namespace kahler {

/// Arguments x_1..x_m of a Bell polynomial. Indexing is 1-based to match the
/// usual notation B_{n,k}(x_1, ..., x_{n-k+1}).
class BellInput {
public:
    BellInput() = default;
    explicit BellInput(std::vector<Rational> x) : x_(std::move(x)) {}

    /// a_j = j!/j^2, j = 1..m.
    static BellInput factorial_over_square(std::size_t m);
    /// a_j = scale * j!/j^2.
    static BellInput scaled_factorial_over_square(std::size_t m, const Rational& scale);

    std::size_t size() const noexcept { return x_.size(); }
    /// x_j for 1 <= j <= size().
    const Rational& operator()(std::size_t j) const { return x_.at(j - 1); }
    const std::vector<Rational>& values() const noexcept { return x_; }

    /// (t r x_1, t r^2 x_2, ...), the substitution of the homogeneity identity.
    BellInput rescaled(const Rational& t, const Rational& r) const;

private:
    std::vector<Rational> x_;
};

/// Triangular table of B_{n,k}(x) for 1 <= k <= min(n, k_max), n <= n_max,
/// filled by B_{n,k} = sum_j C(n-1, j-1) x_j B_{n-j,k-1}. Immutable once built.
class BellTable {
public:
    /// InputTooShort if x has fewer than n_max entries. k_max = 0 means n_max.
    BellTable(const BellInput& x, std::size_t n_max, std::size_t k_max = 0);

    std::size_t n_max() const noexcept { return n_max_; }
    std::size_t k_max() const noexcept { return k_max_; }

    /// B_{n,k}; DomainError outside 1 <= k <= n, k <= k_max, n <= n_max.
    const Rational& at(std::size_t n, std::size_t k) const;
    /// Y_n = sum_k B_{n,k}; needs k_max >= n. Y_0 = 1.
    Rational complete(std::size_t n) const;

private:
    std::size_t n_max_;
    std::size_t k_max_;
    // rows_[n][k], k = 0..min(n, k_max); row 0 holds B_{0,0} = 1.
    std::vector<std::vector<Rational>> rows_;
};

/// Enumeration over s_1 + 2 s_2 + ... = n, s_1 + s_2 + ... = k. Exponential
/// cost; refuses n > 25 unless allow_large is set.
Rational bell_partial_enum(std::size_t n, std::size_t k, const BellInput& x,
                           bool allow_large = false);

Rational bell_partial(std::size_t n, std::size_t k, const BellInput& x);

/// B_{n,k+1} as the k-fold nested binomial sum over n > a_1 > ... > a_k >= 1.
Rational bell_partial_nested(std::size_t n, std::size_t k_plus_1, const BellInput& x);

/// Y_n(x) = sum_{k=1}^{n} B_{n,k}(x). Y_0 is taken to be 1 so that
/// Y_n(a) = d^n/dx^n exp(sum a_j x^j / j!) at 0 holds for every n >= 0.
Rational bell_complete(std::size_t n, const BellInput& x);

/// B_{n,k}(t r x_1, t r^2 x_2, ...) == t^k r^n B_{n,k}(x), evaluated exactly.
bool bell_homogeneity_check(std::size_t n, std::size_t k, const BellInput& x, const Rational& t,
                            const Rational& r);

/// (2n)^2 B_{2n,k+1}(a) / (2n)! with a_j = j!/j^2. Tends to (pi^2/6)^k / k!.
Rational bell_ratio(std::size_t n, std::size_t k);
/// Same quantity read from a prebuilt table over a_j = j!/j^2.
Rational bell_ratio(const BellTable& a_table, std::size_t n, std::size_t k);

/// A_j(k) for j = 1..j_max from A_1(k) = 1,
/// A_j(k) = k/j^2 + k sum_{s=2}^{j-1} A_{j-s+1}(k-1)/s^2,
/// with A_j(0) = 0 for j >= 2 (the k = 1 row then reduces to 1/j^2).
std::vector<Rational> a_sequence(std::size_t k, std::size_t j_max);
/// sum_{j=1}^{j_max} A_j(k).
Rational a_sequence_partial_sum(std::size_t k, std::size_t j_max);

} // namespace kahler
