#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "kahler/rational.hpp"
#include "kahler/series.hpp"

namespace kahler {

/// A radial Kaehler potential D_0(x) = sum_{j>=1} d_j x^j with x = |z|^2,
/// normalised so that D_0(0) = 0.
class PotentialSpec {
public:
    enum class Kind { cigar, fubini_study, flat, custom };

    /// d_j = (-1)^{j+1} / j^2, the series of int_0^x log(1+s)/s ds.
    static PotentialSpec cigar();
    /// d_j = (-1)^{j+1} / j, the series of log(1+x).
    static PotentialSpec fubini_study();
    /// d_1 = 1.
    static PotentialSpec flat();
    /// d_1, d_2, ... as given; coefficients past the end are zero.
    static PotentialSpec custom(std::vector<Rational> coeffs, std::string label = "custom");

    /// Builtin by name ("cigar", "fubini_study" or "fubini-study", "flat").
    static std::optional<PotentialSpec> named(std::string_view name);

    Kind kind() const noexcept { return kind_; }
    bool is_named() const noexcept { return kind_ != Kind::custom; }
    const std::string& name() const noexcept { return name_; }

    /// d_j for j >= 1 (d_0 = 0).
    Rational coefficient(std::size_t j) const;
    /// D_0 as a series truncated at `order`.
    Series series(std::size_t order) const;

    /// Custom coefficient list (empty for builtins).
    const std::vector<Rational>& custom_coeffs() const noexcept { return coeffs_; }

private:
    PotentialSpec(Kind kind, std::string name, std::vector<Rational> coeffs = {})
        : kind_(kind), name_(std::move(name)), coeffs_(std::move(coeffs)) {}

    Kind kind_;
    std::string name_;
    std::vector<Rational> coeffs_;
};

/// Reads the coefficient-file format: one rational (`p/q` or `p`) per
/// non-empty line, line i holding d_i; `#` starts a comment. Throws
/// ParseError with the offending line number.
std::vector<Rational> parse_coefficient_text(std::string_view text);
/// parse_coefficient_text on a file's contents; ConfigError if unreadable.
std::vector<Rational> read_coefficient_file(const std::string& path);

} // namespace kahler
