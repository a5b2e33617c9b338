#include "kahler/potential.hpp"

#include <fstream>
#include <sstream>

#include "kahler/errors.hpp"

namespace kahler {

PotentialSpec PotentialSpec::cigar() { return {Kind::cigar, "cigar"}; }

PotentialSpec PotentialSpec::fubini_study() { return {Kind::fubini_study, "fubini_study"}; }

PotentialSpec PotentialSpec::flat() { return {Kind::flat, "flat"}; }

PotentialSpec PotentialSpec::custom(std::vector<Rational> coeffs, std::string label) {
    return {Kind::custom, std::move(label), std::move(coeffs)};
}

std::optional<PotentialSpec> PotentialSpec::named(std::string_view name) {
    if (name == "cigar") {
        return cigar();
    }
    if (name == "fubini_study" || name == "fubini-study") {
        return fubini_study();
    }
    if (name == "flat") {
        return flat();
    }
    return std::nullopt;
}

Rational PotentialSpec::coefficient(std::size_t j) const {
    if (j == 0) {
        return Rational(0);
    }
    const auto jj = static_cast<std::int64_t>(j);
    const std::int64_t sign = (j % 2 == 1) ? 1 : -1;
    switch (kind_) {
    case Kind::cigar:
        return Rational(sign, jj * jj);
    case Kind::fubini_study:
        return Rational(sign, jj);
    case Kind::flat:
        return Rational(j == 1 ? 1 : 0);
    case Kind::custom:
        return j <= coeffs_.size() ? coeffs_[j - 1] : Rational(0);
    }
    return Rational(0);
}

Series PotentialSpec::series(std::size_t order) const {
    std::vector<Rational> c(order + 1);
    for (std::size_t j = 1; j <= order; ++j) {
        c[j] = coefficient(j);
    }
    return Series(std::move(c));
}

std::vector<Rational> parse_coefficient_text(std::string_view text) {
    std::vector<Rational> out;
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (const auto hash = line.find('#'); hash != std::string::npos) {
            line.erase(hash);
        }
        const auto first = line.find_first_not_of(" \t\r");
        if (first == std::string::npos) {
            continue;
        }
        const auto last = line.find_last_not_of(" \t\r");
        const std::string token = line.substr(first, last - first + 1);
        try {
            out.push_back(Rational::parse(token));
        } catch (const ParseError& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.message());
        }
    }
    return out;
}

std::vector<Rational> read_coefficient_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open coefficient file '" + path + "'");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_coefficient_text(buf.str());
}

} // namespace kahler
