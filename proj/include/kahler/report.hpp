#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "kahler/criterion.hpp"
#include "kahler/diastasis.hpp"
#include "kahler/polylog.hpp"

namespace kahler {

using Json = nlohmann::ordered_json;

/// Serialises with fixed field order and every floating-point number printed
/// with 17 significant digits, so equal inputs give byte-identical text.
/// Non-finite floats become null.
std::string dump_json(const Json& j, int indent = 2);

/// Rationals travel as "p/q" strings.
Json rational_json(const Rational& r);

Json to_json(const CriterionReport& r);
Json to_json(const ScanResult& s);
Json to_json(const Li2Value& v);
Json to_json(const std::vector<ViolationRow>& rows);

std::string scan_csv(const ScanResult& s);
std::string violation_csv(const std::vector<ViolationRow>& rows);

} // namespace kahler
