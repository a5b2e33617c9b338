#include "kahler/report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace kahler {

namespace {

std::string format_double(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

void write(const Json& j, int indent, int depth, std::string& out) {
    const auto newline = [&](int d) {
        if (indent > 0) {
            out += '\n';
            out.append(static_cast<std::size_t>(indent * d), ' ');
        }
    };
    switch (j.type()) {
    case Json::value_t::object: {
        if (j.empty()) {
            out += "{}";
            return;
        }
        out += '{';
        bool first = true;
        for (const auto& [key, value] : j.items()) {
            if (!first) {
                out += ',';
            }
            first = false;
            newline(depth + 1);
            out += Json(key).dump();
            out += indent > 0 ? ": " : ":";
            write(value, indent, depth + 1, out);
        }
        newline(depth);
        out += '}';
        return;
    }
    case Json::value_t::array: {
        if (j.empty()) {
            out += "[]";
            return;
        }
        out += '[';
        bool first = true;
        for (const auto& value : j) {
            if (!first) {
                out += ',';
            }
            first = false;
            newline(depth + 1);
            write(value, indent, depth + 1, out);
        }
        newline(depth);
        out += ']';
        return;
    }
    case Json::value_t::number_float: {
        const double v = j.get<double>();
        out += std::isfinite(v) ? format_double(v) : "null";
        return;
    }
    default:
        out += j.dump();
        return;
    }
}

std::string csv_double(double v) { return format_double(v); }

} // namespace

std::string dump_json(const Json& j, int indent) {
    std::string out;
    write(j, indent, 0, out);
    return out;
}

Json rational_json(const Rational& r) { return r.to_string(); }

Json to_json(const CriterionReport& r) {
    Json coeffs = Json::array();
    for (const auto& [n, b] : r.coefficients) {
        coeffs.push_back(Json{{"n", n}, {"b", rational_json(b)}});
    }
    Json j;
    j["metric"] = r.metric;
    j["c"] = rational_json(r.c);
    j["order_max"] = r.order_max;
    j["first_violation"] = r.first_violation ? Json(*r.first_violation) : Json(nullptr);
    j["nonzero_count"] = r.nonzero_count;
    j["verdict"] = to_string(r.verdict);
    j["coefficients"] = std::move(coeffs);
    return j;
}

Json to_json(const ScanResult& s) {
    Json j;
    j["rho_max"] = s.rho_max;
    j["rho_step"] = s.rho_step;
    j["alpha_steps"] = s.alpha_steps;
    j["tolerance"] = s.tolerance;
    j["points"] = s.points;
    j["min_value"] = s.min_value;
    j["argmin"] = Json{{"rho1", s.argmin_rho1}, {"rho2", s.argmin_rho2}, {"alpha", s.argmin_alpha}};
    j["count_negative"] = s.count_negative;
    j["min_off_diagonal"] = s.min_off_diagonal;
    j["lower_bound_violations"] = s.lower_bound_violations;
    return j;
}

Json to_json(const Li2Value& v) {
    return Json{{"value", v.value}, {"est_error", v.est_error}};
}

Json to_json(const std::vector<ViolationRow>& rows) {
    Json arr = Json::array();
    for (const auto& row : rows) {
        arr.push_back(Json{{"c", rational_json(row.c)},
                           {"first_violation",
                            row.first_violation ? Json(*row.first_violation) : Json(nullptr)},
                           {"status", row.status}});
    }
    return arr;
}

std::string scan_csv(const ScanResult& s) {
    std::ostringstream os;
    os << "rho_max,rho_step,alpha_steps,tolerance,points,min_value,argmin_rho1,argmin_rho2,"
          "argmin_alpha,count_negative,min_off_diagonal,lower_bound_violations\n";
    os << csv_double(s.rho_max) << ',' << csv_double(s.rho_step) << ',' << s.alpha_steps << ','
       << csv_double(s.tolerance) << ',' << s.points << ',' << csv_double(s.min_value) << ','
       << csv_double(s.argmin_rho1) << ',' << csv_double(s.argmin_rho2) << ','
       << csv_double(s.argmin_alpha) << ',' << s.count_negative << ','
       << csv_double(s.min_off_diagonal) << ',' << s.lower_bound_violations << '\n';
    return os.str();
}

std::string violation_csv(const std::vector<ViolationRow>& rows) {
    std::ostringstream os;
    os << "c,first_violation,status\n";
    for (const auto& row : rows) {
        os << row.c.to_string() << ',';
        if (row.first_violation) {
            os << *row.first_violation;
        }
        os << ',' << row.status << '\n';
    }
    return os.str();
}

} // namespace kahler
