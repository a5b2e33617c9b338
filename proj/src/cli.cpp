#include "kahler/cli.hpp"

#include <cmath>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>

#include "kahler/bell.hpp"
#include "kahler/criterion.hpp"
#include "kahler/diastasis.hpp"
#include "kahler/errors.hpp"
#include "kahler/polylog.hpp"
#include "kahler/report.hpp"

namespace kahler::cli {

namespace {

// Problems with the invocation itself; mapped to exit code 2.
class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string op;
    std::string bell_op = "partial";
    std::string li2_op = "real";
    std::string scan_op = "scan";
    std::string crit_op = "report";
    std::string limits_op = "lhs";
    std::string metric;
    std::string c = "1";
    std::size_t order = 0;
    double rho_max = kScanRhoMax;
    double rho_step = kScanRhoStep;
    std::size_t alpha_steps = kScanAlphaSteps;
    double x = 0.0;
    double rho = 0.0;
    double alpha = 0.0;
    double rho1 = 0.0;
    double rho2 = 0.0;
    double theta1 = 0.0;
    double theta2 = 0.0;
    std::string p = "0,0";
    std::string q = "0,0";
    std::size_t n = 1;
    std::size_t k = 1;
    std::size_t j_max = 100;
    std::string values;
    std::string t = "1";
    std::string r = "1";
    std::string route = "auto";
    std::string output = "json";
};

double zeta2_power_over_factorial(std::size_t k) {
    const double zeta2 = std::numbers::pi * std::numbers::pi / 6.0;
    return std::pow(zeta2, static_cast<double>(k)) / std::tgamma(static_cast<double>(k) + 1.0);
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, sep)) {
        parts.push_back(item);
    }
    return parts;
}

std::vector<Rational> parse_rational_list(const std::string& text) {
    std::vector<Rational> out;
    for (const auto& part : split(text, ',')) {
        out.push_back(Rational::parse(part));
    }
    if (out.empty()) {
        throw UsageError("empty rational list");
    }
    return out;
}

std::pair<double, double> parse_complex(const std::string& text) {
    const auto parts = split(text, ',');
    if (parts.size() != 2) {
        throw UsageError("complex value must be 're,im', got '" + text + "'");
    }
    try {
        return {std::stod(parts[0]), std::stod(parts[1])};
    } catch (const std::exception&) {
        throw UsageError("malformed complex value '" + text + "'");
    }
}

PotentialSpec resolve_metric(const std::string& metric) {
    if (metric.empty()) {
        throw UsageError("--metric is required");
    }
    if (metric.front() == '@') {
        const std::string path = metric.substr(1);
        try {
            return PotentialSpec::custom(read_coefficient_file(path), metric);
        } catch (const ConfigError& e) {
            throw UsageError(e.message());
        }
    }
    if (auto spec = PotentialSpec::named(metric)) {
        return *spec;
    }
    throw UsageError("unknown metric '" + metric + "' (expected cigar, fubini_study, flat or @file)");
}

void require_json(const Options& o, const std::string& what) {
    if (o.output != "json") {
        throw UsageError(what + " is a scalar result; only --output json is available");
    }
}

struct Emit {
    Json inputs = Json::object();
    Json result;
    Json diagnostics = Json::object();
    std::optional<std::string> csv;
};

Emit run_bell(const Options& o) {
    require_json(o, "bell");
    Emit e;
    e.inputs["op"] = o.op;
    e.inputs["n"] = o.n;
    e.inputs["k"] = o.k;
    const auto input = [&](std::size_t needed) {
        if (o.values.empty()) {
            e.inputs["values"] = "j!/j^2";
            return BellInput::factorial_over_square(needed);
        }
        e.inputs["values"] = o.values;
        return BellInput(parse_rational_list(o.values));
    };

    if (o.op == "partial" || o.op == "enum" || o.op == "nested") {
        const BellInput x = input(o.n);
        Rational v;
        if (o.op == "partial") {
            v = bell_partial(o.n, o.k, x);
        } else if (o.op == "enum") {
            v = bell_partial_enum(o.n, o.k, x);
        } else {
            v = bell_partial_nested(o.n, o.k, x);
        }
        e.result = Json{{"value", rational_json(v)}};
    } else if (o.op == "complete") {
        const Rational v = bell_complete(o.n, input(o.n));
        e.result = Json{{"value", rational_json(v)}};
    } else if (o.op == "homogeneity") {
        const Rational t = Rational::parse(o.t);
        const Rational r = Rational::parse(o.r);
        e.inputs["t"] = rational_json(t);
        e.inputs["r"] = rational_json(r);
        e.result = Json{{"holds", bell_homogeneity_check(o.n, o.k, input(o.n), t, r)}};
    } else if (o.op == "ratio") {
        const Rational v = bell_ratio(o.n, o.k);
        e.result = Json{{"value", rational_json(v)}, {"approx", v.to_double()}};
        e.diagnostics["limit"] = zeta2_power_over_factorial(o.k);
    } else if (o.op == "a-sum") {
        e.inputs["j_max"] = o.j_max;
        const Rational v = a_sequence_partial_sum(o.k, o.j_max);
        e.result = Json{{"value", rational_json(v)}, {"approx", v.to_double()}};
        e.diagnostics["zeta2_power"] =
            std::pow(std::numbers::pi * std::numbers::pi / 6.0, static_cast<double>(o.k));
    } else {
        throw UsageError("unknown bell op '" + o.op + "'");
    }
    return e;
}

Emit run_li2(const Options& o) {
    require_json(o, "li2");
    Emit e;
    e.inputs["op"] = o.op;
    Li2Value v;
    if (o.op == "real") {
        e.inputs["x"] = o.x;
        v = li2_real(o.x);
    } else if (o.op == "circle") {
        e.inputs["rho"] = o.rho;
        e.inputs["alpha"] = o.alpha;
        v = re_li2_circle(o.rho, o.alpha);
    } else if (o.op == "lower-bound") {
        e.inputs["rho"] = o.rho;
        v = li2_lower_bound(o.rho);
    } else {
        throw UsageError("unknown li2 op '" + o.op + "'");
    }
    e.result = to_json(v);
    return e;
}

Emit run_diastasis(const Options& o) {
    Emit e;
    e.inputs["op"] = o.op;
    const auto points = [&]() {
        e.inputs["rho1"] = o.rho1;
        e.inputs["theta1"] = o.theta1;
        e.inputs["rho2"] = o.rho2;
        e.inputs["theta2"] = o.theta2;
        return std::pair{PolarPoint::make(o.rho1, o.theta1), PolarPoint::make(o.rho2, o.theta2)};
    };
    if (o.op == "scan") {
        e.inputs["rho_max"] = o.rho_max;
        e.inputs["rho_step"] = o.rho_step;
        e.inputs["alpha_steps"] = o.alpha_steps;
        const ScanResult s = positivity_scan(o.rho_max, o.rho_step, o.alpha_steps);
        e.result = to_json(s);
        if (o.output == "csv") {
            e.csv = scan_csv(s);
        }
        return e;
    }
    require_json(o, "diastasis-scan --op " + o.op);
    if (o.op == "point") {
        const auto [z, w] = points();
        e.result = Json{{"value", cigar_diastasis(z, w)}};
    } else if (o.op == "lower-bound") {
        e.inputs["rho1"] = o.rho1;
        e.inputs["rho2"] = o.rho2;
        e.result = Json{{"value", cigar_diastasis_lower_bound(o.rho1, o.rho2)}};
    } else if (o.op == "ratio") {
        e.inputs["rho1"] = o.rho1;
        e.inputs["rho2"] = o.rho2;
        e.result = Json{{"value", lower_bound_ratio(o.rho1, o.rho2)}};
    } else if (o.op == "potential") {
        e.inputs["x"] = o.x;
        e.result = Json{{"value", cigar_potential(o.x)}};
    } else if (o.op == "radial") {
        const PotentialSpec spec = resolve_metric(o.metric);
        DiastasisRoute route = DiastasisRoute::automatic;
        if (o.route == "closed") {
            route = DiastasisRoute::closed_form;
        } else if (o.route == "series") {
            route = DiastasisRoute::series;
        } else if (o.route != "auto") {
            throw UsageError("unknown route '" + o.route + "'");
        }
        const std::size_t order = o.order == 0 ? 200 : o.order;
        e.inputs["metric"] = o.metric;
        e.inputs["route"] = o.route;
        e.inputs["order"] = order;
        const auto [z, w] = points();
        e.result = Json{{"value", radial_diastasis(spec, z, w, route, order)}};
        e.diagnostics["radius_estimate"] = convergence_radius_estimate(spec, order);
    } else if (o.op == "cos-metric") {
        const auto [pr, pi] = parse_complex(o.p);
        const auto [qr, qi] = parse_complex(o.q);
        e.inputs["p"] = Json::array({pr, pi});
        e.inputs["q"] = Json::array({qr, qi});
        e.result = Json{{"value", cos_metric_diastasis(pr, pi, qr, qi)}};
    } else {
        throw UsageError("unknown diastasis-scan op '" + o.op + "'");
    }
    return e;
}

std::size_t require_order(const Options& o) {
    if (o.order == 0) {
        throw UsageError("--order is required");
    }
    return o.order;
}

Emit run_criterion(const Options& o) {
    Emit e;
    e.inputs["op"] = o.op;
    e.inputs["metric"] = o.metric;
    const PotentialSpec spec = resolve_metric(o.metric);
    if (o.op == "table") {
        const auto c_list = parse_rational_list(o.c);
        std::size_t order = o.order;
        if (order == 0) {
            if (spec.kind() != PotentialSpec::Kind::cigar) {
                throw UsageError("--order is required for non-cigar tables");
            }
            order = default_cigar_order();
            e.diagnostics["order_source"] = "bootstrap";
        }
        Json cs = Json::array();
        for (const auto& c : c_list) {
            cs.push_back(rational_json(c));
        }
        e.inputs["c"] = std::move(cs);
        e.inputs["order"] = order;
        const auto rows = violation_table(spec, c_list, order);
        e.result = to_json(rows);
        if (o.output == "csv") {
            e.csv = violation_csv(rows);
        }
        return e;
    }

    require_json(o, "criterion --op " + o.op);
    const Rational c = Rational::parse(o.c);
    const std::size_t order = require_order(o);
    e.inputs["c"] = rational_json(c);
    e.inputs["order"] = order;
    if (o.op == "report") {
        const CriterionReport r = criterion_report(spec, c, order);
        e.result = to_json(r);
        e.diagnostics["bell_checked_up_to"] = r.bell_checked_up_to;
        e.diagnostics["bell_agrees"] = r.bell_agrees;
        e.diagnostics["violation_sign_bell"] =
            r.violation_sign_bell ? Json(*r.violation_sign_bell) : Json(nullptr);
        e.diagnostics["limit_target"] = r.limit_target ? Json(*r.limit_target) : Json(nullptr);
    } else if (o.op == "coefficients") {
        Json arr = Json::array();
        for (const auto& b : criterion_coefficients(spec, c, order)) {
            arr.push_back(rational_json(b));
        }
        e.result = Json{{"coefficients", std::move(arr)}};
    } else if (o.op == "first-violation") {
        const auto n = first_violation(spec, c, order);
        e.result = Json{{"first_violation", n ? Json(*n) : Json(nullptr)}};
    } else if (o.op == "embedding-dimension") {
        e.result = Json{{"embedding_dimension_count", embedding_dimension_count(spec, c, order)}};
        e.diagnostics["first_violation"] = [&] {
            const auto n = first_violation(spec, c, order);
            return n ? Json(*n) : Json(nullptr);
        }();
    } else if (o.op == "bell-check") {
        e.result = Json{{"b", rational_json(bell_route_coefficient(spec, c, order))}};
    } else {
        throw UsageError("unknown criterion op '" + o.op + "'");
    }
    return e;
}

Emit run_limits(const Options& o) {
    require_json(o, "limits");
    Emit e;
    e.inputs["op"] = o.op;
    if (o.op == "lhs") {
        const Rational c = Rational::parse(o.c);
        e.inputs["c"] = rational_json(c);
        e.inputs["n"] = o.n;
        const Rational v = lhs_sequence(c, o.n);
        const double target = limit_target(c);
        e.result = Json{{"value", rational_json(v)}, {"approx", v.to_double()}};
        e.diagnostics["limit_target"] = target;
        e.diagnostics["abs_error"] = std::abs(v.to_double() - target);
        e.diagnostics["below_one"] = v < Rational(1);
    } else if (o.op == "target") {
        const Rational c = Rational::parse(o.c);
        e.inputs["c"] = rational_json(c);
        e.result = Json{{"value", limit_target(c)}};
    } else if (o.op == "ratio") {
        e.inputs["n"] = o.n;
        e.inputs["k"] = o.k;
        const Rational v = bell_ratio(o.n, o.k);
        const double limit = zeta2_power_over_factorial(o.k);
        e.result = Json{{"value", rational_json(v)}, {"approx", v.to_double()}};
        e.diagnostics["limit"] = limit;
        e.diagnostics["abs_error"] = std::abs(v.to_double() - limit);
    } else {
        throw UsageError("unknown limits op '" + o.op + "'");
    }
    return e;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Calabi criterion and diastasis toolkit for radial Kaehler metrics", "kahler"};
    app.require_subcommand(1);
    Options o;

    const auto add_output = [&](CLI::App* sub) {
        sub->add_option("--output", o.output, "Output format")
            ->check(CLI::IsMember({"json", "csv"}))
            ->capture_default_str();
    };

    auto* bell = app.add_subcommand("bell", "Partial and complete Bell polynomials");
    bell->add_option("--op", o.bell_op,
                     "partial: bell_partial (convolution recurrence); enum: bell_partial_enum "
                     "(partition enumeration); nested: bell_partial_nested (nested binomial "
                     "sum, --k is k+1); complete: bell_complete Y_n; homogeneity: "
                     "bell_homogeneity_check with --t, --r; ratio: bell_ratio "
                     "(2n)^2 B_{2n,k+1}(a)/(2n)!; a-sum: a_sequence_partial_sum over --j-max")
        ->check(CLI::IsMember({"partial", "enum", "nested", "complete", "homogeneity", "ratio",
                               "a-sum"}))
        ->capture_default_str();
    bell->add_option("--n", o.n, "Degree n");
    bell->add_option("--k", o.k, "Weight k");
    bell->add_option("--values", o.values,
                     "Comma-separated rationals x_1,x_2,...; default x_j = j!/j^2");
    bell->add_option("--t", o.t, "Homogeneity factor t (rational)");
    bell->add_option("--r", o.r, "Homogeneity factor r (rational)");
    bell->add_option("--j-max", o.j_max, "Partial-sum length for a-sum");
    add_output(bell);

    auto* li2 = app.add_subcommand("li2", "Dilogarithm evaluations");
    li2->add_option("--op", o.li2_op,
                    "real: li2_real(--x); circle: re_li2_circle(--rho, --alpha), Kummer "
                    "quadrature; lower-bound: li2_lower_bound(--rho)")
        ->check(CLI::IsMember({"real", "circle", "lower-bound"}))
        ->capture_default_str();
    li2->add_option("--x", o.x, "Real argument x <= 1");
    li2->add_option("--rho", o.rho, "Modulus rho >= 0");
    li2->add_option("--alpha", o.alpha, "Angle alpha (radians)");
    add_output(li2);

    auto* scan = app.add_subcommand("diastasis-scan", "Cigar diastasis and related diastases");
    scan->add_option("--op", o.scan_op,
                     "scan: positivity_scan over the (rho1, rho2, alpha) lattice; point: "
                     "cigar_diastasis; lower-bound: cigar_diastasis_lower_bound; ratio: "
                     "lower_bound_ratio diagnostic; potential: cigar_potential(--x); radial: "
                     "radial_diastasis for --metric; cos-metric: cos_metric_diastasis(--p, --q)")
        ->check(CLI::IsMember(
            {"scan", "point", "lower-bound", "ratio", "potential", "radial", "cos-metric"}))
        ->capture_default_str();
    scan->add_option("--rho-max", o.rho_max, "Largest modulus on the grid")->capture_default_str();
    scan->add_option("--rho-step", o.rho_step, "Modulus step")->capture_default_str();
    scan->add_option("--alpha-steps", o.alpha_steps, "Angles on [0, 2 pi]")->capture_default_str();
    scan->add_option("--rho1", o.rho1, "Modulus of z");
    scan->add_option("--theta1", o.theta1, "Argument of z");
    scan->add_option("--rho2", o.rho2, "Modulus of w");
    scan->add_option("--theta2", o.theta2, "Argument of w");
    scan->add_option("--x", o.x, "Argument |z|^2 of the potential");
    scan->add_option("--p", o.p, "Complex p as re,im");
    scan->add_option("--q", o.q, "Complex q as re,im");
    scan->add_option("--metric", o.metric, "Metric name or @coefficient-file (radial op)");
    scan->add_option("--route", o.route, "radial route: auto, closed or series");
    scan->add_option("--order", o.order, "Series truncation for the radial op (default 200)");
    add_output(scan);

    auto* crit = app.add_subcommand("criterion", "Calabi criterion for exp(c D_0)");
    crit->add_option("--op", o.crit_op,
                     "report: CriterionReport; coefficients: criterion_coefficients; "
                     "first-violation: first_violation; embedding-dimension: "
                     "embedding_dimension_count; bell-check: bell-route b_n at n = --order; "
                     "table: violation_table over comma-separated --c")
        ->check(CLI::IsMember({"report", "coefficients", "first-violation",
                               "embedding-dimension", "bell-check", "table"}))
        ->capture_default_str();
    crit->add_option("--metric", o.metric, "cigar, fubini_study, flat or @coefficient-file")
        ->required();
    crit->add_option("--c", o.c, "Scale c as p/q (comma-separated list for table)")
        ->capture_default_str();
    crit->add_option("--order", o.order, "Truncation order N");
    add_output(crit);

    auto* limits = app.add_subcommand("limits", "Limit diagnostics of the obstruction");
    limits->add_option("--op", o.limits_op,
                       "lhs: lhs_sequence(--c, --n); target: limit_target(--c); ratio: "
                       "bell_ratio(--n, --k) against (pi^2/6)^k/k!")
        ->check(CLI::IsMember({"lhs", "target", "ratio"}))
        ->capture_default_str();
    limits->add_option("--c", o.c, "Scale c as p/q")->capture_default_str();
    limits->add_option("--n", o.n, "Order n");
    limits->add_option("--k", o.k, "Weight k");
    add_output(limits);

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    CLI::App* chosen = app.get_subcommands().front();
    const std::string name = chosen->get_name();
    o.op = name == "bell"             ? o.bell_op
           : name == "li2"            ? o.li2_op
           : name == "diastasis-scan" ? o.scan_op
           : name == "criterion"      ? o.crit_op
                                      : o.limits_op;
    try {
        Emit e;
        if (name == "bell") {
            e = run_bell(o);
        } else if (name == "li2") {
            e = run_li2(o);
        } else if (name == "diastasis-scan") {
            e = run_diastasis(o);
        } else if (name == "criterion") {
            e = run_criterion(o);
        } else {
            e = run_limits(o);
        }
        if (e.csv) {
            out << *e.csv;
        } else {
            Json doc;
            doc["subcommand"] = name;
            doc["inputs"] = std::move(e.inputs);
            doc["result"] = std::move(e.result);
            doc["diagnostics"] = std::move(e.diagnostics);
            out << dump_json(doc) << '\n';
        }
        return 0;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const ParseError& e) {
        err << "usage error: " << e.what() << '\n';
        return 2;
    } catch (const Error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
}

} // namespace kahler::cli
