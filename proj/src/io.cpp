#include "poincare/io.hpp"

#include <cmath>
#include <cstdio>
#include <set>

#include "poincare/errors.hpp"

namespace poincare::io {

namespace {

double number_or_inf(const json& v, double inf, const char* what) {
    if (v.is_null()) return inf;
    if (!v.is_number()) throw ArgumentError(std::string(what) + " must be a number or null");
    return v.get<double>();
}

json finite_or_null(double x) { return std::isfinite(x) ? json(x) : json(nullptr); }

// JSON has no infinity; unbounded sides are written as null.
json rounded(double x, int digits) { return finite_or_null(round_sig(x, digits)); }

}  // namespace

DistributionSpec spec_from_json(const json& j) {
    if (!j.is_object()) throw ArgumentError("distribution spec must be a JSON object");
    static const std::set<std::string> known{"family", "location", "scale", "truncation"};
    for (const auto& [key, _] : j.items())
        if (!known.count(key)) throw ArgumentError("unknown key '" + key + "' in distribution spec");
    if (!j.contains("family") || !j["family"].is_string()) throw ArgumentError("spec needs a string 'family'");
    const dist::Family family = dist::family_from_string(j["family"].get<std::string>());

    const auto number = [&](const char* key, double fallback) {
        if (!j.contains(key)) return fallback;
        if (!j[key].is_number()) throw ArgumentError(std::string("'") + key + "' must be a number");
        return j[key].get<double>();
    };
    const double location = number("location", 0.0);
    const double scale = number("scale", 1.0);

    std::optional<Interval> truncation;
    if (j.contains("truncation") && !j["truncation"].is_null()) {
        const json& t = j["truncation"];
        if (!t.is_array() || t.size() != 2) throw ArgumentError("'truncation' must be a two-element array");
        truncation = Interval{number_or_inf(t[0], -kInf, "truncation lower end"),
                              number_or_inf(t[1], kInf, "truncation upper end")};
    }
    return DistributionSpec(family, location, scale, truncation);
}

DistributionSpec parse_spec(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ArgumentError(std::string("invalid JSON: ") + e.what());
    }
    return spec_from_json(j);
}

json spec_to_json(const DistributionSpec& d) {
    json j;
    j["family"] = std::string(dist::to_string(d.family()));
    j["location"] = d.location();
    j["scale"] = d.scale();
    if (d.truncation()) j["truncation"] = {finite_or_null(d.truncation()->lo), finite_or_null(d.truncation()->hi)};
    return j;
}

double round_sig(double x, int digits) {
    if (digits <= 0 || !std::isfinite(x) || x == 0.0) return x;
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*e", digits - 1, x);
    return std::strtod(buf, nullptr);
}

std::string format_number(double x, int digits) {
    if (std::isnan(x)) return "nan";
    if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*g", digits > 0 ? digits : 17, x);
    return buf;
}

json bound_to_json(const bounds::BoundReport& r, int digits) {
    json j;
    j["method"] = std::string(bounds::to_string(r.method));
    j["lower"] = rounded(r.lower, digits);
    j["upper"] = rounded(r.upper, digits);
    json details = json::object();
    for (const auto& [k, v] : r.details) details[k] = rounded(v, digits);
    j["details"] = details;
    return j;
}

json constant_to_json(const DistributionSpec& d, const ConstantReport& r, int digits) {
    json j;
    j["spec"] = spec_to_json(d);
    if (r.estimate) {
        j["value"] = rounded(r.estimate->value, digits);
        j["method"] = std::string(to_string(r.estimate->method));
        j["error_estimate"] = rounded(r.estimate->error_estimate, digits);
        j["spectral_gap"] = rounded(r.estimate->spectral_gap, digits);
    } else {
        // Bounds-only: the tightest upper bound stands in for the value.
        j["value"] = rounded(r.upper, digits);
        j["method"] = "bounds";
        j["error_estimate"] = rounded(r.upper - r.lower, digits);
    }
    if (r.saturating) j["rayleigh"] = rounded(r.saturating->rayleigh, digits);
    json b = json::object();
    for (const auto& rep : r.bounds) b[std::string(bounds::to_string(rep.method))] = bound_to_json(rep, digits);
    j["bounds"] = b;
    j["lower"] = rounded(r.lower, digits);
    j["upper"] = rounded(r.upper, digits);
    if (!r.warning.empty()) j["warning"] = r.warning;
    return j;
}

json screening_to_json(const sa::ScreeningReport& r, int digits) {
    json j;
    j["n"] = r.n;
    j["bootstrap"] = r.bootstrap;
    j["seed"] = r.seed;
    j["sampling"] = r.sampling == sa::Sampling::halton ? "halton" : "monte_carlo";
    j["threshold"] = r.threshold;
    j["D"] = rounded(r.D, digits);
    j["D_sd"] = rounded(r.D_sd, digits);
    j["degenerate"] = r.degenerate;
    json inputs = json::array();
    for (const auto& in : r.inputs) {
        inputs.push_back({{"name", in.name},
                          {"nu", rounded(in.nu, digits)},
                          {"nu_sd", rounded(in.nu_sd, digits)},
                          {"total_sobol", rounded(in.total_sobol, digits)},
                          {"sobol_sd", rounded(in.sobol_sd, digits)},
                          {"poincare", rounded(in.poincare, digits)},
                          {"upper_bound", rounded(in.upper_bound, digits)},
                          {"bound_sd", rounded(in.bound_sd, digits)},
                          {"active", in.active}});
    }
    j["inputs"] = inputs;
    return j;
}

void write_screening_csv(std::ostream& os, const sa::ScreeningReport& r, int digits) {
    os << "name,nu,nu_sd,total_sobol,sobol_sd,poincare,upper_bound,bound_sd,active\n";
    for (const auto& in : r.inputs) {
        os << in.name << ',' << format_number(in.nu, digits) << ',' << format_number(in.nu_sd, digits) << ','
           << format_number(in.total_sobol, digits) << ',' << format_number(in.sobol_sd, digits) << ','
           << format_number(in.poincare, digits) << ',' << format_number(in.upper_bound, digits) << ','
           << format_number(in.bound_sd, digits) << ',' << (in.active ? "true" : "false") << '\n';
    }
}

}  // namespace poincare::io
