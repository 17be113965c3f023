// poincare: Poincaré constants of truncated 1-D laws and DGSM screening.
#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include "poincare/bounds.hpp"
#include "poincare/constant.hpp"
#include "poincare/errors.hpp"
#include "poincare/fem.hpp"
#include "poincare/io.hpp"
#include "poincare/parallel.hpp"
#include "poincare/sa.hpp"
#include "poincare/selftest.hpp"

namespace {

using namespace poincare;
using io::json;

constexpr int kInvalidInput = 2;
constexpr int kNumericalFailure = 3;

// Inline JSON, "-" for stdin, or a file path.
std::string read_spec_text(const std::string& arg) {
    if (!arg.empty() && arg.front() == '{') return arg;
    if (arg == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
    std::ifstream in(arg);
    if (!in) throw ArgumentError("cannot read spec file '" + arg + "'");
    return {std::istreambuf_iterator<char>(in), {}};
}

void print_json(const json& j) { std::cout << j.dump(2) << '\n'; }

int report_error(const char* kind, const std::string& message, int code) {
    print_json({{"error", {{"kind", kind}, {"message", message}}}});
    return code;
}

const char* kGridHeader = "fa,one_minus_fb,a,b,cp,method,var_lower,logistic_upper,doubleexp_upper,status";

std::string grid_row(const DistributionSpec& parent, double fa, double tail, double tol, int digits) {
    const auto num = [digits](double x) { return io::format_number(x, digits); };
    std::ostringstream row;
    row << num(fa) << ',' << num(tail) << ',';
    try {
        const double a = dist::quantile(parent, fa);
        const double b = dist::inverse_sf(parent, tail);
        const DistributionSpec d = parent.truncated(Interval{a, b});
        const auto rep = compute_constant(d, SolveMethod::automatic, tol, false);
        if (!rep.estimate) throw NumericalError(rep.warning);
        row << num(a) << ',' << num(b) << ',' << num(rep.estimate->value) << ','
            << to_string(rep.estimate->method) << ',' << num(bounds::variance_lower_bound(d)) << ','
            << num(bounds::transport_logistic_bound(d)) << ',' << num(bounds::transport_doubleexp_bound(d))
            << ",ok";
    } catch (const Error& e) {
        std::string msg = e.what();
        for (char& c : msg)
            if (c == ',' || c == '\n') c = ';';
        row << ",,,,,,," << e.kind() << ": " << msg;
    }
    return row.str();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Poincaré constants of truncated one-dimensional laws and DGSM-based screening"};
    app.require_subcommand(1);
    int precision = 6;
    std::uint64_t seed = 42;
    app.add_option("--precision", precision, "Significant digits in printed numbers (0 = full precision)")
        ->capture_default_str();

    // constant
    auto* constant = app.add_subcommand("constant", "Poincaré constant of a JSON-specified law");
    std::string spec_arg;
    std::string method_name = "auto";
    double tol = 1e-6;
    std::size_t max_elements = std::size_t{1} << 20;
    constant->add_option("spec", spec_arg, "Spec JSON: inline text, file path, or - for stdin")->required();
    constant->add_option("--method", method_name, "auto | exact | fem | bounds")->capture_default_str();
    constant->add_option("--tol", tol, "Relative tolerance for FEM refinement")->capture_default_str();
    constant->add_option("--max-elements", max_elements, "FEM element budget")->capture_default_str();

    // bounds
    auto* bounds_cmd = app.add_subcommand("bounds", "Closed-form and quadrature bounds on the constant");
    bounds_cmd->add_option("spec", spec_arg, "Spec JSON: inline text, file path, or - for stdin")->required();

    // grid
    auto* grid = app.add_subcommand(
        "grid",
        "CSV of constants over truncations [F^-1(fa), F^-1(1 - tail)] of a parent law.\n"
        "Columns: fa,one_minus_fb,a,b,cp,method,var_lower,logistic_upper,doubleexp_upper,status");
    std::string grid_spec = R"({"family":"normal"})";
    int resolution = 20;
    std::vector<double> cell;
    std::string grid_out;
    grid->add_option("--parent", grid_spec, "Parent law as spec JSON")->capture_default_str();
    grid->add_option("--resolution", resolution, "Points per axis, in [1, 200]")->capture_default_str();
    grid->add_option("--cell", cell, "Single cell: fa tail")->expected(2);
    grid->add_option("--tol", tol, "Relative tolerance for FEM refinement")->capture_default_str();
    grid->add_option("--out", grid_out, "Write CSV here instead of stdout");

    // flood
    auto* flood = app.add_subcommand("flood", "Flood-model screening study and its law constants");
    std::size_t n = 10000, bootstrap = 500;
    double threshold = 0.05;
    std::string out_json, out_csv, sampling = "halton";
    flood->add_option("--n", n, "Sample size")->capture_default_str();
    flood->add_option("--seed", seed, "Random seed")->capture_default_str();
    flood->add_option("--threshold", threshold, "Screening threshold on the DGSM bound")->capture_default_str();
    flood->add_option("--bootstrap", bootstrap, "Bootstrap resamples")->capture_default_str();
    flood->add_option("--sampling", sampling, "halton | mc")->capture_default_str();
    flood->add_option("--out", out_json, "Write the report JSON here");
    flood->add_option("--csv", out_csv, "Write one CSV row per input here");

    auto* selftest = app.add_subcommand("selftest", "Golden values for the closed forms and the flood and river laws");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        return report_error("ArgumentError", e.what(), kInvalidInput);
    }

    try {
        if (constant->parsed()) {
            const DistributionSpec d = io::parse_spec(read_spec_text(spec_arg));
            const SolveMethod method = solve_method_from_string(method_name);
            if (!(tol > 0.0)) throw ArgumentError("--tol must be positive");
            ConstantReport rep;
            if (method == SolveMethod::fem && d.support().bounded()) {
                // Honour the element budget explicitly.
                rep = compute_constant(d, SolveMethod::bounds, tol, true);
                rep.bounds_only = false;
                fem::FemOptions opts{tol};
                opts.max_elements = max_elements;
                auto r = fem::poincare_fem(d, opts);
                rep.estimate = r.estimate;
                rep.saturating = std::move(r.saturating);
            } else {
                rep = compute_constant(d, method, tol, true);
            }
            print_json(io::constant_to_json(d, rep, precision));
        } else if (bounds_cmd->parsed()) {
            const DistributionSpec d = io::parse_spec(read_spec_text(spec_arg));
            const auto rep = compute_constant(d, SolveMethod::bounds, tol, true);
            json j;
            j["spec"] = io::spec_to_json(d);
            json list = json::array();
            for (const auto& b : rep.bounds) list.push_back(io::bound_to_json(b, precision));
            j["bounds"] = list;
            j["lower"] = io::round_sig(rep.lower, precision);
            j["upper"] = std::isfinite(rep.upper) ? json(io::round_sig(rep.upper, precision)) : json(nullptr);
            print_json(j);
        } else if (grid->parsed()) {
            const DistributionSpec parent = io::parse_spec(read_spec_text(grid_spec));
            if (resolution < 1 || resolution > 200) throw ArgumentError("--resolution must be in [1, 200]");
            std::vector<std::pair<double, double>> cells;
            if (!cell.empty()) {
                const double fa = cell[0], tail = cell[1];
                if (!(fa > 0.0 && fa < 1.0 && tail > 0.0 && tail < 1.0))
                    throw ArgumentError("grid cell coordinates must lie in (0, 1)");
                if (!(fa + tail < 1.0)) throw ArgumentError("grid cell needs F(a) + 1 - F(b) < 1");
                cells.emplace_back(fa, tail);
            } else {
                for (int i = 0; i < resolution; ++i)
                    for (int k = 0; k < resolution; ++k) {
                        const double fa = (i + 1.0) / (resolution + 1.0);
                        const double tail = (k + 1.0) / (resolution + 1.0);
                        if (fa + tail < 1.0) cells.emplace_back(fa, tail);
                    }
            }
            std::vector<std::string> rows(cells.size());
            parallel_for(cells.size(), [&](std::size_t c) {
                rows[c] = grid_row(parent, cells[c].first, cells[c].second, tol, precision);
            });
            std::ofstream file;
            if (!grid_out.empty()) {
                file.open(grid_out);
                if (!file) throw ArgumentError("cannot write '" + grid_out + "'");
            }
            std::ostream& os = grid_out.empty() ? std::cout : file;
            os << kGridHeader << '\n';
            for (const auto& r : rows) os << r << '\n';
        } else if (flood->parsed()) {
            sa::SampleOptions opts;
            opts.n = n;
            opts.seed = seed;
            opts.bootstrap = bootstrap;
            if (sampling == "halton")
                opts.sampling = sa::Sampling::halton;
            else if (sampling == "mc")
                opts.sampling = sa::Sampling::monte_carlo;
            else
                throw ArgumentError("--sampling must be halton or mc");

            json block = json::array();
            for (const auto& s : golden::flood_law_summaries()) {
                block.push_back({{"law", s.label},
                                 {"transport_doubleexp", io::round_sig(s.transport_doubleexp, precision)},
                                 {"transport_logistic", io::round_sig(s.transport_logistic, precision)},
                                 {"constant", io::round_sig(s.constant, precision)},
                                 {"variance", io::round_sig(s.variance, precision)}});
            }
            const auto report = sa::screening_study(sa::flood_model(), sa::flood_inputs(), opts, threshold);
            const json rep_json = io::screening_to_json(report, precision);
            if (!out_json.empty()) {
                std::ofstream f(out_json);
                if (!f) throw ArgumentError("cannot write '" + out_json + "'");
                f << rep_json.dump(2) << '\n';
            }
            if (!out_csv.empty()) {
                std::ofstream f(out_csv);
                if (!f) throw ArgumentError("cannot write '" + out_csv + "'");
                io::write_screening_csv(f, report, precision);
            }
            print_json({{"constants", block}, {"report", rep_json}});
        } else if (selftest->parsed()) {
            const auto checks = golden::run_golden_suite();
            bool ok = true;
            for (const auto& c : checks) {
                ok = ok && c.pass;
                std::cout << (c.pass ? "PASS " : "FAIL ") << c.name << ": computed "
                          << io::format_number(c.computed, 10) << ", expected " << io::format_number(c.expected, 10)
                          << " +- " << io::format_number(c.tol, 3);
                if (!c.error.empty()) std::cout << " (" << c.error << ")";
                std::cout << '\n';
            }
            return ok ? 0 : 1;
        }
    } catch (const ArgumentError& e) {
        return report_error(e.kind(), e.what(), kInvalidInput);
    } catch (const DomainError& e) {
        return report_error(e.kind(), e.what(), kInvalidInput);
    } catch (const Error& e) {
        return report_error(e.kind(), e.what(), kNumericalFailure);
    } catch (const std::exception& e) {
        return report_error("Error", e.what(), kNumericalFailure);
    }
    return 0;
}
