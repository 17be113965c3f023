#include "poincare/selftest.hpp"

#include <cmath>
#include <functional>
#include <numbers>

#include "poincare/bounds.hpp"
#include "poincare/constant.hpp"
#include "poincare/errors.hpp"
#include "poincare/exact.hpp"
#include "poincare/fem.hpp"
#include "poincare/sa.hpp"

namespace poincare::golden {

using dist::Family;

std::vector<LawSummary> flood_law_summaries() {
    const auto inputs = sa::flood_inputs();
    const std::vector<std::pair<std::string, DistributionSpec>> laws{
        {"T(-1,1)", DistributionSpec(Family::triangular)},
        {"N(0,1)|[-1.875,inf)", dist::standardize(inputs[1]).first},
        {"G(0,1)|[-0.919,3.561]", dist::standardize(inputs[0]).first},
    };
    std::vector<LawSummary> out;
    for (const auto& [label, law] : laws) {
        LawSummary s{label, law};
        s.transport_doubleexp = bounds::transport_doubleexp_bound(law);
        s.transport_logistic = bounds::transport_logistic_bound(law);
        const auto rep = compute_constant(law, SolveMethod::automatic, 1e-6, false);
        if (!rep.estimate) throw NumericalError("no constant for " + label + ": " + rep.warning);
        s.constant = rep.estimate->value;
        s.variance = bounds::variance_lower_bound(law);
        out.push_back(s);
    }
    return out;
}

std::vector<RiverFixture> river_fixture() {
    const DistributionSpec strickler = DistributionSpec::uniform_on(20.0, 40.0);
    const DistributionSpec level(Family::normal, 0.0, 1.0, Interval{-3.0, 3.0});
    const DistributionSpec flow(Family::normal, 0.0, 50.0, Interval{-150.0, 150.0});
    return {
        {"K11", strickler, 5.695e-3, 0.625}, {"K12", strickler, 2.728e-4, 0.029}, {"dZ11", level, 1.089e-1, 0.288},
        {"dZ12", level, 6.592e-3, 0.017},    {"Q", flow, 3.553e-5, 0.235},
    };
}

namespace {

void add(std::vector<Check>& out, std::string name, double expected, double tol,
         const std::function<double()>& compute) {
    Check c{std::move(name), expected, std::nan(""), tol, false, {}};
    try {
        c.computed = compute();
        c.pass = std::fabs(c.computed - expected) <= tol;
    } catch (const std::exception& e) {
        c.error = e.what();
    }
    out.push_back(std::move(c));
}

}  // namespace

std::vector<Check> run_golden_suite() {
    constexpr double pi = std::numbers::pi;
    std::vector<Check> out;

    add(out, "uniform [-1/2,1/2]", 1.0 / (pi * pi), 1e-12,
        [] { return exact::uniform_constant(-0.5, 0.5).estimate.value; });
    add(out, "double exponential [0,pi]", 0.8, 1e-10,
        [] { return exact::truncated_doubleexp_constant(0.0, pi).estimate.value; });
    add(out, "double exponential whole line", 4.0, 4e-3,
        [] { return exact::exact_constant(DistributionSpec(Family::double_exponential)).estimate.value; });
    add(out, "triangular", 0.1729, 1e-4, [] { return exact::triangular_constant().estimate.value; });
    add(out, "normal by exhaustion", 1.0, 1e-3,
        [] { return fem::unbounded_limit(DistributionSpec(Family::normal)).value; });

    std::vector<LawSummary> laws;
    try {
        laws = flood_law_summaries();
    } catch (const std::exception& e) {
        add(out, "flood laws", 0.0, 0.0, [&]() -> double { throw NumericalError(e.what()); });
    }
    const double expected[3][4] = {{1.0, 0.296, 0.173, 0.167}, {5.912, 1.484, 0.892, 0.862},
                                   {6.956, 2.418, 1.257, 1.012}};
    for (std::size_t r = 0; r < laws.size(); ++r) {
        const auto& s = laws[r];
        add(out, s.label + " double exponential transport", expected[r][0], 5e-3,
            [&] { return s.transport_doubleexp; });
        add(out, s.label + " logistic transport", expected[r][1], 5e-3, [&] { return s.transport_logistic; });
        add(out, s.label + " constant", expected[r][2], 5e-3, [&] { return s.constant; });
        add(out, s.label + " variance", expected[r][3], 5e-3, [&] { return s.variance; });
    }

    const auto fixture = river_fixture();
    add(out, "uniform [20,40]", 40.528, 1e-3, [&] { return exact::exact_constant(fixture[0].law).estimate.value; });
    add(out, "N(0,1)|[-3,3]", 0.976, 1e-3, [&] { return exact::exact_constant(fixture[2].law).estimate.value; });
    add(out, "N(0,50^2)|[-150,150]", 2441.071, 2.5,
        [&] { return exact::exact_constant(fixture[4].law).estimate.value; });
    for (const auto& f : fixture) {
        add(out, f.name + " DGSM bound", f.expected_bound, 2e-3, [&] {
            const double c = exact::exact_constant(f.law).estimate.value;
            return sa::dgsm_upper_bound(c, f.nu, kRiverVariance);
        });
    }
    return out;
}

}  // namespace poincare::golden
