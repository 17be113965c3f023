#include "poincare/constant.hpp"

#include <cmath>

#include "poincare/errors.hpp"
#include "poincare/exact.hpp"
#include "poincare/fem.hpp"

namespace poincare {

SolveMethod solve_method_from_string(const std::string& name) {
    if (name == "auto") return SolveMethod::automatic;
    if (name == "exact") return SolveMethod::exact;
    if (name == "fem") return SolveMethod::fem;
    if (name == "bounds") return SolveMethod::bounds;
    throw ArgumentError("unknown method '" + name + "' (expected auto, exact, fem or bounds)");
}

namespace {

// Constant of the untruncated parent when it is known in closed form.
std::optional<double> parent_constant(const DistributionSpec& d) {
    try {
        return exact::exact_constant(d.parent()).estimate.value;
    } catch (const Error&) {
        return std::nullopt;
    }
}

}  // namespace

std::vector<bounds::BoundReport> collect_bounds(const DistributionSpec& d) {
    using bounds::BoundMethod;
    using bounds::BoundReport;
    std::vector<BoundReport> out;

    const auto attempt = [&](auto&& fn) {
        try {
            fn();
        } catch (const NotApplicable&) {
        } catch (const PreconditionError&) {
        }
    };

    attempt([&] {
        BoundReport r;
        r.method = BoundMethod::variance;
        r.lower = bounds::variance_lower_bound(d);
        out.push_back(r);
    });
    out.push_back(bounds::muckenhoupt(d));
    {
        BoundReport r;
        r.method = BoundMethod::transport_doubleexp;
        r.upper = bounds::transport_doubleexp_bound(d);
        out.push_back(r);
    }
    {
        BoundReport r;
        r.method = BoundMethod::transport_logistic;
        r.upper = bounds::transport_logistic_bound(d);
        out.push_back(r);
    }
    attempt([&] {
        BoundReport r;
        r.method = BoundMethod::bakry_emery;
        r.upper = bounds::bakry_emery_bound(d);
        out.push_back(r);
    });
    if (d.truncation() && d.symmetric_family()) {
        const Interval s = d.support();
        const double loc = d.location();
        if (s.bounded() && std::fabs((s.lo - loc) + (s.hi - loc)) <= 1e-12 * d.scale()) {
            if (const auto parent_cp = parent_constant(d)) {
                attempt([&] {
                    BoundReport r;
                    r.method = BoundMethod::symmetric_restriction;
                    r.upper = bounds::symmetric_restriction_bound(d.parent(), s, *parent_cp);
                    r.details = {{"parent_constant", *parent_cp}};
                    out.push_back(r);
                });
            }
        }
    }
    return out;
}

ConstantReport compute_constant(const DistributionSpec& d, SolveMethod method, double tol, bool with_bounds) {
    ConstantReport rep;
    if (with_bounds || method == SolveMethod::bounds) {
        rep.bounds = collect_bounds(d);
        for (const auto& b : rep.bounds) {
            rep.lower = std::max(rep.lower, b.lower);
            rep.upper = std::min(rep.upper, b.upper);
        }
    }

    const fem::FemOptions fem_opts{tol};
    const auto run_fem = [&] {
        if (d.support().bounded()) {
            auto r = fem::poincare_fem(d, fem_opts);
            rep.estimate = r.estimate;
            rep.saturating = std::move(r.saturating);
        } else {
            rep.estimate = fem::unbounded_limit(d, fem::FemOptions{std::max(tol, 1e-4)});
        }
    };

    switch (method) {
        case SolveMethod::exact: {
            auto r = exact::exact_constant(d);
            rep.estimate = r.estimate;
            rep.saturating = std::move(r.saturating);
            break;
        }
        case SolveMethod::fem:
            run_fem();
            break;
        case SolveMethod::bounds:
            rep.bounds_only = true;
            break;
        case SolveMethod::automatic: {
            std::string why;
            try {
                auto r = exact::exact_constant(d);
                rep.estimate = r.estimate;
                rep.saturating = std::move(r.saturating);
            } catch (const NotApplicable& e) {
                why = e.what();
            } catch (const NumericalError& e) {
                why = e.what();
            }
            if (!rep.estimate) {
                try {
                    run_fem();
                } catch (const NumericalError& e) {
                    why = e.what();
                }
            }
            if (!rep.estimate) {
                if (!with_bounds) {
                    rep.bounds = collect_bounds(d);
                    for (const auto& b : rep.bounds) {
                        rep.lower = std::max(rep.lower, b.lower);
                        rep.upper = std::min(rep.upper, b.upper);
                    }
                }
                rep.bounds_only = true;
                rep.warning = "no solver produced a value (" + why + "); reporting bounds only";
            }
            break;
        }
    }
    return rep;
}

}  // namespace poincare
