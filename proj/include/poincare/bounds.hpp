#pragma once

#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "poincare/dist.hpp"

namespace poincare::bounds {

enum class BoundMethod {
    muckenhoupt,
    transport_doubleexp,
    transport_logistic,
    symmetric_restriction,
    bounded_perturbation,
    bakry_emery,
    variance,
    chen,
};

std::string_view to_string(BoundMethod m);

/// Two-sided report; a side the method says nothing about is 0 (lower) or +inf (upper).
struct BoundReport {
    double lower = 0.0;
    double upper = kInf;
    BoundMethod method = BoundMethod::muckenhoupt;
    std::map<std::string, double> details;
};

/// The pieces of a law the bound computations need. Built from a
/// DistributionSpec by `measure_of`, or by hand for laws outside the catalog.
struct Measure {
    Interval support;
    std::function<double(double)> pdf;
    std::function<double(double)> cdf;
    std::function<double(double)> sf;
    std::function<double(double)> quantile;    // on (0, 1)
    std::function<double(double)> inverse_sf;  // on (0, 1)
    double median = 0.0;
    std::vector<double> kinks;
};

Measure measure_of(const DistributionSpec& d);

/// 1/2 max(A-, A+) <= C_P <= 4 max(A-, A+).
/// DivergenceError when the tail integral of 1/rho blows up.
BoundReport muckenhoupt(const Measure& m);
BoundReport muckenhoupt(const DistributionSpec& d);

/// 4 (sup min(F, 1 - F) / rho)^2.
double transport_doubleexp_bound(const Measure& m);
double transport_doubleexp_bound(const DistributionSpec& d);

/// 4 (sup F (1 - F) / rho)^2.
double transport_logistic_bound(const Measure& m);
double transport_logistic_bound(const DistributionSpec& d);

/// mu(I)^2 * parent_CP for the restriction of a unimodal parent to I.
/// PreconditionError unless parent and restriction give the same mass to the
/// left of the mode (to 1e-10).
double symmetric_restriction_bound(const DistributionSpec& parent, Interval I, double parent_CP);

/// 4 b^2 / pi^2 for N(0,1) restricted to [-b, b].
double gaussian_symmetric_uniform_bound(double b);

/// e^osc * base_CP.
double bounded_perturbation_bound(double base_CP, double osc);

/// 1 / inf V''. NotApplicable if V'' is undefined somewhere or inf V'' <= 0.
double bakry_emery_bound(const DistributionSpec& d);

/// Variance of the law (a lower bound on C_P).
double variance_lower_bound(const DistributionSpec& d);

/// Lower bound on the spectral gap: grid infimum of (-L g)' / g', which for
/// w = g' equals V'' + (V' w' - w'') / w. `g_prime` holds w at the uniformly
/// spaced points `x`; derivatives of w use central differences, so the two end
/// points only serve as stencil neighbours. PreconditionError if w <= 0 anywhere.
double chen_lower_gap(const DistributionSpec& d, std::span<const double> x, std::span<const double> g_prime);

}  // namespace poincare::bounds
