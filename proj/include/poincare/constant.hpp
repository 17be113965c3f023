#pragma once

#include <optional>
#include <string>
#include <vector>

#include "poincare/bounds.hpp"
#include "poincare/dist.hpp"
#include "poincare/estimate.hpp"

namespace poincare {

enum class SolveMethod { automatic, exact, fem, bounds };

SolveMethod solve_method_from_string(const std::string& name);  // ArgumentError on unknown names

/// What `constant` reports: an estimate when one is available, the
/// applicable bounds, and a warning when the value is only a bound.
struct ConstantReport {
    std::optional<PoincareEstimate> estimate;
    std::optional<SaturatingFunction> saturating;
    std::vector<bounds::BoundReport> bounds;
    std::string warning;
    bool bounds_only = false;
    // Best two-sided bracket from `bounds`.
    double lower = 0.0;
    double upper = kInf;
};

/// Every bound applicable to d; inapplicable ones are skipped silently.
std::vector<bounds::BoundReport> collect_bounds(const DistributionSpec& d);

/// `automatic` tries the semi-analytical solver, then FEM (bounded support)
/// or the exhaustion limit, and finally reports bounds only with a warning.
ConstantReport compute_constant(const DistributionSpec& d, SolveMethod method, double tol = 1e-6,
                                bool with_bounds = true);

}  // namespace poincare
