#pragma once

#include <string>
#include <vector>

#include "poincare/dist.hpp"

namespace poincare::golden {

struct Check {
    std::string name;
    double expected = 0.0;
    double computed = 0.0;
    double tol = 0.0;
    bool pass = false;
    std::string error;  // set when the computation threw
};

/// Constants and bounds of the standardized flood-model laws: the standard
/// triangular, N(0,1) on [-1.875, inf) and Gumbel(0,1) on [-0.919, 3.561].
struct LawSummary {
    std::string label;
    DistributionSpec law;
    double transport_doubleexp = 0.0;
    double transport_logistic = 0.0;
    double constant = 0.0;
    double variance = 0.0;
};
std::vector<LawSummary> flood_law_summaries();

/// Published reference values for the river-model study: the DGSM of the
/// five active inputs and the output variance.
struct RiverFixture {
    std::string name;
    DistributionSpec law;
    double nu;
    double expected_bound;
};
std::vector<RiverFixture> river_fixture();
inline constexpr double kRiverVariance = 0.369;

/// Closed-form constants, flood-law constants and bounds, and the river-study
/// constants and DGSM bounds against their reference values.
std::vector<Check> run_golden_suite();

}  // namespace poincare::golden
