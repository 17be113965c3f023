#pragma once

#include <utility>

#include "poincare/dist.hpp"
#include "poincare/estimate.hpp"

namespace poincare::exact {

/// Uniform law on [a, b]: (b - a)^2 / pi^2, saturated by a shifted sine.
ConstantResult uniform_constant(double a, double b);

/// Density proportional to exp(-|x|) on [a, b]. Either end may be infinite;
/// any infinite side gives 4 (not attained, so no saturating function).
ConstantResult truncated_doubleexp_constant(double a, double b);

/// Standard triangular 1 - |x| on [-1, 1]: 1 / r1^2 with r1 the first zero of J0.
ConstantResult triangular_constant();

/// Standard normal truncated to a bounded [a, b], from the first zero of the
/// Kummer determinant. Cross-checked against FEM before returning
/// (CrossValidationError beyond 1e-4 relative disagreement).
ConstantResult truncated_normal_constant(double a, double b);

/// Interval between the i-th and (i+1)-th zeros of He_n (1-based, 1 <= i <= n-1)
/// and its constant 1 / (n + 1), saturated by He_{n+1}.
std::pair<Interval, ConstantResult> hermite_interval_constant(int n, int i);

/// Dispatcher: standardize, pick the family formula, rescale.
/// NotApplicable when no semi-analytical result covers d.
ConstantResult exact_constant(const DistributionSpec& d);

}  // namespace poincare::exact
