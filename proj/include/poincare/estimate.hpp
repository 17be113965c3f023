#pragma once

#include <functional>
#include <optional>
#include <string_view>
#include <vector>

#include "poincare/dist.hpp"

namespace poincare {

enum class Method { closed_form, first_zero, fem, limit };

std::string_view to_string(Method m);

/// A Poincaré constant C_P together with the Neumann spectral gap 1 / C_P.
/// `error_estimate` is absolute, in the units of `value`.
struct PoincareEstimate {
    double value = 0.0;
    Method method = Method::closed_form;
    double error_estimate = 0.0;
    double spectral_gap = 0.0;

    static PoincareEstimate from_value(double value, Method method, double error_estimate = 0.0);
    static PoincareEstimate from_gap(double gap, Method method, double error_estimate = 0.0);
};

/// Centered function attaining equality in the Poincaré inequality (the first
/// non-trivial Neumann eigenfunction), normalized to be increasing with
/// max |f| = 1 on the support.
struct SaturatingFunction {
    enum class Kind { closed_form, sampled };

    Kind kind = Kind::closed_form;
    std::function<double(double)> value;
    std::function<double(double)> derivative;
    std::vector<double> grid;    // sampled only
    std::vector<double> values;  // sampled only
    double rayleigh = 0.0;       // ||f'||^2 / ||f||^2 under the law

    double operator()(double x) const { return value(x); }

    /// Piecewise-linear interpolant through (grid, values).
    static SaturatingFunction sampled(std::vector<double> grid, std::vector<double> values, double rayleigh);
};

struct ConstantResult {
    PoincareEstimate estimate;
    std::optional<SaturatingFunction> saturating;
};

/// Quadrature Rayleigh ratio ||f'||^2 / Var(f) under d.
double rayleigh_quotient(const DistributionSpec& d, const std::function<double(double)>& f,
                         const std::function<double(double)>& fprime);

/// Mean of f under d, by quadrature.
double expectation(const DistributionSpec& d, const std::function<double(double)>& f);

}  // namespace poincare
