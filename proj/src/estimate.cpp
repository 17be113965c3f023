#include "poincare/estimate.hpp"

#include <algorithm>
#include <cmath>

#include "poincare/errors.hpp"
#include "poincare/quadrature.hpp"

namespace poincare {

std::string_view to_string(Method m) {
    switch (m) {
        case Method::closed_form: return "closed_form";
        case Method::first_zero: return "first_zero";
        case Method::fem: return "fem";
        case Method::limit: return "limit";
    }
    return "unknown";
}

PoincareEstimate PoincareEstimate::from_value(double value, Method method, double error_estimate) {
    if (!(value > 0.0) || !std::isfinite(value)) throw NumericalError("Poincaré constant must be finite and positive");
    return {value, method, std::max(0.0, error_estimate), 1.0 / value};
}

PoincareEstimate PoincareEstimate::from_gap(double gap, Method method, double error_estimate) {
    if (!(gap > 0.0) || !std::isfinite(gap)) throw NumericalError("spectral gap must be finite and positive");
    return {1.0 / gap, method, std::max(0.0, error_estimate), gap};
}

SaturatingFunction SaturatingFunction::sampled(std::vector<double> grid, std::vector<double> values,
                                               double rayleigh) {
    SaturatingFunction f;
    f.kind = Kind::sampled;
    f.grid = std::move(grid);
    f.values = std::move(values);
    f.rayleigh = rayleigh;
    // The closures share the sample storage with the returned object through
    // copies, so the function stays valid after the SaturatingFunction moves.
    auto locate = [g = f.grid](double x) {
        auto it = std::upper_bound(g.begin(), g.end(), x);
        std::size_t i = it == g.begin() ? 0 : static_cast<std::size_t>(it - g.begin()) - 1;
        return std::min(i, g.size() - 2);
    };
    f.value = [g = f.grid, v = f.values, locate](double x) {
        const std::size_t i = locate(x);
        const double t = std::clamp((x - g[i]) / (g[i + 1] - g[i]), 0.0, 1.0);
        return v[i] + t * (v[i + 1] - v[i]);
    };
    f.derivative = [g = f.grid, v = f.values, locate](double x) {
        const std::size_t i = locate(x);
        return (v[i + 1] - v[i]) / (g[i + 1] - g[i]);
    };
    return f;
}

double expectation(const DistributionSpec& d, const std::function<double(double)>& f) {
    const Interval s = d.support();
    const auto kinks = d.kinks();
    return quad::integrate([&](double x) { return f(x) * dist::pdf(d, x); }, s.lo, s.hi, kinks, 1e-11).value;
}

double rayleigh_quotient(const DistributionSpec& d, const std::function<double(double)>& f,
                         const std::function<double(double)>& fprime) {
    const Interval s = d.support();
    const auto kinks = d.kinks();
    const double mean = expectation(d, f);
    const double num =
        quad::integrate([&](double x) { return fprime(x) * fprime(x) * dist::pdf(d, x); }, s.lo, s.hi, kinks, 1e-11)
            .value;
    const double den = quad::integrate(
                           [&](double x) {
                               const double c = f(x) - mean;
                               return c * c * dist::pdf(d, x);
                           },
                           s.lo, s.hi, kinks, 1e-11)
                           .value;
    if (!(den > 0.0)) throw NumericalError("rayleigh_quotient: function has zero variance");
    return num / den;
}

}  // namespace poincare
