#pragma once

#include <array>
#include <functional>
#include <span>

namespace poincare::quad {

struct Result {
    double value = 0.0;
    double error = 0.0;
};

/// Adaptive Gauss–Kronrod (61 points) on [a, b]; either end may be infinite.
/// The range is split at every break point strictly inside (a, b) so that
/// integrands with kinks are integrated piecewise smooth.
/// Throws NumericalError when the error estimate stays above tolerance.
Result integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breaks = {}, double rel_tol = 1e-12,
                 double abs_tol = 1e-15);

/// Five-point Gauss–Legendre rule on [-1, 1].
inline constexpr std::array<double, 5> gl5_nodes = {
    -0.906179845938663992797626878299392965125651910,
    -0.538469310105683091036314420700208804967286606,
    0.0,
    0.538469310105683091036314420700208804967286606,
    0.906179845938663992797626878299392965125651910,
};
inline constexpr std::array<double, 5> gl5_weights = {
    0.236926885056189087514264040719917362643260002,
    0.478628670499366468041291514835638192912295553,
    0.568888888888888888888888888888888888888888889,
    0.478628670499366468041291514835638192912295553,
    0.236926885056189087514264040719917362643260002,
};

/// Fixed 5-point Gauss–Legendre on a finite [a, b].
template <class F>
double gauss5(F&& f, double a, double b) {
    const double half = 0.5 * (b - a);
    const double mid = 0.5 * (a + b);
    double s = 0.0;
    for (std::size_t k = 0; k < gl5_nodes.size(); ++k) s += gl5_weights[k] * f(mid + half * gl5_nodes[k]);
    return s * half;
}

}  // namespace poincare::quad
