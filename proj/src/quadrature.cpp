#include "poincare/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <queue>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "poincare/errors.hpp"

namespace poincare::quad {

namespace {

using GK = boost::math::quadrature::gauss_kronrod<double, 61>;

constexpr std::size_t kMaxIntervals = 4000;
constexpr double kInfinity = std::numeric_limits<double>::infinity();

struct Panel {
    double a, b, value, error, l1;
    bool operator<(const Panel& o) const { return error < o.error; }
};

// One non-adaptive Kronrod panel. Boost reports the error of the rule on the
// reference interval [-1, 1], so it is rescaled to [a, b] here.
Panel panel(const std::function<double(double)>& g, double a, double b) {
    double err = 0.0, l1 = 0.0;
    const double v = GK::integrate(g, a, b, 0, 0.0, &err, &l1);
    return {a, b, v, err * 0.5 * (b - a), l1};
}

// Globally adaptive bisection on a finite [a, b].
Result adapt(const std::function<double(double)>& g, double a, double b, double rel_tol, double abs_tol) {
    std::priority_queue<Panel> heap;
    heap.push(panel(g, a, b));
    double value = heap.top().value, error = heap.top().error, l1 = heap.top().l1;
    const auto target = [&] { return std::max(abs_tol, rel_tol * l1); };
    while (error > target() && heap.size() < kMaxIntervals) {
        const Panel worst = heap.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) break;  // cannot split further
        heap.pop();
        const Panel left = panel(g, worst.a, mid), right = panel(g, mid, worst.b);
        value += left.value + right.value - worst.value;
        error += left.error + right.error - worst.error;
        l1 += left.l1 + right.l1 - worst.l1;
        heap.push(left);
        heap.push(right);
    }
    // Re-sum to shed the drift of the running updates.
    value = error = l1 = 0.0;
    for (; !heap.empty(); heap.pop()) {
        value += heap.top().value;
        error += heap.top().error;
        l1 += heap.top().l1;
    }
    if (!std::isfinite(value)) throw NumericalError("quadrature produced a non-finite value");
    if (error > std::max(abs_tol, 100.0 * rel_tol * l1) && error > 1e-13 * std::max(1.0, l1)) {
        char msg[160];
        std::snprintf(msg, sizeof msg, "quadrature did not converge on [%.6g, %.6g], error estimate %.3g (|f| integral %.3g)",
                      a, b, error, l1);
        throw NumericalError(msg);
    }
    return {value, error};
}

// Finite pieces integrate directly; infinite ends are mapped onto [0, 1)
// by x = c +- t / (1 - t).
Result integrate_piece(const std::function<double(double)>& f, double a, double b, double rel_tol,
                       double abs_tol) {
    if (std::isfinite(a) && std::isfinite(b)) return adapt(f, a, b, rel_tol, abs_tol);
    if (std::isfinite(a)) {
        const auto g = [&](double t) {
            const double s = 1.0 - t;
            return f(a + t / s) / (s * s);
        };
        return adapt(g, 0.0, 1.0, rel_tol, abs_tol);
    }
    if (std::isfinite(b)) {
        const auto g = [&](double t) {
            const double s = 1.0 - t;
            return f(b - t / s) / (s * s);
        };
        return adapt(g, 0.0, 1.0, rel_tol, abs_tol);
    }
    const Result left = integrate_piece(f, -kInfinity, 0.0, rel_tol, abs_tol);
    const Result right = integrate_piece(f, 0.0, kInfinity, rel_tol, abs_tol);
    return {left.value + right.value, left.error + right.error};
}

}  // namespace

Result integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breaks, double rel_tol, double abs_tol) {
    if (!(a < b)) return {};
    std::vector<double> cuts{a};
    for (double c : breaks)
        if (c > a && c < b) cuts.push_back(c);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    Result total;
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        const Result r = integrate_piece(f, cuts[i], cuts[i + 1], rel_tol, abs_tol);
        total.value += r.value;
        total.error += r.error;
    }
    return total;
}

}  // namespace poincare::quad
