#include "poincare/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "poincare/errors.hpp"
#include "poincare/quadrature.hpp"

namespace poincare::bounds {

std::string_view to_string(BoundMethod m) {
    switch (m) {
        case BoundMethod::muckenhoupt: return "muckenhoupt";
        case BoundMethod::transport_doubleexp: return "transport_doubleexp";
        case BoundMethod::transport_logistic: return "transport_logistic";
        case BoundMethod::symmetric_restriction: return "symmetric_restriction";
        case BoundMethod::bounded_perturbation: return "bounded_perturbation";
        case BoundMethod::bakry_emery: return "bakry_emery";
        case BoundMethod::variance: return "variance";
        case BoundMethod::chen: return "chen";
    }
    return "unknown";
}

Measure measure_of(const DistributionSpec& d) {
    Measure m;
    m.support = d.support();
    m.pdf = [d](double x) { return dist::pdf(d, x); };
    m.cdf = [d](double x) { return dist::cdf(d, x); };
    m.sf = [d](double x) { return dist::sf(d, x); };
    m.quantile = [d](double p) { return dist::quantile(d, p); };
    m.inverse_sf = [d](double q) { return dist::inverse_sf(d, q); };
    m.median = dist::median(d);
    m.kinks = d.kinks();
    return m;
}

namespace {

constexpr int kGrid = 2001;
constexpr double kEdge = 1e-15;  // closest approach to p = 0 or 1 during refinement

// Point of the support with lower-tail probability u; the upper half goes
// through the survival function so that the far right tail stays resolved.
double at_level(const Measure& m, double u) { return u <= 0.5 ? m.quantile(u) : m.inverse_sf(1.0 - u); }

struct Sup {
    double value = 0.0;
    double x = 0.0;
};

// Golden-section maximization of h on [lo, hi] (assumed unimodal there).
std::pair<double, double> golden_max(const std::function<double(double)>& h, double lo, double hi) {
    const double r = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = hi - r * (hi - lo), x2 = lo + r * (hi - lo);
    double f1 = h(x1), f2 = h(x2);
    for (int it = 0; it < 100 && hi - lo > 1e-15; ++it) {
        if (f1 < f2) {
            lo = x1;
            x1 = x2;
            f1 = f2;
            x2 = lo + r * (hi - lo);
            f2 = h(x2);
        } else {
            hi = x2;
            x2 = x1;
            f2 = f1;
            x1 = hi - r * (hi - lo);
            f1 = h(x1);
        }
    }
    return f1 >= f2 ? std::pair{x1, f1} : std::pair{x2, f2};
}

// sup over the support of g, with g given as a function of the level u.
// Evaluates the quantile grid u_k = (k + 1/2) / N, refines around the best
// node, and probes the tails when the best node is an extreme one.
Sup level_sup(const Measure& m, const std::function<double(double)>& g_of_level) {
    std::vector<double> vals(kGrid);
    std::size_t best = 0;
    for (std::size_t k = 0; k < vals.size(); ++k) {
        const double u = (static_cast<double>(k) + 0.5) / kGrid;
        vals[k] = g_of_level(u);
        if (!std::isfinite(vals[k]))
            throw DivergenceError("no Poincaré inequality detected: non-finite value at level " + std::to_string(u));
        if (vals[k] > vals[best]) best = k;
    }

    const bool lower_edge = best == 0;
    const bool upper_edge = best + 1 == vals.size();
    if (lower_edge || upper_edge) {
        // A supremum sitting at the edge of the grid must settle in the tail.
        const auto probe = [&](double tail) { return g_of_level(lower_edge ? tail : 1.0 - tail); };
        const double v6 = probe(1e-6), v9 = probe(1e-9), v12 = probe(1e-12);
        if (!std::isfinite(v12) || (v12 > 2.0 * v9 && v9 > 2.0 * v6 && v6 > 0.0))
            throw DivergenceError("no Poincaré inequality detected: tail supremum keeps growing");
    }

    const double lo = best == 0 ? kEdge : (static_cast<double>(best) - 0.5) / kGrid;
    const double hi = upper_edge ? 1.0 - kEdge : (static_cast<double>(best) + 1.5) / kGrid;
    auto [u, v] = golden_max(g_of_level, lo, hi);
    if (!(v >= vals[best])) {
        u = (static_cast<double>(best) + 0.5) / kGrid;
        v = vals[best];
    }
    if (!std::isfinite(v)) throw DivergenceError("no Poincaré inequality detected: non-finite refined supremum");
    return {v, at_level(m, u)};
}

// Signed integral of 1/rho from the median, tabulated on the grid so that each
// evaluation only integrates over one cell.
class InverseDensityIntegral {
public:
    explicit InverseDensityIntegral(const Measure& m) : m_(m) {
        for (int k = 0; k < kGrid; ++k) xs_.push_back(at_level(m, (k + 0.5) / kGrid));
        cum_.assign(xs_.size(), 0.0);
        const auto first_above = std::upper_bound(xs_.begin(), xs_.end(), m.median) - xs_.begin();
        for (auto k = first_above; k < static_cast<std::ptrdiff_t>(xs_.size()); ++k) {
            const double from = k == first_above ? m.median : xs_[k - 1];
            cum_[k] = (k == first_above ? 0.0 : cum_[k - 1]) + piece(from, xs_[k]);
        }
        for (auto k = first_above - 1; k >= 0; --k) {
            const double from = k == first_above - 1 ? m.median : xs_[k + 1];
            cum_[k] = (k == first_above - 1 ? 0.0 : cum_[k + 1]) - piece(xs_[k], from);
        }
    }

    // Integral of 1/rho from the median to x.
    double operator()(double x) const {
        if (x == m_.median) return 0.0;
        if (x > m_.median) {
            auto it = std::upper_bound(xs_.begin(), xs_.end(), x);
            // Largest grid node in (median, x].
            if (it != xs_.begin()) {
                const auto k = (it - xs_.begin()) - 1;
                if (xs_[k] > m_.median) return cum_[k] + piece(xs_[k], x);
            }
            return piece(m_.median, x);
        }
        auto it = std::lower_bound(xs_.begin(), xs_.end(), x);
        // Smallest grid node in [x, median).
        if (it != xs_.end() && *it < m_.median) {
            const auto k = it - xs_.begin();
            return cum_[k] - piece(x, xs_[k]);
        }
        return -piece(x, m_.median);
    }

private:
    double piece(double a, double b) const {
        if (!(b > a)) return 0.0;
        const auto r = quad::integrate([this](double t) { return 1.0 / m_.pdf(t); }, a, b, m_.kinks, 1e-10);
        if (!std::isfinite(r.value)) throw DivergenceError("integral of 1/rho diverges");
        return r.value;
    }

    const Measure& m_;
    std::vector<double> xs_;
    std::vector<double> cum_;
};

void require_open_support(const Measure& m) {
    if (!(m.support.lo < m.support.hi)) throw ArgumentError("bounds: empty support");
}

double transport_sup(const Measure& m, bool logistic) {
    require_open_support(m);
    const auto ratio = [&](double u) {
        const double x = at_level(m, u);
        const double F = m.cdf(x), S = m.sf(x);
        const double rho = m.pdf(x);
        if (!(rho > 0.0)) return kInf;
        return (logistic ? F * S : std::min(F, S)) / rho;
    };
    const double s = level_sup(m, ratio).value;
    return 4.0 * s * s;
}

}  // namespace

BoundReport muckenhoupt(const Measure& m) {
    require_open_support(m);
    InverseDensityIntegral inv(m);
    const auto a_plus = [&](double u) {
        if (u <= 0.5) return 0.0;
        const double x = at_level(m, u);
        return x > m.median ? m.sf(x) * inv(x) : 0.0;
    };
    const auto a_minus = [&](double u) {
        if (u >= 0.5) return 0.0;
        const double x = at_level(m, u);
        return x < m.median ? -m.cdf(x) * inv(x) : 0.0;
    };
    const Sup plus = level_sup(m, a_plus);
    const Sup minus = level_sup(m, a_minus);
    const double a = std::max(plus.value, minus.value);
    BoundReport r;
    r.method = BoundMethod::muckenhoupt;
    r.lower = 0.5 * a;
    r.upper = 4.0 * a;
    r.details = {{"A_minus", minus.value}, {"A_plus", plus.value}, {"x_minus", minus.x},
                 {"x_plus", plus.x},       {"median", m.median}};
    return r;
}

BoundReport muckenhoupt(const DistributionSpec& d) { return muckenhoupt(measure_of(d)); }

double transport_doubleexp_bound(const Measure& m) { return transport_sup(m, false); }
double transport_doubleexp_bound(const DistributionSpec& d) { return transport_sup(measure_of(d), false); }
double transport_logistic_bound(const Measure& m) { return transport_sup(m, true); }
double transport_logistic_bound(const DistributionSpec& d) { return transport_sup(measure_of(d), true); }

double symmetric_restriction_bound(const DistributionSpec& parent, Interval I, double parent_CP) {
    if (!(parent_CP > 0.0)) throw ArgumentError("symmetric_restriction_bound: parent constant must be positive");
    const DistributionSpec nu = parent.truncated(I);
    const double mode = parent.location();
    const double left_parent = dist::cdf(parent, mode);
    const double left_nu = dist::cdf(nu, mode);
    if (std::fabs(left_parent - left_nu) > 1e-10)
        throw PreconditionError("symmetric_restriction_bound: restriction changes the mass left of the mode (" +
                                std::to_string(left_parent) + " vs " + std::to_string(left_nu) + ")");
    const double mass = nu.mass() / parent.mass();
    return mass * mass * parent_CP;
}

double gaussian_symmetric_uniform_bound(double b) {
    if (!(b > 0.0)) throw ArgumentError("gaussian_symmetric_uniform_bound: b must be positive");
    return 4.0 * b * b / (std::numbers::pi * std::numbers::pi);
}

double bounded_perturbation_bound(double base_CP, double osc) {
    if (!(osc >= 0.0)) throw ArgumentError("bounded_perturbation_bound: oscillation must be nonnegative");
    return std::exp(osc) * base_CP;
}

double bakry_emery_bound(const DistributionSpec& d) {
    if (!d.kinks().empty()) throw NotApplicable("bakry_emery: V'' is undefined at an interior kink");
    const Interval s = d.support();
    std::vector<double> xs;
    xs.reserve(kGrid + 2);
    for (int k = 0; k < kGrid; ++k) xs.push_back(dist::quantile(d, (k + 0.5) / kGrid));
    xs.push_back(std::isinf(s.lo) ? d.location() - 1e6 * d.scale() : std::nextafter(s.lo, s.hi));
    xs.push_back(std::isinf(s.hi) ? d.location() + 1e6 * d.scale() : std::nextafter(s.hi, s.lo));

    double inf_v2 = kInf;
    for (double x : xs) {
        const auto v = dist::potential(d, x);
        if (!v.second) throw NotApplicable("bakry_emery: V'' is undefined at x = " + std::to_string(x));
        inf_v2 = std::min(inf_v2, *v.second);
    }
    if (!(inf_v2 > 0.0)) throw NotApplicable("bakry_emery: potential is not uniformly convex");
    return 1.0 / inf_v2;
}

double variance_lower_bound(const DistributionSpec& d) { return dist::interval_moments(d).variance; }

double chen_lower_gap(const DistributionSpec& d, std::span<const double> x, std::span<const double> g_prime) {
    if (x.size() != g_prime.size() || x.size() < 3)
        throw ArgumentError("chen_lower_gap: need matching grids with at least three points");
    for (double w : g_prime)
        if (!(w > 0.0)) throw PreconditionError("chen_lower_gap: g' must be positive on the grid");

    double best = kInf;
    for (std::size_t i = 1; i + 1 < x.size(); ++i) {
        const double h = 0.5 * (x[i + 1] - x[i - 1]);
        const auto v = dist::potential(d, x[i]);
        if (!v.second) continue;  // kink: V'' carries a positive point mass there
        const double w = g_prime[i];
        const double w1 = (g_prime[i + 1] - g_prime[i - 1]) / (2.0 * h);
        const double w2 = (g_prime[i + 1] - 2.0 * w + g_prime[i - 1]) / (h * h);
        best = std::min(best, *v.second + (v.first * w1 - w2) / w);
    }
    return best;
}

}  // namespace poincare::bounds
