#include "poincare/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "poincare/errors.hpp"
#include "poincare/fem.hpp"
#include "poincare/specfun.hpp"

namespace poincare::exact {

namespace {

using Fn = std::function<double(double)>;
using dist::Family;

constexpr double kPi = std::numbers::pi;

void check_interval(double a, double b) {
    if (!(a < b)) throw ArgumentError("interval requires a < b");
    if (std::isfinite(a) && std::isfinite(b) && b - a < 1e-8 * std::max(1.0, std::fabs(a)))
        throw ArgumentError("interval too narrow for a reliable constant");
}

// Wraps (f, f') into a saturating function on [a, b]: flips the sign so that f
// increases, scales to max |f| = 1, and records the quadrature Rayleigh ratio
// under the law `law`.
SaturatingFunction make_saturating(const DistributionSpec& law, Fn f, Fn fp) {
    const Interval s = law.support();
    double sign = 1.0, amp = 1.0;
    if (s.bounded()) {
        const double fa = f(s.lo), fb = f(s.hi);
        sign = fb >= fa ? 1.0 : -1.0;
        amp = std::max(std::fabs(fa), std::fabs(fb));
        if (!(amp > 0.0) || !std::isfinite(amp)) throw NumericalError("saturating function has no finite amplitude");
    }
    const double k = sign / amp;
    SaturatingFunction out;
    out.kind = SaturatingFunction::Kind::closed_form;
    out.value = [f, k](double x) { return k * f(x); };
    out.derivative = [fp, k](double x) { return k * fp(x); };
    out.rayleigh = rayleigh_quotient(law, out.value, out.derivative);
    return out;
}

DistributionSpec standard_law(Family family, double a, double b) {
    return DistributionSpec(family, 0.0, 1.0, Interval{a, b});
}

// Nonnegative interval [a, b]: closed form with omega = pi / (b - a).
std::pair<Fn, Fn> doubleexp_same_sign(double a, double b) {
    const double w = kPi / (b - a);
    const double c = 0.25 + w * w;
    Fn f = [a, w](double x) {
        const double t = w * (x - a);
        return std::exp(0.5 * (x - a)) * (-w * std::cos(t) + 0.5 * std::sin(t));
    };
    Fn fp = [a, w, c](double x) { return std::exp(0.5 * (x - a)) * c * std::sin(w * (x - a)); };
    return {f, fp};
}

}  // namespace

ConstantResult uniform_constant(double a, double b) {
    check_interval(a, b);
    if (!std::isfinite(a) || !std::isfinite(b)) throw ArgumentError("uniform_constant needs a bounded interval");
    const double width = b - a;
    const double mid = 0.5 * (a + b);
    const double w = kPi / width;
    ConstantResult out;
    out.estimate = PoincareEstimate::from_value(width * width / (kPi * kPi), Method::closed_form);
    out.saturating = make_saturating(
        DistributionSpec::uniform_on(a, b), [w, mid](double x) { return std::sin(w * (x - mid)); },
        [w, mid](double x) { return w * std::cos(w * (x - mid)); });
    return out;
}

ConstantResult truncated_doubleexp_constant(double a, double b) {
    check_interval(a, b);
    ConstantResult out;
    if (std::isinf(a) || std::isinf(b)) {
        // Restricting to a half-line or the whole line leaves the value 4.
        out.estimate = PoincareEstimate::from_value(4.0, Method::closed_form);
        return out;
    }
    const DistributionSpec law = standard_law(Family::double_exponential, a, b);

    if (a >= 0.0 || b <= 0.0) {
        const double w = kPi / (b - a);
        out.estimate = PoincareEstimate::from_value(1.0 / (0.25 + w * w), Method::closed_form);
        if (a >= 0.0) {
            auto [f, fp] = doubleexp_same_sign(a, b);
            out.saturating = make_saturating(law, f, fp);
        } else {
            auto [g, gp] = doubleexp_same_sign(-b, -a);
            out.saturating =
                make_saturating(law, [g](double x) { return -g(-x); }, [gp](double x) { return gp(-x); });
        }
        return out;
    }

    const double la = -a, lb = b;
    const double top = std::min(kPi / la, kPi / lb);
    const auto secular = [la, lb](double x) { return 1.0 / std::tan(la * x) + 1.0 / std::tan(lb * x) + 1.0 / x; };
    const double w = specfun::first_zero(secular, top * 1e-9, top * (1.0 - 1e-12), top / 2000.0);
    out.estimate = PoincareEstimate::from_value(1.0 / (0.25 + w * w), Method::first_zero, 1e-12 / (0.25 + w * w));

    // Coefficients scaled by sin(w a) so they stay O(1) as a -> 0-.
    const double ca = std::cos(w * a), sa = std::sin(w * a);
    const double A = w * ca - 0.5 * sa;
    const double B = 0.5 * ca + w * sa;
    const double Bp = B - A / w;  // coefficient of sin on the positive side
    const double gap = 0.25 + w * w;
    Fn f = [=](double x) {
        const double coef = x > 0.0 ? Bp : B;
        return std::exp(0.5 * std::fabs(x)) * (A * std::cos(w * x) + coef * std::sin(w * x));
    };
    Fn fp = [=](double x) {
        if (x > 0.0) {
            const double c = std::cos(w * x), s = std::sin(w * x);
            return std::exp(0.5 * x) * ((0.5 * A + Bp * w) * c + (0.5 * Bp - A * w) * s);
        }
        return gap * std::exp(-0.5 * x) * std::sin(w * (a - x));
    };
    out.saturating = make_saturating(law, f, fp);
    return out;
}

ConstantResult triangular_constant() {
    const double r1 = specfun::bessel_j0_first_zero();
    ConstantResult out;
    out.estimate = PoincareEstimate::from_value(1.0 / (r1 * r1), Method::closed_form);
    out.saturating = make_saturating(
        DistributionSpec(Family::triangular),
        [r1](double x) {
            const double v = specfun::bessel_j0(r1 * (1.0 - std::fabs(x)));
            return x < 0.0 ? -v : v;
        },
        [r1](double x) { return r1 * specfun::bessel_j1(r1 * (1.0 - std::fabs(x))); });
    return out;
}

namespace {

struct KummerPair {
    double h0, h0_dt, h1, h1_dt;  // values and t-derivatives
};

KummerPair kummer_pair(double lambda, double t) {
    const double z = 0.5 * t * t;
    const auto m0 = specfun::kummer_m_with_derivative(0.5 * (1.0 - lambda), 0.5, z);
    const auto m1 = specfun::kummer_m_with_derivative(0.5 * (2.0 - lambda), 1.5, z);
    return {m0.value, t * m0.dz, m1.value, t * m1.dz};
}

double h0(double lambda, double t) { return specfun::kummer_m(0.5 * (1.0 - lambda), 0.5, 0.5 * t * t); }
double h1(double lambda, double t) { return specfun::kummer_m(0.5 * (2.0 - lambda), 1.5, 0.5 * t * t); }

}  // namespace

ConstantResult truncated_normal_constant(double a, double b) {
    check_interval(a, b);
    if (!std::isfinite(a) || !std::isfinite(b))
        throw ArgumentError("truncated_normal_constant needs a bounded interval; use unbounded_limit");
    const DistributionSpec law = standard_law(Family::normal, a, b);

    // Dirichlet problem for h = u' : h'' - t h' + (lambda - 1) h = 0, h(a) = h(b) = 0,
    // with even solution h0 and odd solution t h1.
    std::function<double(double)> det;
    if (a == -b)
        det = [b](double lam) { return h0(lam, b); };
    else if (a == 0.0)
        det = [b](double lam) { return h1(lam, b); };
    else if (b == 0.0)
        det = [a](double lam) { return h1(lam, a); };
    else
        det = [a, b](double lam) { return b * h0(lam, a) * h1(lam, b) - a * h0(lam, b) * h1(lam, a); };

    const double var = dist::interval_moments(law).variance;
    const double step = 0.01 * std::max(1.0, (1.0 / var) / 100.0);
    const double lambda = specfun::first_zero(det, 1e-6, 10.0 / var, step);

    const auto fem = fem::poincare_fem(law, fem::FemOptions{1e-7});
    const double disagreement = std::fabs(fem.estimate.spectral_gap - lambda) / lambda;
    if (disagreement > 1e-4)
        throw CrossValidationError("truncated_normal_constant: Kummer root " + std::to_string(lambda) +
                                   " disagrees with FEM gap " + std::to_string(fem.estimate.spectral_gap));

    ConstantResult out;
    out.estimate = PoincareEstimate::from_gap(lambda, Method::first_zero, 1e-12 / lambda);

    // Boundary row with the larger coefficients is the better-conditioned one.
    double c0 = b * h1(lambda, b), c1 = -h0(lambda, b);
    const double r0 = a * h1(lambda, a), r1 = -h0(lambda, a);
    if (std::hypot(r0, r1) > std::hypot(c0, c1)) {
        c0 = r0;
        c1 = r1;
    }
    Fn fp = [=](double t) {
        const auto k = kummer_pair(lambda, t);
        return c0 * k.h0 + c1 * t * k.h1;
    };
    Fn f = [=](double t) {
        const auto k = kummer_pair(lambda, t);
        const double h = c0 * k.h0 + c1 * t * k.h1;
        const double dh = c0 * k.h0_dt + c1 * (k.h1 + t * k.h1_dt);
        return (t * h - dh) / lambda;
    };
    out.saturating = make_saturating(law, f, fp);
    return out;
}

std::pair<Interval, ConstantResult> hermite_interval_constant(int n, int i) {
    if (n < 2 || n > 100) throw ArgumentError("hermite_interval_constant: n must be in [2, 100]");
    if (i < 1 || i > n - 1) throw ArgumentError("hermite_interval_constant: i must be in [1, n-1]");
    const auto zeros = specfun::hermite_zeros(n);
    const Interval iv{zeros[static_cast<std::size_t>(i - 1)], zeros[static_cast<std::size_t>(i)]};
    ConstantResult out;
    out.estimate = PoincareEstimate::from_value(1.0 / (n + 1.0), Method::closed_form);
    out.saturating = make_saturating(
        standard_law(Family::normal, iv.lo, iv.hi), [n](double x) { return specfun::hermite_eval(n + 1, x); },
        [n](double x) { return (n + 1.0) * specfun::hermite_eval(n, x); });
    return {iv, out};
}

namespace {

ConstantResult standard_constant(const DistributionSpec& z) {
    const Interval s = z.support();
    switch (z.family()) {
        case Family::uniform:
            return uniform_constant(s.lo, s.hi);
        case Family::double_exponential:
        case Family::exponential:  // same density shape on [0, inf)
            return truncated_doubleexp_constant(s.lo, s.hi);
        case Family::triangular:
            if (s.lo == -1.0 && s.hi == 1.0) return triangular_constant();
            throw NotApplicable("exact: truncated triangular has no semi-analytical solver here");
        case Family::normal:
            if (!z.truncation() || (std::isinf(s.lo) && std::isinf(s.hi))) {
                ConstantResult out;
                out.estimate = PoincareEstimate::from_value(1.0, Method::closed_form);
                out.saturating =
                    make_saturating(z, [](double x) { return x; }, [](double) { return 1.0; });
                return out;
            }
            if (!s.bounded()) throw NotApplicable("exact: half-line normal is handled by unbounded_limit");
            return truncated_normal_constant(s.lo, s.hi);
        case Family::logistic:
            if (std::isinf(s.lo) && std::isinf(s.hi)) {
                ConstantResult out;
                out.estimate = PoincareEstimate::from_value(4.0, Method::closed_form);
                return out;
            }
            throw NotApplicable("exact: truncated logistic has no semi-analytical solver");
        case Family::gumbel:
            break;
    }
    throw NotApplicable("exact: no semi-analytical solver for family " + std::string(dist::to_string(z.family())));
}

}  // namespace

ConstantResult exact_constant(const DistributionSpec& d) {
    const auto [z, factor] = dist::standardize(d);
    ConstantResult r = standard_constant(z);
    if (factor == 1.0 && d.location() == 0.0) return r;

    ConstantResult out;
    out.estimate = PoincareEstimate::from_value(r.estimate.value * factor, r.estimate.method,
                                                r.estimate.error_estimate * factor);
    if (r.saturating) {
        const double loc = d.location(), scale = d.scale();
        SaturatingFunction s;
        s.kind = r.saturating->kind;
        s.value = [g = r.saturating->value, loc, scale](double x) { return g((x - loc) / scale); };
        s.derivative = [g = r.saturating->derivative, loc, scale](double x) { return g((x - loc) / scale) / scale; };
        s.rayleigh = r.saturating->rayleigh / factor;
        out.saturating = std::move(s);
    }
    return out;
}

}  // namespace poincare::exact
