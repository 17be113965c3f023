#include "poincare/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "poincare/errors.hpp"

namespace poincare::specfun {

namespace {

constexpr int kMaxKummerTerms = 10000;
// Largest tolerated ratio between the biggest series term and the result.
// Long double carries ~19 digits; beyond this ratio fewer than 8 survive.
constexpr long double kMaxCancellation = 1e11L;

bool nonpositive_integer(double v) { return v <= 0.0 && v == std::floor(v); }

}  // namespace

double kummer_m(double a1, double b1, double z) {
    if (nonpositive_integer(b1)) throw ArgumentError("kummer_m: b1 must not be a nonpositive integer");
    if (!(z >= 0.0)) throw ArgumentError("kummer_m: z must be nonnegative");
    if (z == 0.0) return 1.0;

    long double term = 1.0L;
    long double sum = 1.0L;
    long double max_term = 1.0L;
    bool converged = false;
    for (int p = 0; p < kMaxKummerTerms && !converged; ++p) {
        term *= (static_cast<long double>(p) + a1) * z / ((static_cast<long double>(p) + b1) * (p + 1.0L));
        sum += term;
        max_term = std::max(max_term, std::fabs(term));
        if (term == 0.0L) {  // terminating (polynomial) case
            converged = true;
            break;
        }
        // Terms only decrease monotonically once p + 1 + a1 > 0 and the ratio is below one.
        const long double next_ratio = std::fabs((p + 1.0L + a1) * z / ((p + 1.0L + b1) * (p + 2.0L)));
        converged = p + 1.0L + a1 > 0.0L && next_ratio < 1.0L &&
                    std::fabs(term) <= 1e-18L * std::max(std::fabs(sum), 1e-300L);
    }
    if (!converged) throw NumericalError("kummer_m: series did not converge in 10^4 terms");
    if (max_term > kMaxCancellation * std::max(std::fabs(sum), 1.0L))
        throw NumericalError("kummer_m: catastrophic cancellation for a1=" + std::to_string(a1) +
                             ", z=" + std::to_string(z));
    return static_cast<double>(sum);
}

KummerValue kummer_m_with_derivative(double a1, double b1, double z) {
    const double v = kummer_m(a1, b1, z);
    const double dz = a1 == 0.0 ? 0.0 : (a1 / b1) * kummer_m(a1 + 1.0, b1 + 1.0, z);
    return {v, dz};
}

namespace {

// Ascending series sum_k (-1)^k (x/2)^(2k + order) / (k! (k + order)!) with
// Kahan-compensated accumulation.
double bessel_series(double x, int order) {
    if (std::fabs(x) > 12.0) throw ArgumentError("bessel series is limited to |x| <= 12");
    const long double h = 0.5L * x;
    const long double h2 = h * h;
    long double term = order == 0 ? 1.0L : h;
    long double sum = term;
    long double comp = 0.0L;
    for (int k = 1; k < 200; ++k) {
        term *= -h2 / (static_cast<long double>(k) * (k + order));
        const long double y = term - comp;
        const long double t = sum + y;
        comp = (t - sum) - y;
        sum = t;
        if (std::fabs(term) < 1e-22L) break;
    }
    return static_cast<double>(sum);
}

}  // namespace

double bessel_j0(double x) { return bessel_series(x, 0); }

double bessel_j1(double x) { return bessel_series(x, 1); }

double bessel_j0_first_zero() {
    static const double r1 = brent([](double x) { return bessel_j0(x); },
                                   RootBracket{2.0, 3.0, bessel_j0(2.0), bessel_j0(3.0)}, 1e-16);
    return r1;
}

double hermite_eval(int n, double x) {
    if (n < 0 || n > 100) throw ArgumentError("hermite_eval: degree must be in [0, 100]");
    if (n == 0) return 1.0;
    double prev = 1.0;
    double cur = x;
    for (int k = 1; k < n; ++k) {
        const double next = x * cur - k * prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

namespace {

// Bisection down to adjacent doubles; He_n has a simple zero in (lo, hi).
double bisect_hermite(int n, double lo, double hi) {
    double flo = hermite_eval(n, lo);
    for (int it = 0; it < 200; ++it) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double fm = hermite_eval(n, mid);
        if (fm == 0.0) return mid;
        if ((fm < 0.0) == (flo < 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

std::vector<double> hermite_zeros(int n) {
    if (n < 1 || n > 100) throw ArgumentError("hermite_zeros: degree must be in [1, 100]");
    // Zeros of He_{k-1} strictly interlace those of He_k, so each zero of He_k
    // is bracketed by consecutive zeros of the previous degree.
    std::vector<double> zeros{0.0};
    for (int k = 2; k <= n; ++k) {
        const double bound = std::sqrt(4.0 * k + 2.0) + 1.0;
        std::vector<double> next;
        next.reserve(k);
        double lo = -bound;
        for (double z : zeros) {
            next.push_back(bisect_hermite(k, lo, z));
            lo = z;
        }
        next.push_back(bisect_hermite(k, lo, bound));
        zeros = std::move(next);
    }
    return zeros;
}

double brent(const std::function<double(double)>& f, RootBracket bracket, double rel_tol) {
    double a = bracket.lo, b = bracket.hi;
    double fa = bracket.f_lo, fb = bracket.f_hi;
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0.0) == (fb > 0.0)) throw NoRootError("brent: bracket does not straddle a sign change");

    double c = a, fc = fa;
    double d = b - a, e = d;
    for (int it = 0; it < 300; ++it) {
        if ((fb > 0.0) == (fc > 0.0)) {
            c = a;
            fc = fa;
            d = e = b - a;
        }
        if (std::fabs(fc) < std::fabs(fb)) {
            a = b;
            b = c;
            c = a;
            fa = fb;
            fb = fc;
            fc = fa;
        }
        const double tol = 2.0 * std::numeric_limits<double>::epsilon() * std::fabs(b) +
                           0.5 * rel_tol * std::max(std::fabs(b), std::numeric_limits<double>::min());
        const double m = 0.5 * (c - b);
        if (std::fabs(m) <= tol || fb == 0.0) return b;

        if (std::fabs(e) >= tol && std::fabs(fa) > std::fabs(fb)) {
            double p, q;
            const double s = fb / fa;
            if (a == c) {
                p = 2.0 * m * s;
                q = 1.0 - s;
            } else {
                const double qa = fa / fc;
                const double r = fb / fc;
                p = s * (2.0 * m * qa * (qa - r) - (b - a) * (r - 1.0));
                q = (qa - 1.0) * (r - 1.0) * (s - 1.0);
            }
            if (p > 0.0)
                q = -q;
            else
                p = -p;
            if (2.0 * p < std::min(3.0 * m * q - std::fabs(tol * q), std::fabs(e * q))) {
                e = d;
                d = p / q;
            } else {
                d = m;
                e = m;
            }
        } else {
            d = m;
            e = m;
        }
        a = b;
        fa = fb;
        b += std::fabs(d) > tol ? d : (m > 0.0 ? tol : -tol);
        fb = f(b);
    }
    throw NumericalError("brent: no convergence in 300 iterations");
}

double first_zero(const std::function<double(double)>& f, double lo, double hi, double step) {
    if (!(lo < hi)) throw ArgumentError("first_zero: requires lo < hi");
    if (step <= 0.0) step = (hi - lo) / 2000.0;
    double x0 = lo;
    double f0 = f(x0);
    if (f0 == 0.0) return x0;
    while (x0 < hi) {
        const double x1 = std::min(x0 + step, hi);
        const double f1 = f(x1);
        if (f1 == 0.0) return x1;
        if (std::isfinite(f0) && std::isfinite(f1) && (f0 > 0.0) != (f1 > 0.0)) {
            const double root = brent(f, RootBracket{x0, x1, f0, f1});
            // A sign change across a pole is not a root: the refined point then
            // carries a value larger than either end of the bracket.
            if (std::fabs(f(root)) <= std::max(std::fabs(f0), std::fabs(f1))) return root;
        }
        x0 = x1;
        f0 = f1;
    }
    throw NoRootError("first_zero: no sign change in [" + std::to_string(lo) + ", " + std::to_string(hi) + "]");
}

}  // namespace poincare::specfun
