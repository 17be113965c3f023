#pragma once

#include <functional>
#include <vector>

namespace poincare::specfun {

/// A sign-change bracket for a scalar root search.
struct RootBracket {
    double lo;
    double hi;
    double f_lo;
    double f_hi;
};

/// Kummer's confluent hypergeometric function M(a1; b1; z) = 1F1, summed as
/// the power series with term ratio (p + a1) z / ((p + b1)(p + 1)).
/// Requires z >= 0 and b1 not a nonpositive integer. When a1 is a
/// nonpositive integer the series terminates and the polynomial is exact.
/// Throws NumericalError if the series has not converged after 10^4 terms,
/// or if cancellation between terms would leave fewer than ~8 significant digits.
double kummer_m(double a1, double b1, double z);

/// M(a1; b1; z) together with its z-derivative (a1/b1) M(a1+1; b1+1; z).
struct KummerValue {
    double value;
    double dz;
};
KummerValue kummer_m_with_derivative(double a1, double b1, double z);

/// Bessel J0 by its ascending series; valid for |x| <= 12.
double bessel_j0(double x);
/// Bessel J1 by its ascending series; valid for |x| <= 12. J0' = -J1.
double bessel_j1(double x);
/// First positive zero of J0 (about 2.4048).
double bessel_j0_first_zero();

/// Probabilists' Hermite polynomial He_n via He_{n+1} = x He_n - n He_{n-1}.
/// ArgumentError for n < 0 or n > 100.
double hermite_eval(int n, double x);
/// The n simple real zeros of He_n in ascending order (n in [1, 100]).
std::vector<double> hermite_zeros(int n);

/// Brent's method on a sign-change bracket; relative tolerance on the abscissa.
double brent(const std::function<double(double)>& f, RootBracket bracket, double rel_tol = 1e-12);

/// Smallest root of f in [lo, hi]: scans from lo in increments of `step`
/// (default (hi - lo) / 2000) for the first exact zero or sign change, then
/// refines with Brent. Throws NoRootError when no sign change is found.
double first_zero(const std::function<double(double)>& f, double lo, double hi, double step = 0.0);

}  // namespace poincare::specfun
