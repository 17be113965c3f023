#include "poincare/fem.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <string>

#include "poincare/errors.hpp"
#include "poincare/quadrature.hpp"

namespace poincare::fem {

Mesh Mesh::uniform(double a, double b, std::size_t n, const std::vector<double>& kinks) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) throw ArgumentError("mesh needs a finite interval a < b");
    if (n < 1) throw ArgumentError("mesh needs at least one element");

    std::vector<double> cuts{a};
    for (double k : kinks)
        if (k > a && k < b) cuts.push_back(k);
    cuts.push_back(b);
    std::sort(cuts.begin(), cuts.end());

    Mesh mesh;
    mesh.graded = cuts.size() > 2;
    mesh.nodes.reserve(n + cuts.size());
    mesh.nodes.push_back(a);
    const double length = b - a;
    for (std::size_t p = 0; p + 1 < cuts.size(); ++p) {
        const double lo = cuts[p], hi = cuts[p + 1];
        const auto pieces = std::max<std::size_t>(
            1, static_cast<std::size_t>(std::llround(static_cast<double>(n) * (hi - lo) / length)));
        for (std::size_t i = 1; i < pieces; ++i)
            mesh.nodes.push_back(lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(pieces));
        mesh.nodes.push_back(hi);
    }
    return mesh;
}

std::vector<double> Tridiagonal::apply(const std::vector<double>& x) const {
    const std::size_t n = diag.size();
    std::vector<double> y(n);
    for (std::size_t i = 0; i < n; ++i) {
        double v = diag[i] * x[i];
        if (i > 0) v += off[i - 1] * x[i - 1];
        if (i + 1 < n) v += off[i] * x[i + 1];
        y[i] = v;
    }
    return y;
}

SpectralSystem assemble(const DistributionSpec& d, const Mesh& mesh, bool lumped) {
    const std::size_t ne = mesh.elements();
    if (ne < 1) throw ArgumentError("assemble: empty mesh");
    const std::size_t nn = ne + 1;

    SpectralSystem sys;
    sys.mesh = mesh;
    sys.lumped = lumped;
    sys.element_stiffness.resize(ne);
    sys.M.diag.assign(nn, 0.0);
    sys.M.off.assign(ne, 0.0);

    for (std::size_t e = 0; e < ne; ++e) {
        const double xl = mesh.nodes[e], xr = mesh.nodes[e + 1];
        const double h = xr - xl;
        const double half = 0.5 * h, mid = 0.5 * (xl + xr);
        double mass = 0.0, mll = 0.0, mlr = 0.0, mrr = 0.0;
        for (std::size_t q = 0; q < quad::gl5_nodes.size(); ++q) {
            const double x = mid + half * quad::gl5_nodes[q];
            const double rho = dist::pdf(d, x);
            if (!(rho > 0.0) || !std::isfinite(rho))
                throw PreconditionError("assemble: density is not positive and finite at x = " + std::to_string(x) +
                                        "; shrink the interval or use unbounded_limit");
            const double w = quad::gl5_weights[q] * half * rho;
            const double phi_r = (x - xl) / h;
            const double phi_l = 1.0 - phi_r;
            mass += w;
            mll += w * phi_l * phi_l;
            mlr += w * phi_l * phi_r;
            mrr += w * phi_r * phi_r;
        }
        sys.element_stiffness[e] = mass / (h * h);
        if (lumped) {
            sys.M.diag[e] += mll + mlr;
            sys.M.diag[e + 1] += mrr + mlr;
        } else {
            sys.M.diag[e] += mll;
            sys.M.diag[e + 1] += mrr;
            sys.M.off[e] = mlr;
        }
    }

    sys.K = sys.M;
    for (std::size_t e = 0; e < ne; ++e) {
        const double s = sys.element_stiffness[e];
        sys.K.diag[e] += s;
        sys.K.diag[e + 1] += s;
        sys.K.off[e] -= s;
    }
    return sys;
}

std::size_t count_below(const SpectralSystem& sys, double lambda) {
    // LDL' pivots of S - lambda M written as d_i = s_i + e_i. The recurrence
    // for e_i involves only O(lambda) quantities, so small eigenvalues are
    // resolved to relative precision instead of being lost against s_i.
    const auto& s = sys.element_stiffness;
    const auto& mdiag = sys.M.diag;
    const auto& moff = sys.M.off;
    const std::size_t nn = mdiag.size();
    const double tiny = std::numeric_limits<double>::min();

    std::size_t negatives = 0;
    double e = -lambda * mdiag[0];
    double piv = s[0] + e;
    if (piv < 0.0) ++negatives;
    for (std::size_t i = 1; i < nn; ++i) {
        const double si = s[i - 1];
        const double mu = moff[i - 1];
        double den = piv;
        if (den == 0.0) den = -tiny;
        e = si * e / den - lambda * mdiag[i] - lambda * mu * (2.0 * si + lambda * mu) / den;
        piv = (i + 1 < nn ? s[i] : 0.0) + e;
        if (piv < 0.0) ++negatives;
    }
    return negatives;
}

namespace {

// Gaussian elimination with partial pivoting for a general tridiagonal system
// (sub, diag, sup); rhs is overwritten with the solution.
void solve_tridiagonal(std::vector<double> sub, std::vector<double> diag, std::vector<double> sup,
                       std::vector<double>& rhs) {
    const std::size_t n = diag.size();
    std::vector<double> sup2(n, 0.0);
    double scale = 0.0;
    for (double v : diag) scale = std::max(scale, std::fabs(v));
    const double floor = std::numeric_limits<double>::epsilon() * std::max(scale, 1e-300);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::fabs(sub[i]) > std::fabs(diag[i])) {
            // Swap rows i and i + 1.
            std::swap(diag[i], sub[i]);
            std::swap(rhs[i], rhs[i + 1]);
            const double t = sup[i];
            sup[i] = diag[i + 1];
            diag[i + 1] = t;
            if (i + 2 < n) {
                sup2[i] = sup[i + 1];
                sup[i + 1] = 0.0;
            }
            // Now row i = (diag[i], sup[i], sup2[i]) and row i+1 starts with sub[i].
            const double f = sub[i] / diag[i];
            diag[i + 1] -= f * sup[i];
            if (i + 2 < n) sup[i + 1] -= f * sup2[i];
            rhs[i + 1] -= f * rhs[i];
        } else {
            if (diag[i] == 0.0) diag[i] = floor;
            const double f = sub[i] / diag[i];
            diag[i + 1] -= f * sup[i];
            rhs[i + 1] -= f * rhs[i];
        }
    }
    if (diag[n - 1] == 0.0) diag[n - 1] = floor;
    rhs[n - 1] /= diag[n - 1];
    if (n >= 2) rhs[n - 2] = (rhs[n - 2] - sup[n - 2] * rhs[n - 1]) / diag[n - 2];
    for (std::size_t k = n - 2; k-- > 0;)
        rhs[k] = (rhs[k] - sup[k] * rhs[k + 1] - sup2[k] * rhs[k + 2]) / diag[k];
}

double norm_inf(const std::vector<double>& v) {
    double m = 0.0;
    for (double x : v) m = std::max(m, std::fabs(x));
    return m;
}

void remove_constant(const Tridiagonal& M, std::vector<double>& u) {
    const std::vector<double> ones(u.size(), 1.0);
    const auto m1 = M.apply(ones);
    double num = 0.0, den = 0.0;
    for (std::size_t i = 0; i < u.size(); ++i) {
        num += m1[i] * u[i];
        den += m1[i];
    }
    const double c = num / den;
    for (double& x : u) x -= c;
}

// Smallest lambda with count_below(lambda) >= k, bracketed by [lo, hi].
double bisect_eigenvalue(const SpectralSystem& sys, std::size_t k, double lo, double hi, double abs_tol) {
    for (int it = 0; it < 200; ++it) {
        if (hi - lo <= std::max(abs_tol, 4.0 * std::numeric_limits<double>::epsilon() * std::fabs(hi)))
            return 0.5 * (lo + hi);
        const double mid = 0.5 * (lo + hi);
        if (count_below(sys, mid) >= k)
            hi = mid;
        else
            lo = mid;
    }
    throw NumericalError("solve_gap: eigenvalue bisection did not converge in 200 iterations");
}

}  // namespace

SpectralSolution solve_gap(const SpectralSystem& sys) {
    const std::size_t nn = sys.M.size();
    if (nn < 3) throw ArgumentError("solve_gap: need at least two elements");

    double hi = 1.0;
    int grow = 0;
    while (count_below(sys, hi) < 2) {
        hi *= 2.0;
        if (++grow > 200) throw NumericalError("solve_gap: could not bracket the second eigenvalue");
    }
    SpectralSolution sol;
    sol.lambda1 = bisect_eigenvalue(sys, 2, -1.0, hi, 0.0);
    sol.lambda0 = bisect_eigenvalue(sys, 1, -1.0, sol.lambda1, 1e-13 * sol.lambda1);
    if (!(sol.lambda1 > 0.0)) throw NumericalError("solve_gap: non-positive spectral gap");

    // Inverse iteration on S - lambda1 M.
    const double lam = sol.lambda1;
    const auto& s = sys.element_stiffness;
    std::vector<double> diag(nn), off(nn - 1);
    for (std::size_t i = 0; i < nn; ++i) {
        const double sd = (i > 0 ? s[i - 1] : 0.0) + (i + 1 < nn ? s[i] : 0.0);
        diag[i] = sd - lam * sys.M.diag[i];
    }
    for (std::size_t i = 0; i + 1 < nn; ++i) off[i] = -s[i] - lam * sys.M.off[i];

    std::mt19937_64 rng(0x5eed5eedULL);
    std::uniform_real_distribution<double> unif(-1.0, 1.0);
    std::vector<double> u(nn);
    for (double& x : u) x = unif(rng);
    remove_constant(sys.M, u);
    for (int it = 0; it < 3; ++it) {
        auto rhs = sys.M.apply(u);
        solve_tridiagonal(off, diag, off, rhs);
        u = std::move(rhs);
        remove_constant(sys.M, u);
        const double nrm = norm_inf(u);
        if (!(nrm > 0.0) || !std::isfinite(nrm)) throw NumericalError("solve_gap: inverse iteration broke down");
        for (double& x : u) x /= nrm;
    }
    if (u.back() < u.front())
        for (double& x : u) x = -x;

    const Tridiagonal A{diag, off};
    sol.residual = norm_inf(A.apply(u)) / norm_inf(u);

    double num = 0.0;
    for (std::size_t e = 0; e + 1 < nn; ++e) {
        const double du = u[e + 1] - u[e];
        num += s[e] * du * du;
    }
    const auto mu = sys.M.apply(u);
    double den = 0.0;
    for (std::size_t i = 0; i < nn; ++i) den += u[i] * mu[i];
    sol.rayleigh = num / den;
    sol.u1 = std::move(u);
    return sol;
}

namespace {

SpectralSolution solve_on(const DistributionSpec& d, const Interval& support, std::size_t n, bool lumped) {
    return solve_gap(assemble(d, Mesh::uniform(support.lo, support.hi, n, d.kinks()), lumped));
}

}  // namespace

ConstantResult poincare_fem(const DistributionSpec& d, const FemOptions& options) {
    const Interval support = d.support();
    if (!support.bounded()) throw PreconditionError("poincare_fem: support must be bounded; use unbounded_limit");
    if (!(options.tol > 0.0)) throw ArgumentError("poincare_fem: tol must be positive");
    if (options.initial_elements < 2) throw ArgumentError("poincare_fem: need at least two elements");

    std::size_t n = options.initial_elements;
    if (2 * n > options.max_elements) throw ResourceError("poincare_fem: element budget below the starting mesh");
    SpectralSolution coarse = solve_on(d, support, n, options.lumped);
    SpectralSolution fine = solve_on(d, support, 2 * n, options.lumped);
    double rel = std::fabs(coarse.lambda1 - fine.lambda1) / fine.lambda1;
    while (rel > options.tol) {
        n *= 2;
        if (2 * n > options.max_elements)
            throw ResourceError("poincare_fem: tolerance not met within " + std::to_string(options.max_elements) +
                                " elements (last relative change " + std::to_string(rel) + ")");
        coarse = std::move(fine);
        fine = solve_on(d, support, 2 * n, options.lumped);
        rel = std::fabs(coarse.lambda1 - fine.lambda1) / fine.lambda1;
    }
    const double gap = (4.0 * fine.lambda1 - coarse.lambda1) / 3.0;
    ConstantResult out;
    out.estimate = PoincareEstimate::from_gap(gap, Method::fem, rel / gap);
    const Mesh mesh = Mesh::uniform(support.lo, support.hi, 2 * n, d.kinks());
    out.saturating = SaturatingFunction::sampled(mesh.nodes, std::move(fine.u1), fine.rayleigh);
    return out;
}

PoincareEstimate unbounded_limit(const DistributionSpec& d, const FemOptions& options) {
    const Interval support = d.support();
    if (support.bounded()) throw PreconditionError("unbounded_limit: support is bounded; use poincare_fem");

    double previous = 0.0, current = 0.0;
    for (double eps : {1e-3, 1e-4, 1e-5, 1e-6}) {
        Interval window = support;
        if (std::isinf(window.lo)) window.lo = dist::quantile(d, eps);
        if (std::isinf(window.hi)) window.hi = dist::inverse_sf(d, eps);
        previous = current;
        current = poincare_fem(d.truncated(window), options).estimate.value;
    }
    const double increment = std::fabs(current - previous);
    if (increment > 10.0 * options.tol * current)
        throw ConvergenceError("unbounded_limit: exhaustion not stabilized at mass 1e-6 (last two constants " +
                               std::to_string(previous) + ", " + std::to_string(current) + ")");
    return PoincareEstimate::from_value(current, Method::limit, increment);
}

}  // namespace poincare::fem
