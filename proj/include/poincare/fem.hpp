#pragma once

#include <cstddef>
#include <vector>

#include "poincare/dist.hpp"
#include "poincare/estimate.hpp"

namespace poincare::fem {

/// Nodes x_0 = a < ... < x_n = b of a 1-D P1 mesh.
struct Mesh {
    std::vector<double> nodes;
    bool graded = false;  // spacing is not exactly (b - a) / n

    std::size_t elements() const { return nodes.empty() ? 0 : nodes.size() - 1; }

    /// n elements on [a, b]. Interior kinks become mesh nodes; the element
    /// count is then shared between the pieces in proportion to their length
    /// and the mesh is flagged as graded.
    static Mesh uniform(double a, double b, std::size_t n, const std::vector<double>& kinks = {});
};

/// Symmetric tridiagonal matrix: `diag` has n entries, `off` has n - 1.
struct Tridiagonal {
    std::vector<double> diag;
    std::vector<double> off;

    std::size_t size() const { return diag.size(); }
    std::vector<double> apply(const std::vector<double>& x) const;
};

/// Discrete pencil K u = (lambda + 1) M u with K = S + M.
/// The per-element stiffness s_e = (1/h_e^2) * integral of rho over element e
/// is kept separately so that inertia counts for S - lambda M can be formed
/// without cancelling against M.
struct SpectralSystem {
    Mesh mesh;
    Tridiagonal K;
    Tridiagonal M;
    std::vector<double> element_stiffness;
    bool lumped = false;
};

struct SpectralSolution {
    double lambda0 = 0.0;
    double lambda1 = 0.0;
    std::vector<double> u1;   // M-orthogonal to constants, increasing, max |u1| = 1
    double residual = 0.0;    // ||K u1 - theta1 M u1||_inf / ||u1||_inf
    double rayleigh = 0.0;    // u1' S u1 / u1' M u1
};

/// P1 stiffness and mass by 5-point Gauss–Legendre per element.
/// PreconditionError if the density is not positive and finite at every quadrature node.
SpectralSystem assemble(const DistributionSpec& d, const Mesh& mesh, bool lumped = false);

/// Number of eigenvalues of the pencil (S, M) strictly below lambda.
std::size_t count_below(const SpectralSystem& sys, double lambda);

/// Two smallest eigenvalues by inertia bisection, then inverse iteration for u1.
SpectralSolution solve_gap(const SpectralSystem& sys);

struct FemOptions {
    double tol = 1e-6;
    std::size_t initial_elements = 500;
    std::size_t max_elements = std::size_t{1} << 20;
    bool lumped = false;
};

/// Mesh-doubling FEM estimate with Richardson extrapolation of the last pair.
/// Requires a bounded support (PreconditionError otherwise).
ConstantResult poincare_fem(const DistributionSpec& d, const FemOptions& options = {});

/// Exhaustion of infinite sides by quantiles at mass 1e-3 ... 1e-6.
/// ConvergenceError when the last two constants differ by more than 10 * tol (relative).
PoincareEstimate unbounded_limit(const DistributionSpec& d, const FemOptions& options = {1e-4});

}  // namespace poincare::fem
