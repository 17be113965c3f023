#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "poincare/dist.hpp"

namespace poincare::sa {

struct Evaluation {
    double value = 0.0;
    std::vector<double> gradient;
};

struct ModelFunction {
    std::size_t dimension = 0;
    std::function<Evaluation(std::span<const double>)> evaluate;
    std::vector<std::string> names;  // optional input labels
};

enum class Sampling { halton, monte_carlo };

struct SampleOptions {
    std::size_t n = 10000;
    std::uint64_t seed = 42;
    Sampling sampling = Sampling::halton;
    std::size_t bootstrap = 500;
};

/// Halton points in the first `dimension` prime bases with a random digital
/// shift drawn from `seed`. Coordinates lie strictly inside (0, 1).
class Halton {
public:
    Halton(std::size_t dimension, std::uint64_t seed);
    /// Point number `index` (0-based; the sequence's origin point is skipped).
    std::vector<double> point(std::uint64_t index) const;
    std::size_t dimension() const { return bases_.size(); }

private:
    std::vector<unsigned> bases_;
    std::vector<std::vector<unsigned>> shifts_;  // per dimension, per digit
};

struct Estimate {
    double mean = 0.0;
    double sd = 0.0;
};

/// nu_i = E[(df/dx_i)^2] with bootstrap sd.
std::vector<Estimate> estimate_dgsm(const ModelFunction& model, const std::vector<DistributionSpec>& dists,
                                    const SampleOptions& options = {});

struct SobolResult {
    std::vector<Estimate> total;  // Jansen estimator, one per input
    Estimate variance;            // D = Var(f)
    bool degenerate = false;      // D numerically zero: indices reported as 0
};

SobolResult estimate_total_sobol(const ModelFunction& model, const std::vector<DistributionSpec>& dists,
                                 const SampleOptions& options = {});

/// C_i nu_i / D. ArgumentError if D <= 0, C_i <= 0 or nu_i < 0.
double dgsm_upper_bound(double C_i, double nu_i, double D);

/// Simplified flood model S = H + Z_v - H_d - C_b with
/// H = (Q / (B K_s sqrt((Z_m - Z_v) / L)))^0.6. Input order:
/// Q, K_s, Z_v, Z_m, H_d, C_b, L, B.
ModelFunction flood_model();
/// The eight input laws of the flood model, in model order.
std::vector<DistributionSpec> flood_inputs();

struct InputReport {
    std::string name;
    double nu = 0.0;
    double nu_sd = 0.0;
    double total_sobol = 0.0;
    double sobol_sd = 0.0;
    double poincare = 0.0;
    double upper_bound = 0.0;
    double bound_sd = 0.0;
    bool active = true;
};

struct ScreeningReport {
    std::vector<InputReport> inputs;
    double D = 0.0;
    double D_sd = 0.0;
    std::size_t n = 0;
    std::size_t bootstrap = 0;
    std::uint64_t seed = 0;
    Sampling sampling = Sampling::halton;
    double threshold = 0.0;
    bool degenerate = false;
};

/// DGSM, total Sobol indices and DGSM upper bounds from one joint design,
/// with a joint bootstrap for all standard deviations. Poincaré constants
/// are computed per input unless supplied. Inputs whose bound falls below
/// `threshold` are flagged inactive.
ScreeningReport screening_study(const ModelFunction& model, const std::vector<DistributionSpec>& dists,
                                const SampleOptions& options, double threshold,
                                std::optional<std::vector<double>> constants = std::nullopt);

}  // namespace poincare::sa
