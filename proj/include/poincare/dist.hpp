#pragma once

#include <limits>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace poincare {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

/// Closed interval with possibly infinite ends.
struct Interval {
    double lo = -kInf;
    double hi = kInf;

    double width() const { return hi - lo; }
    bool bounded() const;
    bool contains(double x) const { return x >= lo && x <= hi; }
    friend bool operator==(const Interval&, const Interval&) = default;
};

namespace dist {

/// Base laws, all given in standardized form (location 0, scale 1):
///   uniform             1/2 on [-1, 1]
///   normal              standard Gaussian
///   double_exponential  exp(-|x|)/2
///   logistic            e^x / (1 + e^x)^2
///   exponential         exp(-x) on [0, inf)
///   gumbel              max-Gumbel, F(x) = exp(-exp(-x))
///   triangular          1 - |x| on [-1, 1]
enum class Family { uniform, normal, double_exponential, logistic, exponential, gumbel, triangular };

std::string_view to_string(Family f);
Family family_from_string(std::string_view name);  // throws ArgumentError
const std::vector<Family>& all_families();

/// An affine image of a base law, optionally truncated. The truncation
/// interval is expressed in the same (physical) units as the location.
///
/// Invariants, enforced by the constructor: scale > 0, lo < hi, and the
/// truncated mass Z = F(hi) - F(lo) is strictly positive.
class DistributionSpec {
public:
    explicit DistributionSpec(Family family, double location = 0.0, double scale = 1.0,
                              std::optional<Interval> truncation = std::nullopt);

    /// Uniform law on [a, b].
    static DistributionSpec uniform_on(double a, double b);

    Family family() const { return family_; }
    double location() const { return location_; }
    double scale() const { return scale_; }
    const std::optional<Interval>& truncation() const { return truncation_; }

    /// Effective support: base support intersected with the truncation.
    Interval support() const;
    /// Support in standardized coordinates.
    Interval standard_support() const { return {za_, zb_}; }
    /// Mass Z of the truncation interval under the untruncated law.
    double mass() const { return mass_; }
    /// Untruncated version of this law.
    DistributionSpec parent() const { return DistributionSpec(family_, location_, scale_); }
    /// Restriction to `window`; composes with an existing truncation by intersection.
    DistributionSpec truncated(Interval window) const;

    bool symmetric_family() const;
    /// Interior points of the support where the density is not smooth.
    std::vector<double> kinks() const;

    double to_standard(double x) const { return (x - location_) / scale_; }
    double from_standard(double z) const { return location_ + scale_ * z; }

    friend bool operator==(const DistributionSpec&, const DistributionSpec&) = default;

private:
    Family family_;
    double location_;
    double scale_;
    std::optional<Interval> truncation_;
    double za_, zb_;  // standardized support
    // Base CDF and survival at both ends; truncated quantities are formed from
    // whichever pair avoids cancellation.
    double cdf_a_, sf_a_, cdf_b_, sf_b_;
    double mass_;

    friend double cdf(const DistributionSpec&, double);
    friend double sf(const DistributionSpec&, double);
    friend double quantile(const DistributionSpec&, double);
    friend double inverse_sf(const DistributionSpec&, double);
};

struct IntervalMoments {
    double mean = 0.0;
    double variance = 0.0;
};

struct Potential {
    double value;                 // V = -log(pdf), including the truncation offset
    double first;                 // V'
    std::optional<double> second; // V'', absent at kinks
};

double pdf(const DistributionSpec& d, double x);
double cdf(const DistributionSpec& d, double x);
/// Survival function 1 - cdf, computed without cancellation in the upper tail.
double sf(const DistributionSpec& d, double x);
/// Inverse CDF; DomainError for p outside (0, 1).
double quantile(const DistributionSpec& d, double p);
/// Inverse survival function, accurate for q near 0. DomainError for q outside (0, 1).
double inverse_sf(const DistributionSpec& d, double q);
/// DomainError if x is not in the open support.
Potential potential(const DistributionSpec& d, double x);
/// Median of the (truncated) law.
double median(const DistributionSpec& d);

/// Mean and variance under the truncated law, by adaptive quadrature.
IntervalMoments interval_moments(const DistributionSpec& d);

/// Standard form (location 0, scale 1) with the truncation mapped through
/// (x - location) / scale, and the factor scale^2 relating the Poincaré
/// constants: C_P(d) = factor * C_P(standard).
std::pair<DistributionSpec, double> standardize(const DistributionSpec& d);

/// Base-law building blocks in standardized coordinates. Exposed for the
/// special-purpose solvers and for tests.
namespace base {
Interval support(Family f);
double pdf(Family f, double z);
double cdf(Family f, double z);
double sf(Family f, double z);
double quantile(Family f, double p);
double inverse_sf(Family f, double q);
}  // namespace base

/// Standard normal quantile (Newton-polished rational seed).
double normal_quantile(double p);
/// Standard normal density.
double normal_pdf(double x);
/// Standard normal CDF.
double normal_cdf(double x);

}  // namespace dist

using dist::DistributionSpec;

}  // namespace poincare
