#include "poincare/dist.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "poincare/errors.hpp"
#include "poincare/quadrature.hpp"

namespace poincare {

bool Interval::bounded() const { return std::isfinite(lo) && std::isfinite(hi); }

namespace dist {

namespace {

constexpr double kLogSqrt2Pi = 0.918938533204672741780329736406;  // log(sqrt(2 pi))

struct FamilyName {
    Family family;
    std::string_view name;
};

constexpr std::array<FamilyName, 7> kNames = {{
    {Family::uniform, "uniform"},
    {Family::normal, "normal"},
    {Family::double_exponential, "double_exponential"},
    {Family::logistic, "logistic"},
    {Family::exponential, "exponential"},
    {Family::gumbel, "gumbel"},
    {Family::triangular, "triangular"},
}};

// -log of the standardized base density.
double base_neg_log_pdf(Family f, double z) {
    switch (f) {
        case Family::uniform: return std::numbers::ln2;
        case Family::normal: return 0.5 * z * z + kLogSqrt2Pi;
        case Family::double_exponential: return std::abs(z) + std::numbers::ln2;
        case Family::logistic: return std::abs(z) + 2.0 * std::log1p(std::exp(-std::abs(z)));
        case Family::exponential: return z;
        case Family::gumbel: return z + std::exp(-z);
        case Family::triangular: return -std::log1p(-std::abs(z));
    }
    return 0.0;
}

double sign(double z) { return z > 0.0 ? 1.0 : (z < 0.0 ? -1.0 : 0.0); }

double base_dV(Family f, double z) {
    switch (f) {
        case Family::uniform: return 0.0;
        case Family::normal: return z;
        case Family::double_exponential: return sign(z);
        case Family::logistic: return std::tanh(0.5 * z);
        case Family::exponential: return 1.0;
        case Family::gumbel: return -std::expm1(-z);
        case Family::triangular: return sign(z) / (1.0 - std::abs(z));
    }
    return 0.0;
}

std::optional<double> base_d2V(Family f, double z) {
    switch (f) {
        case Family::uniform: return 0.0;
        case Family::normal: return 1.0;
        case Family::double_exponential:
            if (z == 0.0) return std::nullopt;
            return 0.0;
        case Family::logistic: {
            const double e = std::exp(-std::abs(z));
            return 2.0 * e / ((1.0 + e) * (1.0 + e));
        }
        case Family::exponential: return 0.0;
        case Family::gumbel: return std::exp(-z);
        case Family::triangular: {
            if (z == 0.0) return std::nullopt;
            const double r = 1.0 - std::abs(z);
            return 1.0 / (r * r);
        }
    }
    return std::nullopt;
}

bool has_kink_at_zero(Family f) {
    return f == Family::double_exponential || f == Family::triangular;
}

// Acklam's rational approximation to the normal quantile (relative error ~1e-9).
double acklam_quantile(double p) {
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02, -2.759285104469687e+02,
                                   1.383577518672690e+02, -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02, -1.556989798598866e+02,
                                   6.680131188771972e+01, -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01, -2.400758277161838e+00,
                                   -2.549732539343734e+00, 4.374664141464968e+00, 2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01, 2.445134137142996e+00,
                                   3.754408661907416e+00};
    constexpr double p_low = 0.02425;
    if (p < p_low) {
        const double q = std::sqrt(-2.0 * std::log(p));
        return (((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
               ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
    }
    if (p <= 1.0 - p_low) {
        const double q = p - 0.5;
        const double r = q * q;
        return (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q /
               (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1.0);
    }
    const double q = std::sqrt(-2.0 * std::log1p(-p));
    return -(((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]) /
           ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1.0);
}

}  // namespace

std::string_view to_string(Family f) {
    for (const auto& n : kNames)
        if (n.family == f) return n.name;
    return "unknown";
}

Family family_from_string(std::string_view name) {
    for (const auto& n : kNames)
        if (n.name == name) return n.family;
    throw ArgumentError("unknown distribution family '" + std::string(name) + "'");
}

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> v;
        for (const auto& n : kNames) v.push_back(n.family);
        return v;
    }();
    return families;
}

double normal_pdf(double x) { return std::exp(-0.5 * x * x - kLogSqrt2Pi); }

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::numbers::sqrt2); }

double normal_quantile(double p) {
    if (!(p > 0.0 && p < 1.0)) {
        if (p == 0.0) return -kInf;
        if (p == 1.0) return kInf;
        throw DomainError("normal quantile requires p in (0, 1)");
    }
    // Work on the lower half and reflect, so the Newton residual is formed
    // between two small numbers in the tail.
    const bool upper = p > 0.5;
    const double q = upper ? 1.0 - p : p;
    double x = acklam_quantile(q);
    for (int it = 0; it < 3; ++it) {
        const double e = normal_cdf(x) - q;
        const double u = e / normal_pdf(x);
        x -= u / (1.0 + 0.5 * x * u);  // Halley
    }
    return upper ? -x : x;
}

namespace base {

Interval support(Family f) {
    switch (f) {
        case Family::uniform:
        case Family::triangular: return {-1.0, 1.0};
        case Family::exponential: return {0.0, kInf};
        default: return {-kInf, kInf};
    }
}

double pdf(Family f, double z) {
    const Interval s = support(f);
    if (z < s.lo || z > s.hi) return 0.0;
    switch (f) {
        case Family::uniform: return 0.5;
        case Family::normal: return normal_pdf(z);
        case Family::double_exponential: return 0.5 * std::exp(-std::abs(z));
        case Family::logistic: {
            const double e = std::exp(-std::abs(z));
            return e / ((1.0 + e) * (1.0 + e));
        }
        case Family::exponential: return std::exp(-z);
        case Family::gumbel: {
            const double e = std::exp(-z);
            return std::isinf(e) ? 0.0 : e * std::exp(-e);
        }
        case Family::triangular: return 1.0 - std::abs(z);
    }
    return 0.0;
}

double cdf(Family f, double z) {
    const Interval s = support(f);
    if (z <= s.lo) return 0.0;
    if (z >= s.hi) return 1.0;
    switch (f) {
        case Family::uniform: return 0.5 * (z + 1.0);
        case Family::normal: return normal_cdf(z);
        case Family::double_exponential: return z < 0.0 ? 0.5 * std::exp(z) : 1.0 - 0.5 * std::exp(-z);
        case Family::logistic: return 1.0 / (1.0 + std::exp(-z));
        case Family::exponential: return -std::expm1(-z);
        case Family::gumbel: return std::exp(-std::exp(-z));
        case Family::triangular: return z < 0.0 ? 0.5 * (1.0 + z) * (1.0 + z) : 1.0 - 0.5 * (1.0 - z) * (1.0 - z);
    }
    return 0.0;
}

double sf(Family f, double z) {
    const Interval s = support(f);
    if (z <= s.lo) return 1.0;
    if (z >= s.hi) return 0.0;
    switch (f) {
        case Family::uniform: return 0.5 * (1.0 - z);
        case Family::normal: return normal_cdf(-z);
        case Family::double_exponential: return z > 0.0 ? 0.5 * std::exp(-z) : 1.0 - 0.5 * std::exp(z);
        case Family::logistic: return 1.0 / (1.0 + std::exp(z));
        case Family::exponential: return std::exp(-z);
        case Family::gumbel: return -std::expm1(-std::exp(-z));
        case Family::triangular: return z > 0.0 ? 0.5 * (1.0 - z) * (1.0 - z) : 1.0 - 0.5 * (1.0 + z) * (1.0 + z);
    }
    return 0.0;
}

double quantile(Family f, double p) {
    if (p <= 0.0) return support(f).lo;
    if (p >= 1.0) return support(f).hi;
    switch (f) {
        case Family::uniform: return 2.0 * p - 1.0;
        case Family::normal: return normal_quantile(p);
        case Family::double_exponential: return p < 0.5 ? std::log(2.0 * p) : -std::log(2.0 * (1.0 - p));
        case Family::logistic: return std::log(p) - std::log1p(-p);
        case Family::exponential: return -std::log1p(-p);
        case Family::gumbel: return -std::log(-std::log(p));
        case Family::triangular: return p < 0.5 ? -1.0 + std::sqrt(2.0 * p) : 1.0 - std::sqrt(2.0 * (1.0 - p));
    }
    return 0.0;
}

double inverse_sf(Family f, double q) {
    if (q <= 0.0) return support(f).hi;
    if (q >= 1.0) return support(f).lo;
    switch (f) {
        case Family::uniform: return 1.0 - 2.0 * q;
        case Family::normal: return -normal_quantile(q);
        case Family::double_exponential: return q < 0.5 ? -std::log(2.0 * q) : std::log(2.0 * (1.0 - q));
        case Family::logistic: return std::log1p(-q) - std::log(q);
        case Family::exponential: return -std::log(q);
        case Family::gumbel: return -std::log(-std::log1p(-q));
        case Family::triangular: return q < 0.5 ? 1.0 - std::sqrt(2.0 * q) : -1.0 + std::sqrt(2.0 * (1.0 - q));
    }
    return 0.0;
}

}  // namespace base

DistributionSpec::DistributionSpec(Family family, double location, double scale,
                                   std::optional<Interval> truncation)
    : family_(family), location_(location), scale_(scale), truncation_(truncation) {
    if (!std::isfinite(location)) throw ArgumentError("location must be finite");
    if (!(std::isfinite(scale) && scale > 0.0)) throw ArgumentError("scale must be finite and positive");
    const Interval bs = base::support(family);
    za_ = bs.lo;
    zb_ = bs.hi;
    if (truncation_) {
        const Interval t = *truncation_;
        if (std::isnan(t.lo) || std::isnan(t.hi) || !(t.lo < t.hi))
            throw ArgumentError("truncation interval must satisfy lo < hi");
        za_ = std::max(za_, (t.lo - location) / scale);
        zb_ = std::min(zb_, (t.hi - location) / scale);
    }
    if (!(za_ < zb_)) throw ArgumentError("truncation does not intersect the support");
    cdf_a_ = base::cdf(family, za_);
    sf_a_ = base::sf(family, za_);
    cdf_b_ = base::cdf(family, zb_);
    sf_b_ = base::sf(family, zb_);
    if (cdf_b_ <= 0.5)
        mass_ = cdf_b_ - cdf_a_;
    else if (cdf_a_ >= 0.5)
        mass_ = sf_a_ - sf_b_;
    else
        mass_ = (0.5 - cdf_a_) + (0.5 - sf_b_);
    if (!(mass_ > 0.0)) throw ArgumentError("truncation interval carries no probability mass");
}

DistributionSpec DistributionSpec::uniform_on(double a, double b) {
    if (!(a < b) || !std::isfinite(a) || !std::isfinite(b)) throw ArgumentError("uniform_on requires finite a < b");
    return DistributionSpec(Family::uniform, 0.5 * (a + b), 0.5 * (b - a));
}

Interval DistributionSpec::support() const { return {from_standard(za_), from_standard(zb_)}; }

DistributionSpec DistributionSpec::truncated(Interval window) const {
    Interval t = window;
    if (truncation_) {
        t.lo = std::max(t.lo, truncation_->lo);
        t.hi = std::min(t.hi, truncation_->hi);
        if (!(t.lo < t.hi)) throw ArgumentError("empty intersection of truncation intervals");
    }
    return DistributionSpec(family_, location_, scale_, t);
}

bool DistributionSpec::symmetric_family() const {
    return family_ != Family::exponential && family_ != Family::gumbel;
}

std::vector<double> DistributionSpec::kinks() const {
    if (has_kink_at_zero(family_) && za_ < 0.0 && zb_ > 0.0) return {location_};
    return {};
}

double pdf(const DistributionSpec& d, double x) {
    const Interval s = d.support();
    if (x < s.lo || x > s.hi) return 0.0;
    return base::pdf(d.family(), d.to_standard(x)) / (d.scale() * d.mass());
}

double cdf(const DistributionSpec& d, double x) {
    const double z = d.to_standard(x);
    if (z <= d.za_) return 0.0;
    if (z >= d.zb_) return 1.0;
    const double c = base::cdf(d.family(), z);
    const double v = c <= 0.5 ? (c - d.cdf_a_) / d.mass_ : 1.0 - (base::sf(d.family(), z) - d.sf_b_) / d.mass_;
    return std::clamp(v, 0.0, 1.0);
}

double sf(const DistributionSpec& d, double x) {
    const double z = d.to_standard(x);
    if (z <= d.za_) return 1.0;
    if (z >= d.zb_) return 0.0;
    const double c = base::cdf(d.family(), z);
    const double v = c <= 0.5 ? (d.cdf_b_ - c) / d.mass_ : (base::sf(d.family(), z) - d.sf_b_) / d.mass_;
    return std::clamp(v, 0.0, 1.0);
}

double quantile(const DistributionSpec& d, double p) {
    if (!(p > 0.0 && p < 1.0)) throw DomainError("quantile requires p in (0, 1), got " + std::to_string(p));
    const double target = d.cdf_a_ + p * d.mass_;
    double z;
    if (target <= 0.5)
        z = base::quantile(d.family(), target);
    else
        z = base::inverse_sf(d.family(), d.sf_b_ + (1.0 - p) * d.mass_);
    return d.from_standard(std::clamp(z, d.za_, d.zb_));
}

double inverse_sf(const DistributionSpec& d, double q) {
    if (!(q > 0.0 && q < 1.0)) throw DomainError("inverse_sf requires q in (0, 1), got " + std::to_string(q));
    const double target = d.sf_b_ + q * d.mass_;
    double z;
    if (target <= 0.5)
        z = base::inverse_sf(d.family(), target);
    else
        z = base::quantile(d.family(), d.cdf_a_ + (1.0 - q) * d.mass_);
    return d.from_standard(std::clamp(z, d.za_, d.zb_));
}

double median(const DistributionSpec& d) { return quantile(d, 0.5); }

Potential potential(const DistributionSpec& d, double x) {
    const Interval s = d.support();
    if (!(x > s.lo && x < s.hi)) throw DomainError("potential evaluated outside the open support");
    const double z = d.to_standard(x);
    const double sc = d.scale();
    Potential v{base_neg_log_pdf(d.family(), z) + std::log(sc * d.mass()), base_dV(d.family(), z) / sc, std::nullopt};
    if (auto s2 = base_d2V(d.family(), z)) v.second = *s2 / (sc * sc);
    return v;
}

IntervalMoments interval_moments(const DistributionSpec& d) {
    const Interval s = d.standard_support();
    const Family f = d.family();
    const double z_mass = d.mass();
    // Split at the mode (0 for every base law): it is the kink for the
    // piecewise families and keeps the infinite-range transform centred.
    const std::array<double, 1> breaks{0.0};
    double mean_z = 0.0;
    if (!(d.symmetric_family() && s.lo == -s.hi))
        mean_z = quad::integrate([&](double z) { return z * base::pdf(f, z); }, s.lo, s.hi, breaks).value / z_mass;
    const double var_z =
        quad::integrate([&](double z) { return (z - mean_z) * (z - mean_z) * base::pdf(f, z); }, s.lo, s.hi,
                        breaks)
            .value /
        z_mass;
    IntervalMoments m;
    m.mean = d.from_standard(mean_z);
    m.variance = std::max(0.0, var_z) * d.scale() * d.scale();
    return m;
}

std::pair<DistributionSpec, double> standardize(const DistributionSpec& d) {
    std::optional<Interval> t;
    if (d.truncation()) t = Interval{d.to_standard(d.truncation()->lo), d.to_standard(d.truncation()->hi)};
    return {DistributionSpec(d.family(), 0.0, 1.0, t), d.scale() * d.scale()};
}

}  // namespace dist
}  // namespace poincare
