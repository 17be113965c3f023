#include <gtest/gtest.h>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/erf.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "poincare/dist.hpp"
#include "poincare/errors.hpp"

using namespace poincare;
using dist::Family;

namespace {

// Independent oracles.
double phi(double x) { return std::exp(-0.5 * x * x) / std::sqrt(2.0 * std::numbers::pi); }
double Phi(double x) { return 0.5 * boost::math::erfc(-x / std::numbers::sqrt2); }

double integrate(const std::function<double(double)>& f, double a, double b) {
    return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, 1e-13);
}

// Integral of f over the support, split at the location so kinks sit on a break.
double integrate_law(const DistributionSpec& d, const std::function<double(double)>& f) {
    const Interval s = d.support();
    const double c = std::clamp(d.location(), s.lo, s.hi);
    double total = 0.0;
    if (c > s.lo) total += integrate(f, s.lo, c);
    if (s.hi > c) total += integrate(f, c, s.hi);
    return total;
}

DistributionSpec random_spec(Family fam, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> loc(-5.0, 5.0), lsc(-1.0, 1.0), u(0.02, 0.45);
    const double location = loc(rng), scale = std::pow(10.0, lsc(rng));
    const DistributionSpec parent(fam, location, scale);
    const double pa = u(rng), pb = u(rng);
    switch (rng() % 4) {
        case 0: return parent;
        case 1: return parent.truncated({dist::quantile(parent, pa), dist::inverse_sf(parent, pb)});
        case 2: return parent.truncated({dist::quantile(parent, pa), kInf});
        default: return parent.truncated({-kInf, dist::inverse_sf(parent, pb)});
    }
}

}  // namespace

TEST(Dist, PdfExamples) {
    EXPECT_DOUBLE_EQ(dist::pdf(DistributionSpec(Family::triangular), 0.0), 1.0);
    EXPECT_NEAR(dist::pdf(DistributionSpec(Family::normal), 0.0), 0.3989423, 1e-7);
    const DistributionSpec t(Family::normal, 0.0, 1.0, Interval{-3.0, 3.0});
    const double Z = Phi(3.0) - Phi(-3.0);
    EXPECT_NEAR(Z, 0.9973002, 1e-7);
    EXPECT_NEAR(dist::pdf(t, 0.0), phi(0.0) / Z, 1e-14);
    EXPECT_EQ(dist::pdf(t, 3.5), 0.0);
    EXPECT_EQ(dist::pdf(DistributionSpec(Family::exponential), -1.0), 0.0);
}

TEST(Dist, PotentialExamples) {
    const auto n = dist::potential(DistributionSpec(Family::normal), 2.0);
    EXPECT_NEAR(n.first, 2.0, 1e-14);
    ASSERT_TRUE(n.second);
    EXPECT_NEAR(*n.second, 1.0, 1e-14);

    EXPECT_NEAR(dist::potential(DistributionSpec(Family::double_exponential), -1.5).first, -1.0, 1e-14);

    const DistributionSpec tri(Family::triangular);
    const double h = 1e-5;
    const double fd = (-std::log(1.0 - (0.5 + h)) + std::log(1.0 - (0.5 - h))) / (2.0 * h);
    EXPECT_NEAR(dist::potential(tri, 0.5).first, 2.0, 1e-14);
    EXPECT_NEAR(fd, 2.0, 1e-8);

    EXPECT_FALSE(dist::potential(tri, 0.0).second);
    EXPECT_FALSE(dist::potential(DistributionSpec(Family::double_exponential), 0.0).second);
    EXPECT_THROW(dist::potential(tri, 1.0), DomainError);
    EXPECT_THROW(dist::potential(tri, -2.0), DomainError);
}

TEST(Dist, PotentialIncludesTruncationOffset) {
    const DistributionSpec d(Family::normal, 1.0, 2.0, Interval{0.0, 4.0});
    for (double x : {0.1, 1.0, 2.5, 3.9}) EXPECT_NEAR(std::exp(-dist::potential(d, x).value), dist::pdf(d, x), 1e-14);
}

TEST(Dist, CdfAndQuantileExamples) {
    EXPECT_NEAR(dist::cdf(DistributionSpec(Family::gumbel), 0.0), std::exp(-1.0), 1e-15);
    EXPECT_NEAR(dist::cdf(DistributionSpec(Family::logistic), 0.0), 0.5, 1e-15);
    const DistributionSpec t(Family::normal, 0.0, 1.0, Interval{-3.0, 3.0});
    EXPECT_NEAR(dist::quantile(t, 0.5), 0.0, 1e-14);
    EXPECT_THROW(dist::quantile(t, 0.0), DomainError);
    EXPECT_THROW(dist::quantile(t, 1.0), DomainError);
    EXPECT_THROW(dist::quantile(t, -0.2), DomainError);
    EXPECT_NEAR(dist::cdf(DistributionSpec(Family::normal), 1.3), Phi(1.3), 1e-15);
}

TEST(Dist, NormalTailAccuracy) {
    for (double x : {-30.0, -12.0, -5.0, 0.3, 6.0, 20.0}) {
        const double ref = Phi(x);
        EXPECT_NEAR(dist::normal_cdf(x) / ref, 1.0, 1e-13) << x;
    }
    for (double p : {1e-300, 1e-20, 1e-8, 0.01, 0.3, 0.5, 0.77, 0.999999})
        EXPECT_NEAR(dist::normal_quantile(p), -std::numbers::sqrt2 * boost::math::erfc_inv(2.0 * p),
                    1e-12 * std::max(1.0, std::fabs(dist::normal_quantile(p))))
            << p;
}

TEST(Dist, IntervalMomentsExamples) {
    EXPECT_NEAR(dist::interval_moments(DistributionSpec(Family::triangular)).variance, 1.0 / 6.0, 1e-12);
    const auto n = dist::interval_moments(DistributionSpec(Family::normal));
    EXPECT_NEAR(n.variance, 1.0, 1e-10);
    EXPECT_EQ(n.mean, 0.0);

    const DistributionSpec t(Family::normal, 0.0, 1.0, Interval{-3.0, 3.0});
    const double Z = Phi(3.0) - Phi(-3.0);
    const auto m = dist::interval_moments(t);
    EXPECT_EQ(m.mean, 0.0);
    EXPECT_NEAR(m.variance, 1.0 - 2.0 * 3.0 * phi(3.0) / Z, 1e-10);
    const double quad = integrate([&](double x) { return x * x * phi(x) / Z; }, -3.0, 3.0);
    EXPECT_NEAR(m.variance, quad, 1e-8);
}

TEST(Dist, IntervalMomentsMatchQuadratureOracle) {
    std::mt19937_64 rng(7);
    for (Family fam : dist::all_families()) {
        for (int k = 0; k < 5; ++k) {
            const DistributionSpec d = random_spec(fam, rng);
            const auto m = dist::interval_moments(d);
            const double mean = integrate_law(d, [&](double x) { return x * dist::pdf(d, x); });
            const double second = integrate_law(d, [&](double x) { return (x - mean) * (x - mean) * dist::pdf(d, x); });
            const double scale2 = d.scale() * d.scale();
            EXPECT_NEAR(m.mean, mean, 1e-8 * std::max(1.0, d.scale() + std::fabs(mean)));
            EXPECT_NEAR(m.variance, second, 1e-8 * scale2) << dist::to_string(fam);
            EXPECT_GE(m.variance, 0.0);
        }
    }
}

TEST(Dist, StandardizeExamples) {
    {
        const auto [z, f] = dist::standardize(DistributionSpec(Family::normal, 0.0, 50.0, Interval{-150.0, 150.0}));
        EXPECT_EQ(f, 2500.0);
        EXPECT_EQ(z.location(), 0.0);
        EXPECT_EQ(z.scale(), 1.0);
        EXPECT_EQ(z.support(), (Interval{-3.0, 3.0}));
    }
    {
        const auto [z, f] = dist::standardize(DistributionSpec(Family::gumbel, 1013.0, 558.0, Interval{500.0, 3000.0}));
        EXPECT_EQ(f, 558.0 * 558.0);
        EXPECT_NEAR(z.support().lo, -0.919, 1e-3);
        EXPECT_NEAR(z.support().hi, 3.561, 1e-3);
        EXPECT_DOUBLE_EQ(z.support().lo, (500.0 - 1013.0) / 558.0);
    }
    {
        const DistributionSpec u = DistributionSpec::uniform_on(7.0, 9.0);
        EXPECT_EQ(u.location(), 8.0);
        EXPECT_EQ(u.scale(), 1.0);
        const auto [z, f] = dist::standardize(u);
        EXPECT_EQ(f, 1.0);
        EXPECT_EQ(z.support(), (Interval{-1.0, 1.0}));
    }
}

TEST(Dist, TruncationComposesByIntersection) {
    const DistributionSpec d(Family::normal, 0.0, 1.0, Interval{-2.0, 5.0});
    const DistributionSpec e = d.truncated({-3.0, 1.0});
    EXPECT_EQ(e.support(), (Interval{-2.0, 1.0}));
    EXPECT_THROW(d.truncated({6.0, 7.0}), ArgumentError);
    EXPECT_THROW(DistributionSpec(Family::normal, 0.0, -1.0), ArgumentError);
    EXPECT_THROW(DistributionSpec(Family::normal, 0.0, 1.0, Interval{1.0, 1.0}), ArgumentError);
    EXPECT_THROW(DistributionSpec(Family::uniform, 0.0, 1.0, Interval{2.0, 3.0}), ArgumentError);
}

TEST(Dist, FamilyNames) {
    for (Family f : dist::all_families()) EXPECT_EQ(dist::family_from_string(dist::to_string(f)), f);
    EXPECT_THROW(dist::family_from_string("lognormal"), ArgumentError);
}

TEST(Dist, RandomSpecsNormalizeAndInvert) {
    std::mt19937_64 rng(2024);
    for (Family fam : dist::all_families()) {
        for (int k = 0; k < 100; ++k) {
            const DistributionSpec d = random_spec(fam, rng);
            const double mass = integrate_law(d, [&](double x) { return dist::pdf(d, x); });
            ASSERT_NEAR(mass, 1.0, 1e-8) << dist::to_string(fam) << " draw " << k;

            double prev = -1.0;
            for (int j = 1; j < 40; ++j) {
                const double x = dist::quantile(d, j / 40.0);
                const double c = dist::cdf(d, x);
                ASSERT_GE(c, prev);
                prev = c;
                ASSERT_NEAR(dist::quantile(d, c), x, 1e-8 * std::max(d.scale(), std::fabs(x)));
            }
        }
    }
}

TEST(Dist, PotentialDerivativeMatchesFiniteDifferences) {
    std::mt19937_64 rng(99);
    for (Family fam : dist::all_families()) {
        const DistributionSpec d = random_spec(fam, rng);
        for (double p : {0.13, 0.37, 0.71, 0.9}) {
            const double x = dist::quantile(d, p);
            if (std::fabs(x - d.location()) < 1e-2 * d.scale()) continue;  // stay off kinks
            const auto v = dist::potential(d, x);
            double prev_err = 0.0;
            for (double h : {1e-3, 1e-4}) {
                const double hh = h * d.scale();
                const double fd = (dist::potential(d, x + hh).value - dist::potential(d, x - hh).value) / (2.0 * hh);
                const double err = std::fabs(fd - v.first);
                EXPECT_LT(err, 1e-4 * std::max(1.0, std::fabs(v.first))) << dist::to_string(fam);
                if (prev_err > 1e-9) EXPECT_LT(err, prev_err);  // shrinks with h
                prev_err = err;
            }
        }
    }
}
