#include <gtest/gtest.h>

#include <boost/math/special_functions/bessel.hpp>
#include <boost/math/special_functions/hypergeometric_1F1.hpp>
#include <cmath>
#include <numbers>
#include <random>

#include "poincare/errors.hpp"
#include "poincare/specfun.hpp"

using namespace poincare;
using namespace poincare::specfun;

TEST(Kummer, Examples) {
    EXPECT_EQ(kummer_m(0.3, 1.5, 0.0), 1.0);
    EXPECT_EQ(kummer_m(-2.0, 0.5, 0.0), 1.0);
    EXPECT_NEAR(kummer_m(0.5, 0.5, 1.0), std::exp(1.0), 1e-15);
    EXPECT_NEAR(kummer_m(-1.0, 0.5, 0.5), 0.0, 1e-16);
}

TEST(Kummer, RejectsInvalidArguments) {
    EXPECT_THROW(kummer_m(1.0, -1.0, 1.0), ArgumentError);
    EXPECT_THROW(kummer_m(1.0, 0.0, 1.0), ArgumentError);
    EXPECT_THROW(kummer_m(1.0, 0.5, -0.1), ArgumentError);
}

TEST(Kummer, MatchesBoostOracle) {
    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> a(-6.0, 6.0), z(0.0, 12.0);
    for (int k = 0; k < 200; ++k) {
        const double a1 = a(rng), zz = z(rng);
        for (double b1 : {0.5, 1.5}) {
            const double ref = boost::math::hypergeometric_1F1(a1, b1, zz);
            const double got = kummer_m(a1, b1, zz);
            EXPECT_NEAR(got, ref, 1e-10 * std::max(1.0, std::fabs(ref))) << a1 << " " << b1 << " " << zz;
        }
    }
}

TEST(Kummer, DerivativeIsShiftedFunction) {
    const double h = 1e-5;
    for (double z : {0.3, 2.0, 7.5}) {
        const auto v = kummer_m_with_derivative(-1.3, 0.5, z);
        const double fd = (kummer_m(-1.3, 0.5, z + h) - kummer_m(-1.3, 0.5, z - h)) / (2.0 * h);
        EXPECT_NEAR(v.dz, fd, 1e-7 * std::max(1.0, std::fabs(fd)));
    }
}

TEST(Kummer, HermiteBridge) {
    // For lambda = 2k + 1, M((1 - lambda)/2, 1/2, t^2/2) is proportional to He_{2k}.
    std::mt19937_64 rng(5);
    std::uniform_real_distribution<double> t(0.05, 4.0);
    for (int k = 1; k <= 6; ++k) {
        const double lambda = 2.0 * k + 1.0;
        double ratio0 = 0.0;
        for (int j = 0; j < 20; ++j) {
            double x = t(rng);
            if (std::fabs(hermite_eval(2 * k, x)) < 1e-3) x += 0.01;
            const double ratio = kummer_m(0.5 * (1.0 - lambda), 0.5, 0.5 * x * x) / hermite_eval(2 * k, x);
            if (j == 0)
                ratio0 = ratio;
            else
                EXPECT_NEAR(ratio / ratio0, 1.0, 1e-10) << k;
        }
    }
}

TEST(Bessel, Examples) {
    EXPECT_EQ(bessel_j0(0.0), 1.0);
    const double r1 = bessel_j0_first_zero();
    EXPECT_NEAR(r1, 2.4048256, 1e-7);
    EXPECT_NEAR(r1, boost::math::cyl_bessel_j_zero(0.0, 1), 1e-12);
    EXPECT_NEAR(bessel_j0(r1), 0.0, 1e-12);
    EXPECT_NEAR(1.0 / (r1 * r1), 0.1729, 1e-4);
}

TEST(Bessel, MatchesBoostOracle) {
    for (double x = 0.0; x <= 10.0; x += 0.0625) {
        EXPECT_NEAR(bessel_j0(x), boost::math::cyl_bessel_j(0, x), 1e-12) << x;
        EXPECT_NEAR(bessel_j1(x), boost::math::cyl_bessel_j(1, x), 1e-12) << x;
    }
    EXPECT_THROW(bessel_j0(13.0), ArgumentError);
}

TEST(Hermite, Examples) {
    for (double x : {-2.0, -0.3, 0.0, 1.7}) EXPECT_NEAR(hermite_eval(2, x), x * x - 1.0, 1e-14);
    const auto z2 = hermite_zeros(2);
    ASSERT_EQ(z2.size(), 2u);
    EXPECT_NEAR(z2[0], -1.0, 1e-14);
    EXPECT_NEAR(z2[1], 1.0, 1e-14);
    const auto z3 = hermite_zeros(3);
    ASSERT_EQ(z3.size(), 3u);
    EXPECT_NEAR(z3[0], -std::sqrt(3.0), 1e-14);
    EXPECT_NEAR(z3[1], 0.0, 1e-14);
    EXPECT_NEAR(z3[2], std::sqrt(3.0), 1e-14);
    EXPECT_THROW(hermite_eval(101, 0.5), ArgumentError);
    EXPECT_THROW(hermite_eval(-1, 0.5), ArgumentError);
    EXPECT_THROW(hermite_zeros(0), ArgumentError);
}

TEST(Hermite, ZerosAreSimpleRootsAndInterlace) {
    std::vector<double> prev = hermite_zeros(1);
    for (int n = 2; n <= 50; ++n) {
        const auto z = hermite_zeros(n);
        ASSERT_EQ(z.size(), static_cast<std::size_t>(n));
        for (std::size_t i = 0; i < z.size(); ++i) {
            const double d = 1e-12 * std::max(1.0, std::fabs(z[i]));
            EXPECT_LE(hermite_eval(n, z[i] - d) * hermite_eval(n, z[i] + d), 0.0) << n << " " << i;
            if (i > 0) EXPECT_LT(z[i - 1], z[i]);
        }
        for (std::size_t i = 0; i < prev.size(); ++i) {
            EXPECT_LT(z[i], prev[i]);
            EXPECT_LT(prev[i], z[i + 1]);
        }
        prev = z;
    }
}

TEST(FirstZero, Examples) {
    const auto sin_fn = [](double x) { return std::sin(x); };
    EXPECT_NEAR(first_zero(sin_fn, 0.1, 7.0, 0.05), std::numbers::pi, 1e-12);

    const auto g = [](double w) { return 2.0 / std::tan(w) + 1.0 / w; };
    const double root = first_zero(g, 1e-6, std::numbers::pi - 1e-9, 1e-3);
    // Bisection oracle: g decreases from +inf to -inf on (0, pi).
    double lo = 1.0, hi = 3.14;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        (g(mid) > 0.0 ? lo : hi) = mid;
    }
    EXPECT_NEAR(root, 0.5 * (lo + hi), 1e-11);
    EXPECT_GT(root, std::numbers::pi / 2.0);

    const auto h0 = [](double lam, double t) { return kummer_m(0.5 * (1.0 - lam), 0.5, 0.5 * t * t); };
    const auto h1 = [](double lam, double t) { return kummer_m(0.5 * (2.0 - lam), 1.5, 0.5 * t * t); };
    const double a = -1.0, b = 1.0;
    const auto det = [&](double lam) { return b * h0(lam, a) * h1(lam, b) - a * h0(lam, b) * h1(lam, a); };
    EXPECT_NEAR(first_zero(det, 1e-6, 20.0, 0.01), 3.0, 1e-11);
}

TEST(FirstZero, SkipsPolesAndReportsMissingRoots) {
    // tan changes sign across its pole at pi/2 without a root there.
    const auto t = [](double x) { return std::tan(x); };
    EXPECT_NEAR(first_zero(t, 0.5, 3.5, 0.01), std::numbers::pi, 1e-12);
    EXPECT_THROW(first_zero([](double x) { return 1.0 + x * x; }, -1.0, 1.0, 0.1), NoRootError);
    EXPECT_THROW(brent([](double x) { return x; }, RootBracket{1.0, 2.0, 1.0, 2.0}), NoRootError);
}

TEST(FirstZero, Deterministic) {
    const auto f = [](double x) { return std::cos(3.0 * x) - 0.2 * x; };
    const double a = first_zero(f, 0.0, 5.0);
    const double b = first_zero(f, 0.0, 5.0);
    EXPECT_EQ(a, b);
}
