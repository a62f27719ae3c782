#include <gtest/gtest.h>

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <lowzero/chebyshev.hpp>

using namespace lowzero;

TEST(Chebyshev, SmallValues) {
    EXPECT_NEAR(u_eval(2, 0.5), 0.0, 1e-15);
    EXPECT_EQ(u_eval(3, 1.0), 4.0);
    EXPECT_EQ(u_eval(-1, 0.3), 0.0);
    EXPECT_EQ(t_eval(0, 0.7), 1.0);
    EXPECT_EQ(t_eval(2, 0.0), -1.0);
    for (int n = 0; n <= 10; ++n) EXPECT_EQ(u_eval(n, 1.0), n + 1.0);
}

TEST(Chebyshev, MatchesTrigForm) {
    for (int n = 0; n <= 20; ++n) {
        for (double x : {-0.95, -0.4, 0.0, 0.3, 0.77}) {
            const double th = std::acos(x);
            const double u = std::sin((n + 1) * th) / std::sin(th);
            EXPECT_NEAR(u_eval(n, x), u, 1e-12 * std::max(1.0, std::abs(u))) << n << " " << x;
            EXPECT_NEAR(t_eval(n, x), std::cos(n * th), 1e-12) << n << " " << x;
        }
    }
    EXPECT_NEAR(u_eval(5, 0.3), std::sin(6 * std::acos(0.3)) / std::sin(std::acos(0.3)), 1e-12);
    EXPECT_NEAR(t_eval(4, 0.2), std::cos(4 * std::acos(0.2)), 1e-12);
}

TEST(Chebyshev, OutsideUnitIntervalUsesHyperbolicForm) {
    for (int n = 0; n <= 12; ++n) {
        const double x = 1.7, t = std::acosh(x);
        const double u = std::sinh((n + 1) * t) / std::sinh(t);
        EXPECT_NEAR(u_eval(n, x), u, 1e-11 * u);
    }
}

TEST(Chebyshev, Roots) {
    ASSERT_EQ(u_roots(1).size(), 1u);
    EXPECT_NEAR(u_roots(1)[0], 0.0, 1e-16);
    const auto r2 = u_roots(2);
    EXPECT_NEAR(r2[0], 0.5, 1e-15);
    EXPECT_NEAR(r2[1], -0.5, 1e-15);
    const auto r4 = u_roots(4);
    for (int k = 0; k < 4; ++k) {
        EXPECT_NEAR(r4[k], std::cos((k + 1) * std::numbers::pi / 5.0), 1e-15);
        EXPECT_NEAR(u_eval(4, r4[k]), 0.0, 1e-12);
    }
    for (int n = 1; n <= 15; ++n) {
        const auto r = u_roots(n);
        for (std::size_t k = 1; k < r.size(); ++k) EXPECT_LT(r[k], r[k - 1]);
    }
}

TEST(Chebyshev, TruncatedGeometric) {
    EXPECT_EQ(truncated_geometric(1, 0.3, {2.0, 1.0}), std::complex<double>(1.0));
    EXPECT_NEAR(std::abs(truncated_geometric(3, 0.5, 1.0) - 2.0), 0.0, 1e-15);
    const std::complex<double> z(0.0, 1.0);
    const int n = 4;
    const double x = 0.2;
    const auto closed = (1.0 - std::pow(z, n) * u_eval(n, x) + std::pow(z, n + 1) * u_eval(n - 1, x)) /
                        (1.0 - 2.0 * z * x + z * z);
    EXPECT_NEAR(std::abs(truncated_geometric(n, x, z) - closed), 0.0, 1e-12);
}

TEST(Chebyshev, LeadingCoefficient) {
    // U_{2k}(x)/x^{2k} -> 2^{2k}
    for (int k = 0; k <= 6; ++k) {
        const double x = 1e4;
        EXPECT_NEAR(u_eval(2 * k, x) / std::pow(x, 2 * k), std::pow(2.0, 2 * k), 1e-6 * std::pow(2.0, 2 * k));
    }
}

TEST(Chebyshev, ValueAtRootsOfNext) {
    for (int n = 1; n <= 12; ++n)
        for (int j = 1; j <= n; ++j)
            EXPECT_NEAR(u_eval(n - 1, u_root(n, j)), (j % 2 == 1 ? 1.0 : -1.0), 1e-12) << n << " " << j;
}

TEST(Chebyshev, ProductIdentitySweep) {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> X(-2.0, 2.0);
    for (int n = 2; n <= 12; ++n) {
        for (int j = 1; j <= n - 1; ++j) {
            for (int s = 0; s < 200; ++s) {
                const double x = X(rng);
                const double lhs = u_eval(n - 1, x) * u_eval(j, x) - u_eval(n, x) * u_eval(j - 1, x);
                const double rhs = u_eval(n - 1 - j, x);
                const double scale = std::max({1.0, std::abs(u_eval(n - 1, x) * u_eval(j, x)), std::abs(rhs)});
                ASSERT_NEAR(lhs, rhs, 1e-10 * scale) << n << " " << j << " " << x;
            }
        }
    }
}

TEST(Chebyshev, TruncatedGeometricSweep) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> X(-2.0, 2.0), Z(-1.5, 1.5);
    int checked = 0;
    for (int s = 0; s < 2000; ++s) {
        const int n = 1 + s % 12;
        const double x = X(rng);
        const std::complex<double> z(Z(rng), Z(rng));
        const auto den = 1.0 - 2.0 * z * x + z * z;
        if (std::abs(den) <= 1e-9) continue;
        const auto closed = (1.0 - std::pow(z, n) * u_eval(n, x) + std::pow(z, n + 1) * u_eval(n - 1, x)) / den;
        const auto direct = truncated_geometric(n, x, z);
        ASSERT_LE(std::abs(closed - direct), 1e-10 * std::max(1.0, std::abs(direct)) / std::min(1.0, std::abs(den)));
        ++checked;
    }
    EXPECT_GT(checked, 1900);
}
