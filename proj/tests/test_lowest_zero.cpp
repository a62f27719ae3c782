#include <gtest/gtest.h>

#include <chrono>
#include <cmath>
#include <complex>
#include <numbers>

#include <lowzero/lowest_zero.hpp>
#include <lowzero/verify.hpp>

using namespace lowzero;
using std::numbers::pi;
using namespace std::complex_literals;

namespace {

double tan_minus(double x) { return std::tan(2 * pi * x) - 2 * pi * x; }

double oracle_sqrt_mtilde(Symmetry g, double R, int N = 400) {
    return std::sqrt(minimize(g, R, N) / (16 * R * R));
}

} // namespace

TEST(VFunction, Values) {
    EXPECT_EQ(v_func(0.0), 1.0);
    EXPECT_NEAR(v_func(0.5), 0.0, 1e-15);
    EXPECT_NEAR(v_func(0.2), std::tan(0.4 * pi) / (0.4 * pi), 1e-14);
    EXPECT_NEAR(v_func(0.2), 2.449, 1e-3);
    EXPECT_THROW(v_func(0.25), DomainError);
    EXPECT_THROW(v_func(-0.1), DomainError);
    EXPECT_THROW(v_func(0.8), DomainError);
}

TEST(VFunction, X1) {
    const double x1 = x1_compute();
    EXPECT_EQ(std::trunc(x1 * 100) / 100, 0.71);
    EXPECT_NEAR(tan_minus(x1), 0.0, 1e-9);
    EXPECT_LT(v_func(x1 - 1e-9), 1.0);
    EXPECT_GT(x1, 0.25);
}

TEST(VFunction, Inverse) {
    EXPECT_EQ(v_inverse(1.0), 0.0);
    const double v2 = v_inverse(2.0);
    EXPECT_NEAR(std::tan(2 * pi * v2), 4 * pi * v2, 1e-10);
    EXPECT_LT(v2, 0.19);
    EXPECT_GT(v2, 0.18);
    EXPECT_NEAR(v_inverse(0.0), 0.5, 1e-12);
    for (double y : {-10.0, -3.0, -0.5, 0.3, 0.99, 1.01, 1.5, 4.0, 100.0}) {
        const double x = v_inverse(y);
        EXPECT_NEAR(v_func(x), y, 1e-9 * std::max(1.0, std::abs(y))) << y;
        if (y > 1) EXPECT_LT(x, 0.25);
        if (y < 1) EXPECT_GT(x, 0.25);
    }
}

TEST(VFunction, IncreasingOnBranches) {
    double prev = 0.0;
    for (int i = 1; i < 100; ++i) {
        const double x = 0.249 * i / 100.0;
        EXPECT_GT(v_func(x), i == 1 ? 1.0 : prev);
        prev = v_func(x);
    }
    prev = -1e300;
    for (int i = 1; i < 100; ++i) {
        const double x = 0.251 + (x1_compute() - 0.252) * i / 100.0;
        EXPECT_GT(v_func(x), prev);
        EXPECT_LT(v_func(x), 1.0);
        prev = v_func(x);
    }
}

TEST(SmallSupport, OrthogonalAtOne) {
    const auto r = m_small_support(Symmetry::O, 1.0);
    EXPECT_EQ(r.branch, Branch::v_branch);
    EXPECT_NEAR(r.bound, v_inverse(2.0), 1e-15);
    EXPECT_LT(r.bound, 0.19);
}

TEST(SmallSupport, SymplecticUpperBranch) {
    const double R = 0.25;
    const auto r = m_small_support(Symmetry::Sp, R);
    const double sqrt_m = 4 * R * r.bound;
    EXPECT_NEAR(sqrt_m, 4 * v_inverse(-3.0), 1e-14);
    EXPECT_GT(sqrt_m / 4, 0.25);
    EXPECT_GT(sqrt_m * sqrt_m, 1.0);
    EXPECT_LT(sqrt_m * sqrt_m, 1.0 / (1.0 - 8 * R / (pi * pi)));
}

TEST(SmallSupport, SOplusAtHalf) {
    const auto r = m_small_support(Symmetry::SOplus, 0.5);
    EXPECT_NEAR(4 * 0.5 * r.bound, 4 * v_inverse(3.0), 1e-14);
    EXPECT_NEAR(r.bound, oracle_sqrt_mtilde(Symmetry::SOplus, 0.5), 5e-3);
}

TEST(SmallSupport, Rejections) {
    EXPECT_THROW(m_small_support(Symmetry::Sp, 0.6), DomainError);
    EXPECT_THROW(m_small_support(Symmetry::U, 0.3), DomainError);
    EXPECT_NO_THROW(m_small_support(Symmetry::O, 1.7));
}

TEST(Context, TwoByTwo) {
    const double R = 0.75;
    const auto c = build_equation_context(Symmetry::SOplus, R);
    EXPECT_EQ(c.n, 2);
    EXPECT_NEAR(c.a[1], 0.25, 1e-15);
    EXPECT_NEAR(c.a[2], 0.75, 1e-15);
    const double d = 1;
    const double theta = 0.5 * (R - 0.5) + pi / 2 * (1 + d / 2);
    EXPECT_NEAR(c.det, -d * std::cos(theta), 1e-12);
    for (Symmetry g : {Symmetry::Sp, Symmetry::SOminus}) {
        const auto cs = build_equation_context(g, R);
        const double th = 0.5 * (R - 0.5) + pi / 2 * (1 - 0.5);
        EXPECT_NEAR(cs.det, std::cos(th), 1e-12);
    }
}

TEST(Context, ThreeByThree) {
    const auto c = build_equation_context(Symmetry::SOminus, 1.2);
    EXPECT_EQ(c.n, 3);
    EXPECT_NEAR(c.a[3], 1.2, 1e-15);
    EXPECT_NEAR(c.a[2], 0.8, 1e-15);
    EXPECT_NEAR(c.a[1], 0.2, 1e-15);
    EXPECT_TRUE(std::isfinite(c.det));
    EXPECT_GT(std::abs(c.det), 1e-3);
}

TEST(Context, PartitionGaps) {
    for (double R : {0.6, 0.8, 1.1, 1.45, 2.3, 2.7}) {
        const auto c = build_equation_context(Symmetry::Sp, R);
        EXPECT_EQ(c.n, int(std::floor(2 * R)) + 1);
        EXPECT_NEAR(c.a[c.n], R, 1e-15);
        EXPECT_NEAR(c.a[c.n - 1], c.n - 1 - R, 1e-14);
        const double g1 = 2 * R - (c.n - 1), g2 = c.n - 2 * R;
        for (int k = 1; k < c.n; ++k) {
            const double gap = c.a[k + 1] - c.a[k];
            EXPECT_TRUE(std::abs(gap - g1) < 1e-12 || std::abs(gap - g2) < 1e-12) << R << " " << k;
        }
    }
}

TEST(Context, MatrixEntries) {
    const double R = 1.3;
    const auto c = build_equation_context(Symmetry::Sp, R);
    const int n = c.n;
    const double d = c.delta;
    for (int k = 0; k < n; ++k) {
        for (int j = 1; j <= n / 2; ++j) {
            const double t = std::cos(j * pi / n);
            const double e = u_eval(k, t) * std::sin((c.a[n - 1] - (n - 2) / 2.0) * t - pi / 2 * (j + d * (n - 2 * k - 2) / 2.0));
            EXPECT_NEAR(c.m_matrix(k, j - 1), e, 1e-14);
        }
        for (int j = 1; j <= (n + 1) / 2; ++j) {
            const double t = std::cos(j * pi / (n + 1));
            const double e = u_eval(k, t) * std::sin((c.a[n - 1] - (n - 1) / 2.0) * t - pi / 2 * (j + d * (n - 2 * k - 1) / 2.0));
            EXPECT_NEAR(c.m_matrix(k, n / 2 + j - 1), e, 1e-14);
        }
    }
}

TEST(Context, Rejections) {
    EXPECT_THROW(build_equation_context(Symmetry::O, 0.8), DomainError);
    EXPECT_THROW(build_equation_context(Symmetry::Sp, 0.4), DomainError);
    EXPECT_THROW(build_equation_context(Symmetry::Sp, 1.0), DomainError);
    EXPECT_THROW(build_equation_context(Symmetry::Sp, 1.0 + 1e-10), DomainError);
}

TEST(ZLambda, NTwoDisplay) {
    const double R = 0.75, l = 0.3;
    const auto c = build_equation_context(Symmetry::Sp, R);
    const double d = -1;
    const auto expect = (-2i * std::exp(-1i * l * (1 - R)) / (u_eval(2, l) * u_eval(1, l))) *
                        (1.0 + 1i * d * u_eval(1, l) * std::exp(1i * l));
    EXPECT_NEAR(std::abs(z_lambda(c, l) - expect), 0.0, 1e-12 * std::abs(expect));
}

TEST(ZLambda, ExcludedAndLinear) {
    const auto c = build_equation_context(Symmetry::SOplus, 0.75);
    EXPECT_THROW(z_lambda(c, 0.5), DomainError);
    EXPECT_THROW(z_lambda(c, 0.5 + 1e-10), DomainError);
    const auto a = z_lambda(c, 1.3), b = z_lambda(c, 1.3, -1.0);
    EXPECT_EQ(b, -a);
    const double dth = std::remainder(std::arg(b) - std::arg(a), 2 * pi);
    EXPECT_NEAR(std::abs(dth), pi, 1e-12);
}

TEST(EquationLhs, SignFlipUnderW) {
    const auto c = build_equation_context(Symmetry::Sp, 1.25);
    for (double l : {0.2, 0.9, 1.7, 3.3}) EXPECT_EQ(equation_lhs(c, l, -1.0), -equation_lhs(c, l, 1.0));
}

TEST(EquationLhs, MatchesNTwoRelation) {
    // F = -2 G identically for n = 2
    for (Symmetry g : {Symmetry::Sp, Symmetry::SOplus, Symmetry::SOminus}) {
        for (double R : {0.6, 0.75, 0.9}) {
            const auto c = build_equation_context(g, R);
            for (double l : {0.3, 1.1, 2.7, 5.2}) {
                const double G = equation_lhs_n2(g, R, l);
                EXPECT_NEAR(equation_lhs(c, l), -2 * G, 1e-10 * std::max(1.0, std::abs(G)));
            }
        }
    }
}

TEST(EquationLhs, N2VanishesAtHalf) {
    for (Symmetry g : {Symmetry::Sp, Symmetry::SOplus, Symmetry::SOminus})
        for (double R : {0.6, 0.75, 0.9}) EXPECT_NEAR(equation_lhs_n2(g, R, 0.5), 0.0, 1e-14);
}

TEST(SmallestRoot, SignChangeAroundRoot) {
    const auto c = build_equation_context(Symmetry::SOplus, 0.75);
    const double r = smallest_root(c);
    EXPECT_LT(equation_lhs(c, r - 1e-3) * equation_lhs(c, r + 1e-3), 0.0);
}

TEST(SmallestRoot, WScaleBitIdentical) {
    for (Symmetry g : {Symmetry::Sp, Symmetry::SOplus, Symmetry::SOminus}) {
        const auto c = build_equation_context(g, 1.15);
        ScanOptions a, b;
        b.w = -1.0;
        EXPECT_EQ(smallest_root(c, a), smallest_root(c, b));
    }
}

TEST(SmallestRoot, AvoidsExcludedSet) {
    for (Symmetry g : {Symmetry::Sp, Symmetry::SOplus, Symmetry::SOminus}) {
        for (double R : {0.55, 0.7, 0.85, 1.1, 1.3, 1.45}) {
            const auto c = build_equation_context(g, R);
            const double r = smallest_root(c);
            for (double p : c.excluded()) EXPECT_GT(std::abs(r - p), 1e-6) << to_string(g) << " R=" << R;
        }
    }
}

TEST(SmallestRoot, NearOneInstances) {
    const double plus = smallest_root(build_equation_context(Symmetry::SOplus, 1 - 1e-5)) / (2 * pi);
    EXPECT_NEAR(plus, 0.22, 0.02);
    EXPECT_LE(plus, 0.22);
    const double sp = smallest_root(build_equation_context(Symmetry::Sp, 1 - 1e-5)) / (2 * pi);
    EXPECT_NEAR(sp, 0.39, 0.02);
    EXPECT_LE(sp, 0.39);
}

TEST(SmallestRoot, OracleAgreement) {
    for (Symmetry g : {Symmetry::Sp, Symmetry::SOplus, Symmetry::SOminus}) {
        for (double R : {0.55, 0.65, 0.8, 0.95, 1.05, 1.2, 1.35, 1.45}) {
            const double l = smallest_root(build_equation_context(g, R));
            EXPECT_NEAR(l, 2 * pi * oracle_sqrt_mtilde(g, R), 5e-3) << to_string(g) << " R=" << R;
        }
    }
}

TEST(SmallestRoot, CrossRouteNTwo) {
    for (Symmetry g : {Symmetry::Sp, Symmetry::SOplus, Symmetry::SOminus}) {
        for (double R : {0.6, 0.75}) {
            const auto c = build_equation_context(g, R);
            EXPECT_NEAR(smallest_root_n2(g, R, {}, default_lambda_max(c)), smallest_root(c), 1e-9);
        }
    }
}

TEST(MTilde, Dispatch) {
    const auto u = m_tilde(Symmetry::U, 0.3);
    EXPECT_EQ(u.branch, Branch::unitary_exact);
    EXPECT_NEAR(u.m_tilde, 1 / (16 * 0.09), 1e-15);
    EXPECT_NEAR(u.m_tilde, 0.6944, 1e-4);
    const auto o = m_tilde(Symmetry::O, 0.9);
    EXPECT_EQ(o.branch, Branch::v_branch);
    EXPECT_NEAR(o.bound, oracle_sqrt_mtilde(Symmetry::O, 0.9), 5e-3);
    const auto sp = m_tilde(Symmetry::Sp, 0.7);
    EXPECT_EQ(sp.branch, Branch::equation_branch);
    EXPECT_NEAR(sp.m_tilde, std::pow(sp.lambda / (2 * pi), 2), 1e-15);
    EXPECT_EQ(m_tilde(Symmetry::Sp, 0.4).branch, Branch::v_branch);
}

TEST(MTilde, ContinuityAcrossHalf) {
    for (Symmetry g : {Symmetry::Sp, Symmetry::SOplus, Symmetry::SOminus}) {
        EXPECT_NEAR(m_tilde(g, 0.499).bound, m_tilde(g, 0.501).bound, 1e-2) << to_string(g);
        double prev = std::numeric_limits<double>::infinity();
        for (double h : {0.05, 0.02, 0.01, 0.005}) {
            const double diff = std::abs(m_tilde(g, 0.5 - h).bound - m_tilde(g, 0.5 + h).bound);
            EXPECT_LT(diff, prev) << to_string(g) << " h=" << h;
            prev = diff;
        }
    }
}

TEST(MTilde, StrictlyDecreasing) {
    for (Symmetry g : {Symmetry::O, Symmetry::Sp, Symmetry::SOplus, Symmetry::SOminus}) {
        double prev = std::numeric_limits<double>::infinity();
        for (int i = 0; i < 20; ++i) {
            const double R = 0.11 + 0.83 * i / 19.0;
            const double m = m_tilde(g, R).m_tilde;
            EXPECT_LT(m, prev) << to_string(g) << " R=" << R;
            prev = m;
        }
    }
}

TEST(MTilde, NotFlaggedOffOddSquares) {
    EXPECT_FALSE(m_tilde(Symmetry::Sp, 0.8).sp_hypothesis_flag);
    EXPECT_TRUE(sp_hypothesis_suspect(Symmetry::Sp, 0.75, pi / (2 * 0.75)));
    EXPECT_FALSE(sp_hypothesis_suspect(Symmetry::SOplus, 0.75, pi / (2 * 0.75)));
}
