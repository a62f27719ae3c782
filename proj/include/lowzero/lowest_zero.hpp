#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "chebyshev.hpp"
#include "numerics.hpp"
#include "rayleigh.hpp"
#include "symmetry.hpp"

namespace lowzero {

struct DegenerateError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------------------
// V(x) = tan(2 pi x)/(2 pi x)

inline double x1_compute() {
    static const double x1 = [] {
        constexpr double tp = 2.0 * std::numbers::pi;
        auto f = [](double x) { return std::sin(tp * x) - tp * x * std::cos(tp * x); };
        // sin - t cos has the sign of -(tan t - t) on (pi/2, 3pi/2)
        return bisect(f, 0.25 + 1e-9, 0.75 - 1e-9, 1e-15);
    }();
    return x1;
}

inline double v_func(double x) {
    if (!(x >= 0.0) || x == 0.25 || !(x < x1_compute()))
        throw DomainError("v_func: x must lie in [0, 1/4) or (1/4, x1)");
    if (x == 0.0) return 1.0;
    const double t = 2.0 * std::numbers::pi * x;
    return std::tan(t) / t;
}

inline double v_inverse(double y) {
    if (y == 1.0) return 0.0;
    constexpr double tp = 2.0 * std::numbers::pi;
    // sign-equivalent to V(x) - y without the pole at 1/4
    auto g = [y](double x) { return std::sin(tp * x) - y * tp * x * std::cos(tp * x); };
    if (y > 1.0) return bisect(g, 1e-300, 0.25, 1e-15);
    if (!std::isfinite(y)) throw DomainError("v_inverse: y must be finite");
    return bisect(g, 0.25, x1_compute(), 1e-15);
}

// ---------------------------------------------------------------------------

enum class Branch { unitary_exact, v_branch, equation_branch };

inline std::string to_string(Branch b) {
    switch (b) {
    case Branch::unitary_exact: return "unitary_exact";
    case Branch::v_branch: return "v_branch";
    case Branch::equation_branch: return "equation_branch";
    }
    return "?";
}

struct BoundResult {
    double lambda = std::numeric_limits<double>::quiet_NaN();
    double m_tilde = 0.0;
    double bound = 0.0; // sqrt(m_tilde)
    Branch branch = Branch::unitary_exact;
    double R = 0.0;     // support actually used (after a possible nudge)
    bool nudged = false;
    bool sp_hypothesis_flag = false;
};

inline BoundResult m_small_support(Symmetry g, double R) {
    if (g == Symmetry::U) throw DomainError("m_small_support: not defined for U");
    if (!(R > 0.0)) throw DomainError("m_small_support: R must be positive");
    if (g != Symmetry::O && R > 0.5)
        throw DomainError("m_small_support: Sp/SO+/SO- need R <= 1/2 (use the equation branch)");
    const auto kp = kernel_params(g);
    const double sqrt_m = 4.0 * v_inverse(1.0 + kp.weight() / R);
    BoundResult res;
    res.bound = sqrt_m / (4.0 * R);
    res.m_tilde = res.bound * res.bound;
    res.lambda = 2.0 * std::numbers::pi * res.bound;
    res.branch = Branch::v_branch;
    res.R = R;
    return res;
}

// ---------------------------------------------------------------------------
// Equation branch

struct EquationContext {
    Symmetry g;
    int delta;
    double eps;
    double R;
    int n;
    std::vector<double> a; // a[1..n]; a[0] unused
    Eigen::MatrixXd m_matrix;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu;
    std::vector<double> alpha;
    std::vector<double> beta_arr;
    double det;

    int first_block() const { return n / 2; }
    int second_block() const { return (n + 1) / 2; }
    // roots of U_n U_{n-1} in (0, inf)
    std::vector<double> excluded() const {
        std::vector<double> p;
        for (int j = 1; j <= n; ++j) p.push_back(u_root(n, j));
        for (int j = 1; j <= n - 1; ++j) p.push_back(u_root(n - 1, j));
        std::erase_if(p, [](double x) { return x <= 1e-15; });
        std::sort(p.begin(), p.end());
        return p;
    }
};

namespace detail {

inline double sin_over(double c, double t) {
    return std::abs(t) < 1e-14 ? c : std::sin(c * t) / t;
}

inline double half_pi_sin(double x) {
    return std::sin(0.5 * std::numbers::pi * x);
}

} // namespace detail

inline EquationContext build_equation_context(Symmetry g, double R) {
    const auto kp = kernel_params(g);
    if (kp.delta == 0) throw DomainError("build_equation_context: needs Sp, SO+ or SO-");
    if (!(R > 0.5)) throw DomainError("build_equation_context: R must exceed 1/2");
    if (std::abs(2.0 * R - std::round(2.0 * R)) < 1e-9)
        throw DomainError("build_equation_context: 2R must not be an integer");
    constexpr double pi = std::numbers::pi;

    EquationContext c{g, kp.delta, kp.eps(), R, static_cast<int>(std::floor(2.0 * R)) + 1, {}, {}, {}, {}, {}, 0.0};
    const int n = c.n;
    const double d = c.delta;
    c.a.assign(n + 1, 0.0);
    for (int i = 0; n - 2 * i >= 1; ++i) c.a[n - 2 * i] = R - i;
    for (int i = 0; n - 2 * i - 1 >= 1; ++i) c.a[n - 2 * i - 1] = n - 1 - R - i;
    const double an1 = c.a[n - 1];

    const int h = c.first_block(), hp = c.second_block();
    Eigen::MatrixXd M(n, n);
    Eigen::VectorXd va(n), vb(n);
    for (int j = 1; j <= h; ++j) {
        const double t = u_root(n - 1, j);
        const auto u = u_table(n, t);
        for (int k = 0; k < n; ++k)
            M(k, j - 1) = u[k] * std::sin((an1 - (n - 2) / 2.0) * t - pi / 2.0 * (j + d * (n - 2 * k - 2) / 2.0));
        const double base = 2.0 * detail::sin_over(R - n / 2.0, t);
        va(j - 1) = base * detail::half_pi_sin(j + d * (n - 2) / 2.0);
        double s = 0.0;
        for (int l = 0; l <= n - 2; ++l) s += u[l] * detail::half_pi_sin(j + d * (n - 2 * l - 2) / 2.0);
        vb(j - 1) = base * s;
    }
    for (int j = 1; j <= hp; ++j) {
        const double t = u_root(n, j);
        const auto u = u_table(n, t);
        for (int k = 0; k < n; ++k)
            M(k, h + j - 1) = u[k] * std::sin((an1 - (n - 1) / 2.0) * t - pi / 2.0 * (j + d * (n - 2 * k - 1) / 2.0));
        const double base = 2.0 * detail::sin_over(R - (n - 1) / 2.0, t);
        va(h + j - 1) = base * detail::half_pi_sin(j + d * (n - 1) / 2.0);
        double s = 0.0;
        for (int l = 0; l <= n - 1; ++l) s += u[l] * detail::half_pi_sin(j + d * (n - 2 * l - 1) / 2.0);
        vb(h + j - 1) = base * s;
    }

    c.det = M.determinant();
    double scale = 1.0;
    for (int j = 0; j < n; ++j) scale *= M.col(j).norm();
    if (!(std::abs(c.det) > 1e-10 * scale)) {
        std::ostringstream os;
        os << "degenerate R = " << R << ": det M_R = " << c.det << "; perturb R slightly";
        throw DegenerateError(os.str());
    }
    c.m_matrix = M;
    c.lu = Eigen::PartialPivLU<Eigen::MatrixXd>(M);
    const Eigen::MatrixXd Mt = M.transpose();
    Eigen::PartialPivLU<Eigen::MatrixXd> lut(Mt);
    const Eigen::VectorXd alpha = lut.solve(va), beta = lut.solve(vb);
    c.alpha.assign(alpha.data(), alpha.data() + n);
    c.beta_arr.assign(beta.data(), beta.data() + n);
    return c;
}

// U_n(lambda) U_{n-1}(lambda) z_lambda
inline std::complex<double> z_tilde(const EquationContext& c, double lambda, double w = 1.0) {
    using namespace std::complex_literals;
    const auto u = u_table(c.n, lambda);
    const std::complex<double> q = 1i * double(c.delta) * std::exp(1i * lambda);
    std::complex<double> s = 0.0, qk = 1.0;
    for (int k = 0; k < c.n; ++k) {
        s += qk * u[k];
        qk *= q;
    }
    return -2.0i * w * std::exp(-1i * lambda * c.a[c.n - 1]) * s;
}

inline std::complex<double> z_lambda(const EquationContext& c, double lambda, double w = 1.0) {
    if (!(lambda > 0.0)) throw DomainError("z_lambda: lambda must be positive");
    for (double p : c.excluded())
        if (std::abs(lambda - p) < 1e-9) throw DomainError("z_lambda: lambda is a root of U_n U_{n-1}");
    return z_tilde(c, lambda, w) / (u_eval(c.n, lambda) * u_eval(c.n - 1, lambda));
}

// final equation multiplied through by r_lambda U_n U_{n-1}
inline double equation_lhs(const EquationContext& c, double lambda, double w = 1.0) {
    using namespace std::complex_literals;
    const std::complex<double> Z = z_tilde(c, lambda, w);
    const auto u = u_table(c.n, lambda);
    const double d = c.delta, e = c.eps;
    double val = d / lambda * Z.real();
    const std::complex<double> step = std::exp(-1i * d * std::numbers::pi / 2.0);
    std::complex<double> rot = Z;
    for (int k = 0; k < c.n; ++k) {
        val += -u[k] * rot.imag() * (d * c.alpha[k] / 2.0 - 1.0 + e * c.beta_arr[k]) +
               2.0 * e / lambda * u[k] * rot.real();
        rot *= step;
    }
    return val;
}

// Simplified relation for n = 2.
inline double equation_lhs_n2(Symmetry g, double R, double lambda) {
    const auto kp = kernel_params(g);
    if (kp.delta == 0) throw DomainError("equation_lhs_n2: needs Sp, SO+ or SO-");
    if (!(R > 0.5 && R < 1.0)) throw DomainError("equation_lhs_n2: needs 1/2 < R < 1");
    const double d = kp.delta, e = kp.eps(), w = kp.weight();
    const double theta = 0.5 * (R - 0.5) + std::numbers::pi / 2.0 * (1.0 + d / 2.0);
    const double A = std::sin(lambda * (1.0 - R)) - 2.0 * d * lambda * std::cos(lambda * R);
    const double B = std::cos(lambda * (1.0 - R)) - 2.0 * d * lambda * std::sin(lambda * R);
    return w * ((1.0 - 4.0 * lambda * lambda) / lambda) * A -
           (w * (1.0 - R) - 1.0 + 4.0 * e) * (B - 2.0 * lambda * std::tan(theta) * A);
}

struct ScanOptions {
    double step = 1e-3;
    double lambda_max = 0.0; // 0: derived from the first-mode bound
    double tol = 1e-11;
    double exclusion = 1e-6;
    double w = 1.0;
};

inline double default_lambda_max(const EquationContext& c) {
    const double mR = first_mode_upper(c.g, c.R);
    return 4.0 * 2.0 * std::numbers::pi * std::sqrt(mR / (16.0 * c.R * c.R));
}

// Roots of a scalar function on (lo, hi], scanned on a grid and refined by bisection,
// with the interval split at the excluded points.
template <class F>
std::vector<double> scan_roots(F&& f, double lo, double hi, const std::vector<double>& excluded,
                               const ScanOptions& opt, bool stop_at_first) {
    std::vector<double> cuts;
    for (double p : excluded)
        if (p > lo && p < hi) cuts.push_back(p);
    std::vector<std::pair<double, double>> segments;
    double s = lo;
    for (double p : cuts) {
        segments.emplace_back(s, p - opt.exclusion);
        s = p + opt.exclusion;
    }
    segments.emplace_back(s, hi);

    auto near_excluded = [&](double x) {
        for (double p : excluded)
            if (std::abs(x - p) <= opt.exclusion) return true;
        return false;
    };
    std::vector<double> out;
    for (auto [a, b] : segments) {
        if (b <= a) continue;
        const int steps = std::max(1, static_cast<int>(std::ceil((b - a) / opt.step)));
        double x0 = a, f0 = f(a);
        for (int i = 1; i <= steps; ++i) {
            const double x1 = i == steps ? b : a + i * opt.step;
            const double f1 = f(x1);
            if (f0 == 0.0 || (f0 > 0) != (f1 > 0)) {
                const double r = f0 == 0.0 ? x0 : bisect(f, x0, x1, opt.tol);
                if (!near_excluded(r)) {
                    out.push_back(r);
                    if (stop_at_first) return out;
                }
            }
            x0 = x1;
            f0 = f1;
        }
    }
    return out;
}

inline std::vector<double> equation_roots(const EquationContext& c, ScanOptions opt = {}) {
    if (opt.lambda_max <= 0.0) opt.lambda_max = default_lambda_max(c);
    return scan_roots([&](double l) { return equation_lhs(c, l, opt.w); }, opt.step, opt.lambda_max,
                      c.excluded(), opt, false);
}

inline double smallest_root(const EquationContext& c, ScanOptions opt = {}) {
    if (opt.lambda_max <= 0.0) opt.lambda_max = default_lambda_max(c);
    auto f = [&](double l) { return equation_lhs(c, l, opt.w); };
    const auto r = scan_roots(f, opt.step, opt.lambda_max, c.excluded(), opt, true);
    if (r.empty()) {
        double fmin = std::numeric_limits<double>::infinity(), fmax = -fmin;
        for (double l = opt.step; l <= opt.lambda_max; l += opt.step) {
            const double v = f(l);
            fmin = std::min(fmin, v);
            fmax = std::max(fmax, v);
        }
        std::ostringstream os;
        os << "smallest_root: no admissible root in (0, " << opt.lambda_max << "] for " << to_string(c.g)
           << " at R = " << c.R << "; F ranges over [" << fmin << ", " << fmax << "]";
        throw NoRootError(os.str());
    }
    return r.front();
}

inline bool sp_hypothesis_suspect(Symmetry g, double R, double lambda) {
    if (g != Symmetry::Sp || !(R > 0.5)) return false;
    const double sqrt_m = 2.0 * R * lambda / std::numbers::pi;
    const double odd = 2.0 * std::round((sqrt_m - 1.0) / 2.0) + 1.0;
    return std::abs(sqrt_m - odd) < 1e-4;
}

inline BoundResult equation_branch(Symmetry g, double R) {
    auto run = [g](double r) {
        const auto c = build_equation_context(g, r);
        BoundResult res;
        res.lambda = smallest_root(c);
        res.bound = res.lambda / (2.0 * std::numbers::pi);
        res.m_tilde = res.bound * res.bound;
        res.branch = Branch::equation_branch;
        res.R = r;
        res.sp_hypothesis_flag = sp_hypothesis_suspect(g, r, res.lambda);
        return res;
    };
    try {
        return run(R);
    } catch (const DegenerateError&) {
        for (double shift : {1e-6, -1e-6}) {
            try {
                auto res = run(R + shift);
                res.nudged = true;
                return res;
            } catch (const DegenerateError&) {
            }
        }
        throw;
    }
}

inline BoundResult m_tilde(Symmetry g, double R) {
    if (!(R > 0.0)) throw DomainError("m_tilde: R must be positive");
    if (g == Symmetry::U) {
        BoundResult res;
        res.m_tilde = 1.0 / (16.0 * R * R);
        res.bound = 1.0 / (4.0 * R);
        res.lambda = std::numbers::pi / (2.0 * R);
        res.branch = Branch::unitary_exact;
        res.R = R;
        return res;
    }
    if (g == Symmetry::O || R <= 0.5) return m_small_support(g, R);
    return equation_branch(g, R);
}

} // namespace lowzero
