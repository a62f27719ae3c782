#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Cholesky>
#include <Eigen/Dense>
#include <Eigen/Eigenvalues>

#include "symmetry.hpp"

namespace lowzero {

struct SolverError : std::runtime_error {
    double condition = 0.0;
    SolverError(const std::string& what, double cond) : std::runtime_error(what), condition(cond) {}
};

namespace detail {

inline int half_sign(int m, int n) {
    // (-1)^{(m+n)/2} for odd m, n
    return ((m + n) / 2) % 2 == 0 ? 1 : -1;
}

inline void check_mn(int m, int n, double R) {
    if (m < 1 || n < 1 || m % 2 == 0 || n % 2 == 0) throw DomainError("lambda_mn/mu_mn need odd m, n >= 1");
    if (!(R > 0.5)) throw DomainError("lambda_mn/mu_mn are only defined for R > 1/2");
}

} // namespace detail

inline double lambda_mn(int m, int n, double R) {
    detail::check_mn(m, n, R);
    constexpr double pi = std::numbers::pi;
    const double pi2 = pi * pi;
    const double w = pi / (2.0 * R);
    if (m == n) {
        const double nn = n;
        return 2.0 * R * (2.0 * R - 1.0) / (nn * pi) * std::sin(nn * w) -
               8.0 * R * R / (pi2 * nn * nn) * std::cos(nn * w) + 8.0 * R * R / (pi2 * nn * nn);
    }
    const double mm = m, nn = n;
    const double s = detail::half_sign(m, n);
    return 8.0 * R * R * mm * nn * s / (pi2 * (mm * mm - nn * nn)) *
               (std::cos(nn * w) / (nn * nn) - std::cos(mm * w) / (mm * mm)) -
           8.0 * R * R * s / (mm * nn * pi2);
}

inline double mu_mn(int m, int n, double R) {
    detail::check_mn(m, n, R);
    constexpr double pi = std::numbers::pi;
    const double w = pi / (2.0 * R);
    if (m == n) {
        const double nn = n;
        return -2.0 * R * (2.0 * R - 1.0) / (nn * pi) * std::sin(nn * w);
    }
    const double mm = m, nn = n;
    const double s = detail::half_sign(m, n);
    return 8.0 * R * R * s / (pi * pi * (mm * mm - nn * nn)) * (std::cos(mm * w) - std::cos(nn * w));
}

struct QuadraticForms {
    Eigen::MatrixXd numerator;
    Eigen::MatrixXd denominator;
    double R;
    Symmetry g;

    // B(c) = c^T A c / c^T B c
    double quotient(const Eigen::VectorXd& c) const {
        return c.dot(numerator * c) / c.dot(denominator * c);
    }
};

inline QuadraticForms assemble_forms(Symmetry g, double R, int N) {
    if (!(R > 0.0)) throw DomainError("assemble_forms: R must be positive");
    if (N < 1) throw DomainError("assemble_forms: N must be >= 1");
    constexpr double pi = std::numbers::pi;
    const auto kp = kernel_params(g);
    const double delta = kp.delta, eps = kp.eps();

    Eigen::VectorXd v(N);
    Eigen::MatrixXd A = Eigen::MatrixXd::Zero(N, N);
    for (int i = 0; i < N; ++i) {
        const int n = 2 * i + 1;
        v(i) = (i % 2 == 0 ? 1.0 : -1.0) / n;
        A(i, i) = double(n) * n;
    }
    Eigen::MatrixXd B = Eigen::MatrixXd::Identity(N, N);
    if (R <= 0.5) {
        B += (delta + 2.0 * eps) * (8.0 * R / (pi * pi)) * v * v.transpose();
    } else {
        if (delta != 0.0) {
            const double c = delta / (2.0 * R);
            for (int i = 0; i < N; ++i) {
                for (int j = i; j < N; ++j) {
                    const int m = 2 * i + 1, n = 2 * j + 1;
                    const double a = c * m * n * mu_mn(m, n, R);
                    const double b = c * lambda_mn(m, n, R);
                    A(i, j) -= a;
                    B(i, j) += b;
                    if (j != i) {
                        A(j, i) -= a;
                        B(j, i) += b;
                    }
                }
            }
        }
        B += (16.0 * R * eps / (pi * pi)) * v * v.transpose();
    }
    return {std::move(A), std::move(B), R, g};
}

// Smallest generalized eigenvalue of (A, B): the truncated m_R.
inline double minimize(const QuadraticForms& f) {
    Eigen::LLT<Eigen::MatrixXd> llt(f.denominator);
    if (llt.info() != Eigen::Success) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(f.denominator);
        const auto& sv = svd.singularValues();
        throw SolverError("minimize: denominator form is not positive definite",
                          sv(0) / sv(sv.size() - 1));
    }
    // L^{-1} A L^{-T}
    const auto& L = llt.matrixL();
    Eigen::MatrixXd C = L.solve(f.numerator);
    C = L.solve(C.transpose()).transpose();
    C = 0.5 * (C + C.transpose());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(C, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(f.denominator);
        const auto& sv = svd.singularValues();
        throw SolverError("minimize: symmetric eigen-solve failed", sv(0) / sv(sv.size() - 1));
    }
    return es.eigenvalues()(0);
}

inline double minimize(Symmetry g, double R, int N = 400) {
    return minimize(assemble_forms(g, R, N));
}

// Rayleigh quotient of the first mode alone: an upper bound for m_R.
inline double first_mode_upper(Symmetry g, double R) {
    const auto f = assemble_forms(g, R, 1);
    return f.numerator(0, 0) / f.denominator(0, 0);
}

} // namespace lowzero
