#pragma once

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

#include "symmetry.hpp"

namespace lowzero {

struct ProportionInput {
    int sigma;
    double R;
    double beta;
};

namespace detail {

inline void check_sigma(int s) {
    if (s != 1 && s != -1) throw DomainError("sigma must be +1 or -1");
}

inline void check_R(double R) {
    if (!(R > 0.0 && R <= 0.5)) throw DomainError("R must satisfy 0 < R <= 1/2");
}

} // namespace detail

inline double phi_hat(double u, double R, double beta) {
    constexpr double pi = std::numbers::pi;
    const double a = std::abs(u);
    if (a > 2.0 * R) return 0.0;
    return (2.0 * R - a) / 2.0 * (1.0 / (16.0 * R * R) - beta * beta) * std::cos(pi * u / (2.0 * R)) -
           (1.0 / pi) * (1.0 / (16.0 * R) + beta * beta * R) * std::sin(pi * a / (2.0 * R));
}

// integral of |u| phi_hat(u)^2 over the real line
inline double weighted_integral(double R, double beta) {
    constexpr double pi = std::numbers::pi;
    const double pi2 = pi * pi;
    const double R2 = R * R, R4 = R2 * R2, b2 = beta * beta, b4 = b2 * b2;
    return (768.0 * R4 * b4 + 3.0 + 288.0 * b2 * R2 + pi2 - 32.0 * b2 * R2 * pi2 + 256.0 * R4 * b4 * pi2) /
           (768.0 * pi2);
}

inline double borne(const ProportionInput& in) {
    detail::check_sigma(in.sigma);
    constexpr double pi = std::numbers::pi;
    const double pi2 = pi * pi;
    const double R = in.R, s = in.sigma;
    const double R2 = R * R, b2 = in.beta * in.beta;
    const double den = 128.0 * s * R2 * R * b2 + 16.0 * pi2 * R2 * b2 - pi2;
    if (std::abs(den) <= 1e-12 * (std::abs(128.0 * R2 * R * b2) + 16.0 * pi2 * R2 * b2 + pi2)) {
        std::ostringstream os;
        os << "borne: vanishing denominator at R = " << R << ", beta = " << in.beta;
        throw DomainError(os.str());
    }
    const double num = 256.0 * (3.0 + pi2) * R2 * R2 * b2 * b2 + 32.0 * (9.0 - pi2) * R2 * b2 + pi2 + 3.0;
    return 1.0 - (2.0 * pi2 * R2 / 3.0) * num / (den * den);
}

inline double b_g0(int sigma, double R) {
    detail::check_sigma(sigma);
    const double q = 1.0 + sigma * 8.0 * R / (std::numbers::pi * std::numbers::pi);
    if (!(q > 0.0)) throw DomainError("b_g0: 1 + 8 sigma R / pi^2 must be positive");
    return 1.0 / (4.0 * R * std::sqrt(q));
}

inline double beta_min(int sigma, double R) {
    detail::check_sigma(sigma);
    detail::check_R(R);
    constexpr double pi = std::numbers::pi;
    const double pi2 = pi * pi, pi4 = pi2 * pi2;
    const double s = sigma, R2 = R * R;
    const double inner = 9.0 * pi4 + 72.0 * s * R * pi2 - 6.0 * (pi4 - 7.0 * pi2 - 12.0) * R2;
    if (inner < 0.0) throw DomainError("beta_min: negative inner radicand");
    const double num = pi2 * (3.0 * pi2 + 24.0 * s * R - 2.0 * (pi2 - 9.0) * R2) + 4.0 * pi * R * std::sqrt(inner);
    const double den = 3.0 * pi4 + 48.0 * s * R * pi2 + (192.0 - 6.0 * pi2 - 2.0 * pi4) * R2;
    if (!(num / den >= 0.0)) throw DomainError("beta_min: negative radicand");
    return std::sqrt(num / den) / (4.0 * R);
}

inline double borne_limit(int sigma, double R) {
    detail::check_sigma(sigma);
    detail::check_R(R);
    constexpr double pi = std::numbers::pi;
    const double pi2 = pi * pi;
    const double q = pi2 + 8.0 * R * sigma;
    return 1.0 - (2.0 * pi2 * R * R / 3.0) * (pi2 + 3.0) / (q * q);
}

struct RootPair {
    double first, second;
};

// roots in R of the inner radicand 9pi^4 + 72 sigma R pi^2 - 6(pi^4 - 7pi^2 - 12) R^2
inline RootPair radicand_roots(int sigma) {
    detail::check_sigma(sigma);
    constexpr double pi = std::numbers::pi;
    const double pi2 = pi * pi, pi4 = pi2 * pi2;
    const double root = std::sqrt(6.0 * (pi2 - 3.0) * (pi2 - 4.0));
    const double den = 2.0 * (pi4 - 7.0 * pi2 - 12.0);
    return {pi2 * (12.0 * sigma - root) / den, pi2 * (12.0 * sigma + root) / den};
}

// roots in R of the denominator 3pi^4 + 48 sigma R pi^2 + (192 - 6pi^2 - 2pi^4) R^2
inline RootPair denominator_roots(int sigma) {
    detail::check_sigma(sigma);
    constexpr double pi = std::numbers::pi;
    const double pi2 = pi * pi, pi4 = pi2 * pi2;
    const double root = std::sqrt(6.0 * pi2 * (pi2 + 3.0));
    const double den = 192.0 - 6.0 * pi2 - 2.0 * pi4;
    const double a = pi2 * (-24.0 * sigma - root) / den, b = pi2 * (-24.0 * sigma + root) / den;
    return {std::min(a, b), std::max(a, b)};
}

struct Theorem3Result {
    double threshold;
    double lower_bound;
};

inline Theorem3Result theorem3_Hr(int r, double beta) {
    if (r < 1) throw DomainError("theorem3_Hr: r must be >= 1");
    constexpr double pi = std::numbers::pi;
    const double pi2 = pi * pi, pi3 = pi2 * pi, pi4 = pi2 * pi2;
    const double rr = r, r2 = rr * rr, r4 = r2 * r2, r6 = r4 * r2, r8 = r4 * r4;
    const double sgn = r % 2 == 0 ? 1.0 : -1.0; // (-1)^r
    const double b2 = beta * beta;
    const double den = r6 * pi2 - 4.0 * b2 * r2 * pi2 + 16.0 * b2 * sgn;
    const double lb = 1.0 - (pi2 / 6.0) * (16.0 * (pi2 + 3.0) * b2 * b2 + 8.0 * r4 * (9.0 - pi2) * b2 + (3.0 + pi2) * r8) /
                                (den * den);
    const double inner = -pi4 + 6.0 * pi4 * r4 + 7.0 * pi2 + 12.0 - 24.0 * sgn * pi2 * r2;
    const double num = 6.0 * pi3 * r4 - 24.0 * sgn * pi * r2 + 9.0 * pi - pi3 + 2.0 * std::sqrt(6.0) * std::sqrt(inner);
    const double dd = 6.0 * pi4 * r4 - 48.0 * sgn * pi2 * r2 + 96.0 - 3.0 * pi2 - pi4;
    return {std::sqrt((pi * r4 / 4.0) * num / dd), lb};
}

inline Theorem3Result theorem3_Hrpm(int r, int sigma, double beta) {
    if (r < 1 || r % 2 == 0) throw DomainError("theorem3_Hrpm: r must be odd");
    detail::check_sigma(sigma);
    constexpr double pi = std::numbers::pi;
    const double pi2 = pi * pi, pi4 = pi2 * pi2;
    const double q = double(r) * (r + 2), q2 = q * q, q3 = q2 * q, q4 = q2 * q2;
    const double s = sigma, b2 = beta * beta;
    const double den = 2.0 * s * b2 + pi2 * b2 * q - pi2 * q3;
    const double lb =
        1.0 - (pi2 / 24.0) * ((pi2 + 3.0) * b2 * b2 + 2.0 * q2 * (9.0 - pi2) * b2 + (pi2 + 3.0) * q4) / (den * den);
    const double inner = -pi4 + 24.0 * pi4 * q2 + 7.0 * pi2 + 12.0 + 48.0 * s * pi2 * q;
    const double num = pi * (24.0 * pi2 * q2 + 48.0 * s * q + 9.0 - pi2) + 2.0 * std::sqrt(6.0) * std::sqrt(inner);
    const double dd = 24.0 * pi4 * q2 + 96.0 * s * pi2 * q + 96.0 - 3.0 * pi2 - pi4;
    return {q * std::sqrt(pi) * std::sqrt(num / dd), lb};
}

} // namespace lowzero
