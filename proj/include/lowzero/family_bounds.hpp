#pragma once

#include <cmath>
#include <numbers>

#include "lowest_zero.hpp"
#include "symmetry.hpp"

namespace lowzero {

struct Theorem1Input {
    Symmetry w_star;
    double nu_max;
};

struct Theorem1Result {
    double bound;
    BoundResult detail;
    double richardson_gap = 0.0; // |bound(nu - 1e-5) - bound(nu - 2e-5)|, equation branch only
};

inline Theorem1Result theorem1(const Theorem1Input& inp) {
    if (!(inp.nu_max > 0.0)) throw DomainError("theorem1_bound: nu_max must be positive");
    const double nu = inp.nu_max / 2.0;
    const Symmetry g = inp.w_star;
    Theorem1Result out{};
    if (g == Symmetry::U || g == Symmetry::O || inp.nu_max <= 1.0) {
        out.detail = m_tilde(g, nu);
        out.bound = out.detail.bound;
        return out;
    }
    const double R = nu - 1e-5;
    if (R <= 0.5) {
        out.detail = m_tilde(g, R);
        out.bound = out.detail.bound;
        return out;
    }
    out.detail = equation_branch(g, R);
    out.bound = out.detail.lambda / (2.0 * std::numbers::pi);
    if (nu - 2e-5 <= 0.5) return out;
    const auto second = equation_branch(g, nu - 2e-5);
    out.richardson_gap = std::abs(out.bound - second.lambda / (2.0 * std::numbers::pi));
    return out;
}

inline double theorem1_bound(const Theorem1Input& inp) {
    return theorem1(inp).bound;
}

inline double family_bound(const FamilySpec& f) {
    const auto p = family_params(f);
    return theorem1_bound({p.w_star, p.nu_max});
}

struct AsymptoticComparison {
    double exact;
    double expansion;
    double relative_gap() const { return std::abs(exact - expansion) / std::abs(exact); }
};

inline AsymptoticComparison asymptotic_orthogonal(double nu_max) {
    if (!(nu_max >= 4.0)) throw DomainError("asymptotic_orthogonal: nu_max must be >= 4");
    AsymptoticComparison c;
    c.exact = 2.0 / nu_max * v_inverse(1.0 + 2.0 / nu_max);
    c.expansion = std::sqrt(6.0) / (std::numbers::pi * std::pow(nu_max, 1.5)) * (1.0 - 6.0 / (5.0 * nu_max));
    return c;
}

} // namespace lowzero
