#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <string_view>

namespace lowzero {

struct DomainError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct Rational {
    int num = 0;
    int den = 1;

    constexpr double value() const { return static_cast<double>(num) / den; }
    friend constexpr bool operator==(Rational a, Rational b) { return a.num * b.den == b.num * a.den; }
};

enum class Symmetry { U, O, Sp, SOplus, SOminus };

inline constexpr Symmetry all_symmetries[] = {
    Symmetry::U, Symmetry::O, Symmetry::Sp, Symmetry::SOplus, Symmetry::SOminus};

struct KernelParams {
    int delta;
    Rational epsilon;

    constexpr double eps() const { return epsilon.value(); }
    // delta + 2 epsilon, always an integer
    constexpr int weight() const { return delta + 2 * epsilon.num / epsilon.den; }
};

constexpr KernelParams kernel_params(Symmetry g) {
    switch (g) {
    case Symmetry::U: return {0, {0, 1}};
    case Symmetry::O: return {0, {1, 2}};
    case Symmetry::Sp: return {-1, {0, 1}};
    case Symmetry::SOplus: return {1, {0, 1}};
    case Symmetry::SOminus: return {-1, {1, 1}};
    }
    return {0, {0, 1}};
}

inline std::string to_string(Symmetry g) {
    switch (g) {
    case Symmetry::U: return "U";
    case Symmetry::O: return "O";
    case Symmetry::Sp: return "Sp";
    case Symmetry::SOplus: return "SO+";
    case Symmetry::SOminus: return "SO-";
    }
    return "?";
}

inline Symmetry parse_symmetry(std::string_view s) {
    if (s == "U") return Symmetry::U;
    if (s == "O") return Symmetry::O;
    if (s == "Sp") return Symmetry::Sp;
    if (s == "SO+" || s == "SOplus") return Symmetry::SOplus;
    if (s == "SO-" || s == "SOminus" || s == "SO−") return Symmetry::SOminus;
    throw DomainError("unknown symmetry '" + std::string(s) + "' (expected U, O, Sp, SO+, SO-)");
}

inline double eta(double y) {
    const double a = std::abs(y);
    if (a < 1.0) return 1.0;
    if (a == 1.0) return 0.5;
    return 0.0;
}

// Fourier transform of the density kernel without the Dirac atom at 0.
inline double density_fourier_nonatomic(Symmetry g, double y) {
    const auto p = kernel_params(g);
    return 0.5 * p.delta * eta(y) + p.eps();
}

enum class Restriction { none, plus, minus };

inline constexpr Rational theta0{7, 64};

struct FamilySpec {
    int r = 1;
    Restriction restriction = Restriction::none;
    int weight_k = 2;
};

struct FamilyParams {
    double nu_max;
    double rho_max;
    int sigma;
    Symmetry w;
    Symmetry w_star;
};

inline FamilyParams family_params(const FamilySpec& f) {
    if (f.r < 1) throw DomainError("r must be a positive integer");
    if (f.weight_k < 2 || f.weight_k % 2 != 0) throw DomainError("weight k must be an even integer >= 2");
    if (f.r >= 2 && f.weight_k < 4) throw DomainError("weight k must be >= 4 when r >= 2");
    if (f.restriction != Restriction::none && f.r % 2 == 0)
        throw DomainError("a sign restriction requires r odd");

    const double r = f.r;
    const double k = f.weight_k;
    FamilyParams p{};
    p.nu_max = f.r == 1 ? 2.0 : (1.0 - 1.0 / (2.0 * (k - 2.0 * theta0.value()))) * 2.0 / (r * r);
    switch (f.restriction) {
    case Restriction::none:
        p.rho_max = 1.0 / (r * r);
        p.sigma = f.r % 2 == 1 ? 1 : -1;
        p.w = p.w_star = f.r % 2 == 0 ? Symmetry::Sp : Symmetry::O;
        break;
    case Restriction::plus:
    case Restriction::minus:
        if (f.r != 1) p.nu_max = std::min(p.nu_max, 3.0 / (r * (r + 1.0)));
        p.rho_max = 1.0 / (2.0 * r * (r + 2.0));
        if (f.restriction == Restriction::plus) {
            p.sigma = 1;
            p.w = p.w_star = Symmetry::SOplus;
        } else {
            p.sigma = -1;
            p.w = Symmetry::SOminus;
            p.w_star = Symmetry::Sp;
        }
        break;
    }
    return p;
}

} // namespace lowzero
