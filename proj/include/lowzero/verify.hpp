#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <utility>
#include <vector>

#include "family_bounds.hpp"
#include "lowest_zero.hpp"
#include "proportion.hpp"
#include "rayleigh.hpp"
#include "test_function.hpp"

namespace lowzero {

struct CaseResult {
    std::string name;
    double expected;
    double got;
    double tol;
    bool pass;
};

inline std::string fmt_case(const char* fmt, const std::string& sym, double x) {
    char buf[128];
    std::snprintf(buf, sizeof buf, fmt, sym.c_str(), x);
    return buf;
}

inline std::vector<double> support_grid(double lo, double hi, int count, double avoid = 0.5, double gap = 0.01) {
    std::vector<double> out;
    for (int i = 0; i < count; ++i) {
        const double R = lo + (hi - lo) * (i + 0.5) / count;
        if (std::abs(R - avoid) <= gap) continue;
        out.push_back(R);
    }
    return out;
}

inline double smallest_root_n2(Symmetry g, double R, const ScanOptions& opt, double lambda_max) {
    const std::vector<double> excluded{0.5};
    const auto r = scan_roots([&](double l) { return equation_lhs_n2(g, R, l); }, opt.step, lambda_max, excluded,
                              opt, true);
    if (r.empty()) throw NoRootError("no root of the simplified n = 2 relation");
    return r.front();
}

inline std::vector<CaseResult> run_verification(int grid_size = 12, int trunc = 400) {
    std::vector<CaseResult> out;
    auto add = [&](std::string name, double expected, double got, double tol) {
        const bool pass = std::isfinite(got) && std::abs(got - expected) <= tol;
        out.push_back({std::move(name), expected, got, tol, pass});
    };
    auto guarded = [&](const std::string& name, double expected, double tol, auto&& fn) {
        try {
            add(name, expected, fn(), tol);
        } catch (const std::exception&) {
            out.push_back({name, expected, std::nan(""), tol, false});
        }
    };

    guarded("v_inverse(2)", 0.185, 0.005, [] { return v_inverse(2.0); });
    guarded("bound SO+ nu_max=2", 0.22, 0.02, [] { return theorem1_bound({Symmetry::SOplus, 2.0}); });
    guarded("bound Sp nu_max=2", 0.39, 0.02, [] { return theorem1_bound({Symmetry::Sp, 2.0}); });
    guarded("bound SO+ nu_max=2 excess over 0.22", 0.0, 0.0,
            [] { return std::max(0.0, theorem1_bound({Symmetry::SOplus, 2.0}) - 0.22); });
    guarded("bound Sp nu_max=2 excess over 0.39", 0.0, 0.0,
            [] { return std::max(0.0, theorem1_bound({Symmetry::Sp, 2.0}) - 0.39); });

    for (Symmetry g : {Symmetry::O, Symmetry::Sp, Symmetry::SOplus, Symmetry::SOminus}) {
        for (double R : support_grid(0.15, 0.95, grid_size)) {
            const std::string name = fmt_case("oracle %s R=%.4f", to_string(g), R);
            try {
                const auto closed = m_tilde(g, R);
                const double oracle = std::sqrt(minimize(g, closed.R, trunc) / (16.0 * closed.R * closed.R));
                add(name, oracle, closed.bound, 5e-3);
            } catch (const std::exception&) {
                out.push_back({name, 0.0, std::nan(""), 5e-3, false});
            }
        }
    }

    for (Symmetry g : {Symmetry::Sp, Symmetry::SOplus, Symmetry::SOminus}) {
        for (double R : support_grid(0.55, 0.95, 8, -1.0, 0.0)) {
            const std::string name = fmt_case("n2 cross-route %s R=%.4f", to_string(g), R);
            try {
                const auto c = build_equation_context(g, R);
                const double general = smallest_root(c);
                add(name, general, smallest_root_n2(g, R, {}, default_lambda_max(c)), 1e-9);
            } catch (const std::exception&) {
                out.push_back({name, 0.0, std::nan(""), 1e-9, false});
            }
        }
        guarded(fmt_case("n2 vanishes at 1/2 %s R=%.2f", to_string(g), 0.75), 0.0, 1e-12,
                [g] { return equation_lhs_n2(g, 0.75, 0.5); });
    }

    const std::pair<Symmetry, double> pairs[] = {{Symmetry::SOplus, 0.75}, {Symmetry::Sp, 0.6},
                                                 {Symmetry::SOminus, 1.3}, {Symmetry::Sp, 1.4},
                                                 {Symmetry::O, 0.8},       {Symmetry::SOplus, 0.35}};
    for (auto [g, R] : pairs) {
        guarded(fmt_case("residuals %s R=%.2f", to_string(g), R), 0.0, 1e-6,
                [g, R] { return residuals(reconstruct(g, R)).worst_relative(); });
    }

    for (int r = 1; r <= 6; ++r) {
        const int sigma = r % 2 == 1 ? 1 : -1;
        const double R = 1.0 / (2.0 * r * r);
        const double bm = beta_min(sigma, R);
        const auto t = theorem3_Hr(r, 2.0 * bm);
        const double ref = borne({sigma, R, 2.0 * bm});
        add(fmt_case("proportion Hr%s r=%.0f lower bound", "", r), 0.0, std::abs(t.lower_bound - ref) / std::abs(ref), 1e-10);
        add(fmt_case("proportion Hr%s r=%.0f threshold", "", r), 0.0, std::abs(t.threshold - bm) / bm, 1e-8);
    }
    for (int r = 1; r <= 7; r += 2) {
        for (int sigma : {1, -1}) {
            const double R = 1.0 / (4.0 * r * (r + 2));
            const double bm = beta_min(sigma, R);
            const auto t = theorem3_Hrpm(r, sigma, 1.5 * bm);
            const double ref = borne({sigma, R, 1.5 * bm});
            const std::string s = sigma > 0 ? "+" : "-";
            add(fmt_case("proportion Hr%s r=%.0f lower bound", s, r), 0.0, std::abs(t.lower_bound - ref) / std::abs(ref), 1e-10);
            add(fmt_case("proportion Hr%s r=%.0f threshold", s, r), 0.0, std::abs(t.threshold - bm) / bm, 1e-8);
        }
    }
    return out;
}

} // namespace lowzero
