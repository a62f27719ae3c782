#pragma once

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

namespace lowzero {

struct NoRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Bisection on [a, b] assuming f(a) and f(b) have opposite signs (or one is zero).
template <class F>
double bisect(F&& f, double a, double b, double tol = 1e-12, int max_iter = 200) {
    double fa = f(a);
    double fb = f(b);
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if ((fa > 0) == (fb > 0)) throw NoRootError("bisect: no sign change on bracket");
    for (int it = 0; it < max_iter && b - a > tol; ++it) {
        const double m = 0.5 * (a + b);
        if (m <= a || m >= b) break;
        const double fm = f(m);
        if (fm == 0.0) return m;
        if ((fm > 0) == (fa > 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
            fb = fm;
        }
    }
    return 0.5 * (a + b);
}

namespace detail {

template <class F>
double simpson_rec(F& f, double a, double b, double fa, double fm, double fb, double whole, double tol,
                   int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m), rm = 0.5 * (m + b);
    const double flm = f(lm), frm = f(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double diff = left + right - whole;
    if (depth <= 0 || std::abs(diff) <= 15.0 * tol) return left + right + diff / 15.0;
    return simpson_rec(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           simpson_rec(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
}

} // namespace detail

// Adaptive Simpson with Richardson correction; tol is absolute.
template <class F>
double adaptive_simpson(F&& f, double a, double b, double tol = 1e-10, int max_depth = 40) {
    if (a == b) return 0.0;
    const int pre = 8;
    const double h = (b - a) / pre;
    double s = 0.0;
    for (int i = 0; i < pre; ++i) {
        const double x0 = a + i * h, x1 = i + 1 == pre ? b : a + (i + 1) * h;
        const double f0 = f(x0), f1 = f(x1), fmid = f(0.5 * (x0 + x1));
        const double w = (x1 - x0) / 6.0 * (f0 + 4.0 * fmid + f1);
        s += detail::simpson_rec(f, x0, x1, f0, fmid, f1, w, tol / pre, max_depth);
    }
    return s;
}

// Integrates over [a, b] split at every breakpoint lying strictly inside.
template <class F>
double integrate_pieces(F&& f, double a, double b, std::vector<double> breaks, double tol = 1e-10) {
    if (b < a) return -integrate_pieces(f, b, a, std::move(breaks), tol);
    breaks.push_back(a);
    breaks.push_back(b);
    std::sort(breaks.begin(), breaks.end());
    breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
    double s = 0.0;
    double lo = a;
    std::size_t count = 0;
    for (double x : breaks) count += x > a && x < b;
    const double piece_tol = tol / static_cast<double>(count + 1);
    for (double x : breaks) {
        if (x <= a) continue;
        const double hi = std::min(x, b);
        if (hi > lo) s += adaptive_simpson(f, lo, hi, piece_tol);
        lo = hi;
        if (lo >= b) break;
    }
    return s;
}

} // namespace lowzero
