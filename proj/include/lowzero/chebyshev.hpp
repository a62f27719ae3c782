#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

namespace lowzero {

// U_n by the three-term recurrence; U_{-1} = 0.
template <class T>
T u_eval(int n, T x) {
    if (n < 0) return T(0);
    T prev = T(1);
    if (n == 0) return prev;
    T cur = T(2) * x;
    for (int k = 1; k < n; ++k) {
        T next = T(2) * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

template <class T>
T t_eval(int n, T x) {
    T prev = T(1);
    if (n <= 0) return prev;
    T cur = x;
    for (int k = 1; k < n; ++k) {
        T next = T(2) * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return cur;
}

// U_0(x), ..., U_n(x)
inline std::vector<double> u_table(int n, double x) {
    std::vector<double> u(static_cast<std::size_t>(std::max(n, 0)) + 1);
    u[0] = 1.0;
    if (n >= 1) u[1] = 2.0 * x;
    for (int k = 2; k <= n; ++k) u[k] = 2.0 * x * u[k - 1] - u[k - 2];
    return u;
}

// theta_n(k) = cos(k pi/(n+1)), k = 1..n
inline double u_root(int n, int k) {
    return std::cos(k * std::numbers::pi / (n + 1));
}

inline std::vector<double> u_roots(int n) {
    std::vector<double> r;
    r.reserve(n > 0 ? n : 0);
    for (int k = 1; k <= n; ++k) r.push_back(u_root(n, k));
    return r;
}

inline std::complex<double> truncated_geometric(int n, double x, std::complex<double> z) {
    std::complex<double> s = 0.0, zp = 1.0;
    double prev = 0.0, cur = 1.0;
    for (int j = 0; j < n; ++j) {
        s += cur * zp;
        zp *= z;
        const double next = 2.0 * x * cur - prev;
        prev = cur;
        cur = next;
    }
    return s;
}

} // namespace lowzero
