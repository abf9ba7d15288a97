// SPDX-License-Identifier: Apache-2.0
//
// 1-D adaptive Gauss-Kronrod quadrature and composite-Simpson weight tables.

#ifndef OPTIRS_QUADRATURE_HPP
#define OPTIRS_QUADRATURE_HPP

#include <cmath>
#include <cstddef>
#include <functional>
#include <stdexcept>
#include <vector>

namespace optirs {

namespace detail {

// 15-point Kronrod nodes/weights with the embedded 7-point Gauss rule,
// on [-1, 1].
inline constexpr double gk_nodes[8] = {
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000};
inline constexpr double gk_wk[8] = {
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714};
inline constexpr double gk_wg[4] = {
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327};

template <typename F>
inline void gk15(const F& f, double a, double b, double& result, double& err) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double resk = 0.0, resg = 0.0;
    for (int j = 0; j < 8; ++j) {
        const double dx = h * gk_nodes[j];
        double fv;
        if (j == 7) {
            fv = f(c);
            resk += gk_wk[7] * fv;
            resg += gk_wg[3] * fv;
        } else {
            fv = f(c - dx) + f(c + dx);
            resk += gk_wk[j] * fv;
            if (j % 2 == 1) resg += gk_wg[j / 2] * fv;
        }
    }
    result = resk * h;
    err = std::abs((resk - resg) * h);
}

} // namespace detail

// Adaptive bisection on top of GK15. Tolerance is absolute; segments are
// processed in a fixed order so results do not depend on scheduling.
template <typename F>
inline double integrate_adaptive(const F& f, double a, double b,
                                 double abs_tol = 1e-12, int max_depth = 48) {
    struct Seg { double a, b, val, err; int depth; };
    double v0, e0;
    detail::gk15(f, a, b, v0, e0);
    std::vector<Seg> stack{{a, b, v0, e0, 0}};
    double total = 0.0;
    double budget = abs_tol;
    while (!stack.empty()) {
        const Seg s = stack.back();
        stack.pop_back();
        if (s.err <= budget * (s.b - s.a) / (b - a) || s.depth >= max_depth) {
            total += s.val;
            continue;
        }
        const double m = 0.5 * (s.a + s.b);
        double v1, e1, v2, e2;
        detail::gk15(f, s.a, m, v1, e1);
        detail::gk15(f, m, s.b, v2, e2);
        stack.push_back({m, s.b, v2, e2, s.depth + 1});
        stack.push_back({s.a, m, v1, e1, s.depth + 1});
    }
    return total;
}

// Nodes and weights of the composite Simpson rule on [a, b] with n points
// (n odd, n >= 3).
struct SimpsonGrid {
    std::vector<double> x;
    std::vector<double> w;
};

inline SimpsonGrid simpson_grid(double a, double b, std::size_t n) {
    if (n < 3) n = 3;
    if (n % 2 == 0) ++n;
    SimpsonGrid g;
    g.x.resize(n);
    g.w.resize(n);
    const double h = (b - a) / double(n - 1);
    for (std::size_t i = 0; i < n; ++i) {
        g.x[i] = a + h * double(i);
        double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
        g.w[i] = w * h / 3.0;
    }
    return g;
}

} // namespace optirs

#endif
