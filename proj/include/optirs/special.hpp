// SPDX-License-Identifier: Apache-2.0
//
// Scalar special functions used by the closed-form channel models:
// sine integral Si(x) and the regularized incomplete gamma functions.

#ifndef OPTIRS_SPECIAL_HPP
#define OPTIRS_SPECIAL_HPP

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

namespace optirs {

inline constexpr double pi = 3.14159265358979323846;

// Si(x) = int_0^x sin(t)/t dt.
// Power series below |x| = 4, otherwise Si(x) = pi/2 + Im E1(ix) with the
// exponential integral evaluated by a modified Lentz continued fraction.
inline double sine_integral(double x) {
    if (x < 0.0) return -sine_integral(-x);
    if (x == 0.0) return 0.0;
    if (x <= 4.0) {
        // sum (-1)^n x^(2n+1) / ((2n+1) (2n+1)!)
        double term = x;
        double sum = x;
        const double x2 = x * x;
        for (int n = 1; n < 40; ++n) {
            const int m = 2 * n + 1;
            term *= -x2 / (double(m - 1) * double(m));
            sum += term / double(m);
            if (std::abs(term) < 1e-18 * std::abs(sum)) break;
        }
        return sum;
    }
    const std::complex<double> z(0.0, x);
    const std::complex<double> one(1.0, 0.0);
    // E1(z) continued fraction, Lentz form
    std::complex<double> b = z + one;
    std::complex<double> c(1e308, 0.0);
    std::complex<double> d = one / b;
    std::complex<double> h = d;
    for (int i = 1; i <= 200; ++i) {
        const double a = -double(i) * double(i);
        b += 2.0;
        d = one / (a * d + b);
        c = b + a / c;
        const std::complex<double> del = c * d;
        h *= del;
        if (std::abs(del - one) < 1e-16) break;
    }
    const std::complex<double> e1 = h * std::exp(-z);
    return pi / 2.0 + e1.imag();
}

namespace detail {

inline double gamma_p_series(double a, double x) {
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int n = 0; n < 500; ++n) {
        ap += 1.0;
        del *= x / ap;
        sum += del;
        if (std::abs(del) < std::abs(sum) * 1e-17) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

inline double gamma_q_contfrac(double a, double x) {
    const double tiny = 1e-300;
    double b = x + 1.0 - a;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 500; ++i) {
        const double an = -double(i) * (double(i) - a);
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = d * c;
        h *= del;
        if (std::abs(del - 1.0) < 1e-17) break;
    }
    return h * std::exp(-x + a * std::log(x) - std::lgamma(a));
}

} // namespace detail

// Regularized lower incomplete gamma P(a, x) = gamma(a, x) / Gamma(a).
inline double gamma_p(double a, double x) {
    if (a <= 0.0) throw std::domain_error("gamma_p: shape must be positive");
    if (x < 0.0) throw std::domain_error("gamma_p: argument must be non-negative");
    if (x == 0.0) return 0.0;
    if (x < a + 1.0) return detail::gamma_p_series(a, x);
    return 1.0 - detail::gamma_q_contfrac(a, x);
}

// Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
inline double gamma_q(double a, double x) {
    if (a <= 0.0) throw std::domain_error("gamma_q: shape must be positive");
    if (x < 0.0) throw std::domain_error("gamma_q: argument must be non-negative");
    if (x == 0.0) return 1.0;
    if (x < a + 1.0) return 1.0 - detail::gamma_p_series(a, x);
    return detail::gamma_q_contfrac(a, x);
}

inline double sinc_unnormalized(double x) {
    // sin(x)/x with the removable singularity filled in
    if (std::abs(x) < 1e-6) {
        const double x2 = x * x;
        return 1.0 - x2 / 6.0 + x2 * x2 / 120.0;
    }
    return std::sin(x) / x;
}

} // namespace optirs

#endif
