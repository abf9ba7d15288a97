// SPDX-License-Identifier: Apache-2.0
//
// Brute-force Huygens-Fresnel evaluation of the field reflected by the
// IRS and of the captured-power integral over the lens.  This is the
// oracle the closed forms are checked against, so the kernel keeps the
// exact 3-D point-to-point distance (no paraxial expansion) and the exact
// Gaussian envelope; only the linear phase profile of the surface cancels
// the bulk tilt, which is what makes the quadrature affordable.
//
// Sampling: after the profile cancels the linear terms the residual phase
// across the aperture is dominated by the quadratic wavefront term and by
// the lens-offset linear term; the sampler estimates that span per axis
// and allocates oversampling_factor points per 2 pi.  The integration
// domain is clipped where the Gaussian envelope falls below exp(-4.5^2),
// and lens-plane fringes are resolved only when the aperture edge carries
// a non-negligible field amplitude.
//
// Determinism: work is split over lens rows / aperture rows with one
// partial sum per row, reduced in row order, so results do not depend on
// the thread count.

#ifndef OPTIRS_WAVE_HPP
#define OPTIRS_WAVE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <fstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "optirs/beam.hpp"
#include "optirs/geometry.hpp"
#include "optirs/gml.hpp"
#include "optirs/parallel.hpp"
#include "optirs/quadrature.hpp"

namespace optirs {

struct QuadratureSpec {
    std::size_t irs_samples_per_axis = 48;   // minimum aperture grid per axis
    std::size_t lens_samples_per_axis = 48;  // minimum lens grid per axis
    double oversampling_factor = 6.0;        // samples per 2 pi of residual phase
    double refinement_tolerance = 0.02;      // relative change allowed under refinement

    void validate() const {
        if (irs_samples_per_axis < 8 || lens_samples_per_axis < 8)
            throw std::domain_error("QuadratureSpec: sample counts must be >= 8");
        if (!(oversampling_factor >= 4.0))
            throw std::domain_error("QuadratureSpec: oversampling_factor must be >= 4");
        if (!(refinement_tolerance > 0.0) || !(refinement_tolerance < 0.1))
            throw std::domain_error("QuadratureSpec: refinement_tolerance must be in (0, 0.1)");
    }
};

namespace wave_detail {

inline constexpr double two_pi = 2.0 * pi;
inline constexpr double envelope_clip_sigmas = 4.5;

// sin/cos on a pre-reduced argument |r| <= pi, by odd/even Taylor sums in
// r^2 (max error ~4e-11 at |r| = pi).  Plain arithmetic so the quadrature
// loops vectorize and stay libm-independent.
inline void sincos_reduced(double r, double& s, double& c) {
    const double u = r * r;
    double ps = 1.0 / 51090942171709440000.0;  // 1/21!
    ps = ps * u - 1.0 / 121645100408832000.0;  // 1/19!
    ps = ps * u + 1.0 / 355687428096000.0;
    ps = ps * u - 1.0 / 1307674368000.0;
    ps = ps * u + 1.0 / 6227020800.0;
    ps = ps * u - 1.0 / 39916800.0;
    ps = ps * u + 1.0 / 362880.0;
    ps = ps * u - 1.0 / 5040.0;
    ps = ps * u + 1.0 / 120.0;
    ps = ps * u - 1.0 / 6.0;
    s = r * (ps * u + 1.0);
    double pc = -1.0 / 1124000727777607680000.0;  // -1/22!
    pc = pc * u + 1.0 / 2432902008176640000.0;    // 1/20!
    pc = pc * u - 1.0 / 6402373705728000.0;
    pc = pc * u + 1.0 / 20922789888000.0;
    pc = pc * u - 1.0 / 87178291200.0;
    pc = pc * u + 1.0 / 479001600.0;
    pc = pc * u - 1.0 / 3628800.0;
    pc = pc * u + 1.0 / 40320.0;
    pc = pc * u - 1.0 / 720.0;
    pc = pc * u + 1.0 / 24.0;
    pc = pc * u - 1.0 / 2.0;
    c = pc * u + 1.0;
}

inline double reduce_phase(double phi) {
    return phi - two_pi * std::nearbyint(phi * (1.0 / two_pi));
}

struct Frame {
    double k = 0.0;
    double w1 = 0.0;   // w(d1)
    double R1 = 0.0;   // R(d1)
    double d2 = 0.0;
    double si = 0.0, mu_i = 0.0;
    double sr = 0.0, mu_r = 0.0;
    double h_r = 0.0;  // horizontal node-to-Rx offset, = mu_r * d2
    double phi_x = 0.0, phi_y = 0.0;
    double amp0 = 0.0;  // peak incident amplitude sqrt(4 eta P si / (pi w^2))
    double eta_p2 = 0.0;  // 2 eta P
};

inline Frame make_frame(const IrsSpec& irs, const BeamParams& b, const LinkGeometry& g) {
    Frame f;
    f.k = b.wavenumber();
    f.w1 = beamwidth(b, g.d1);
    f.R1 = curvature_radius(b, g.d1);
    f.d2 = g.d2;
    f.si = g.sin_theta_i();
    f.mu_i = g.mu_i();
    f.sr = g.sin_theta_r();
    f.mu_r = g.mu_r();
    f.h_r = f.mu_r * g.d2;
    f.phi_x = irs.phi_x;
    f.phi_y = irs.phi_y;
    f.amp0 = std::sqrt(4.0 * b.impedance * b.power * f.si / (pi * f.w1 * f.w1));
    f.eta_p2 = 2.0 * b.impedance * b.power;
    return f;
}

struct ApertureGrid {
    std::vector<double> x, y;        // node-plane sample coordinates
    std::vector<double> wre, wim;    // Simpson weight * incident field * profile
    std::size_t nx = 0, ny = 0;
};

// Residual phase span along one aperture axis after the profile cancels
// the tilt: quadratic wavefront term plus the worst-case lens-offset
// linear term.
inline double axis_span(const Frame& f, double half, double sin_in, double sin_out,
                        double lens_reach) {
    const double quad = (sin_in * sin_in / (2.0 * f.R1) + sin_out * sin_out / (2.0 * f.d2)) *
                        half * half;
    const double lin = 2.0 * half * sin_out * lens_reach / f.d2;
    return f.k * (quad + lin);
}

inline std::size_t make_odd(std::size_t n) { return (n % 2 == 0) ? n + 1 : n; }

inline ApertureGrid build_aperture_grid(const Frame& f, const IrsSpec& irs,
                                        const QuadratureSpec& q, double lens_reach,
                                        double refine = 1.0) {
    const double half_x = std::min(0.5 * irs.l_x, envelope_clip_sigmas * f.w1 / f.si);
    const double half_y = std::min(0.5 * irs.l_y, envelope_clip_sigmas * f.w1);
    const double span_x = axis_span(f, half_x, f.si, f.sr, lens_reach);
    const double span_y = axis_span(f, half_y, 1.0, 1.0, lens_reach);
    const auto count = [&](double span) {
        const double need = q.oversampling_factor * span / two_pi;
        std::size_t n = std::max<std::size_t>(q.irs_samples_per_axis,
                                              std::size_t(std::ceil(need)) + 1);
        n = std::size_t(std::ceil(double(n) * refine));
        if (n > 40000) throw std::runtime_error("wave oracle: aperture grid exceeds sanity cap");
        return make_odd(n);
    };
    const SimpsonGrid gx = simpson_grid(-half_x, half_x, count(span_x));
    const SimpsonGrid gy = simpson_grid(-half_y, half_y, count(span_y));

    ApertureGrid a;
    a.nx = gx.x.size();
    a.ny = gy.x.size();
    a.x = gx.x;
    a.y = gy.x;
    a.wre.resize(a.nx * a.ny);
    a.wim.resize(a.nx * a.ny);
    const double inv_w2 = 1.0 / (f.w1 * f.w1);
    for (std::size_t j = 0; j < a.ny; ++j) {
        const double y = a.y[j];
        for (std::size_t i = 0; i < a.nx; ++i) {
            const double x = a.x[i];
            const double rho2 = x * x * f.si * f.si + y * y;
            const double amp = f.amp0 * std::exp(-rho2 * inv_w2) * gx.w[i] * gy.w[j];
            // incident linear + wavefront phase, minus the surface profile
            const double phase = f.k * (x * f.mu_i - rho2 / (2.0 * f.R1) -
                                        f.phi_x * x - f.phi_y * y);
            double s, c;
            sincos_reduced(reduce_phase(phase), s, c);
            a.wre[j * a.nx + i] = amp * c;
            a.wim[j * a.nx + i] = amp * s;
        }
    }
    return a;
}

// Complex aperture sum for one lens-plane point (x_p, y_p); the propagation
// kernel uses the exact 3-D distance with the constant d2 removed.
inline std::complex<double> aperture_sum(const Frame& f, const ApertureGrid& a,
                                         double x_p, double y_p) {
    const double hx = f.h_r + x_p * f.sr;  // x-component of the lens point
    const double p2 = x_p * x_p + y_p * y_p;
    double acc_re = 0.0, acc_im = 0.0;
    for (std::size_t j = 0; j < a.ny; ++j) {
        const double y = a.y[j];
        const double c0 = p2 + y * y - 2.0 * y * y_p;
        const double* wre = &a.wre[j * a.nx];
        const double* wim = &a.wim[j * a.nx];
        double row_re = 0.0, row_im = 0.0;
        for (std::size_t i = 0; i < a.nx; ++i) {
            const double x = a.x[i];
            const double d2sq_excess = c0 + x * (x - 2.0 * hx);
            const double dist = std::sqrt(f.d2 * f.d2 + d2sq_excess);
            const double drel = d2sq_excess / (dist + f.d2);
            const double r = reduce_phase(-f.k * drel);
            double s, c;
            sincos_reduced(r, s, c);
            row_re += wre[i] * c - wim[i] * s;
            row_im += wre[i] * s + wim[i] * c;
        }
        acc_re += row_re;
        acc_im += row_im;
    }
    return {acc_re, acc_im};
}

inline std::complex<double> scaled_field(const Frame& f, std::complex<double> sum,
                                         const BeamParams& b) {
    // C_r = sqrt(sin theta_r) / (j lambda d2)
    const std::complex<double> c_r =
        std::sqrt(f.sr) / (std::complex<double>(0.0, 1.0) * b.wavelength * f.d2);
    return c_r * sum;
}

struct LensGrid {
    std::vector<double> x, y;
    std::vector<double> area;  // cell-in-disc area, row-major
    std::size_t nx = 0, ny = 0;
};

inline LensGrid build_lens_grid(const Frame& f, const IrsSpec& irs, const LensSpec& lens,
                                const QuadratureSpec& q) {
    const double a = lens.radius;
    const double half_x = std::min(0.5 * irs.l_x, envelope_clip_sigmas * f.w1 / f.si);
    const double half_y = std::min(0.5 * irs.l_y, envelope_clip_sigmas * f.w1);
    const auto per_axis = [&](double half, double sin_in, double sin_out) {
        std::size_t n = q.lens_samples_per_axis;
        const double edge_amp = std::exp(-(half * sin_in / f.w1) * (half * sin_in / f.w1));
        if (edge_amp > 0.02) {
            // aperture-edge diffraction fringes need resolving
            const double lam = two_pi / f.k;
            const double fringe = lam * f.d2 / (2.0 * half * std::max(sin_out, 1e-9));
            n = std::max(n, std::size_t(std::ceil(2.0 * a / fringe * 4.0)));
        }
        if (n > 4096) throw std::runtime_error("wave oracle: lens grid exceeds sanity cap");
        return n;
    };
    LensGrid g;
    g.nx = per_axis(half_x, f.si, f.sr);
    g.ny = per_axis(half_y, 1.0, 1.0);
    g.x.resize(g.nx);
    g.y.resize(g.ny);
    const double dx = 2.0 * a / double(g.nx);
    const double dy = 2.0 * a / double(g.ny);
    for (std::size_t i = 0; i < g.nx; ++i) g.x[i] = -a + (double(i) + 0.5) * dx;
    for (std::size_t j = 0; j < g.ny; ++j) g.y[j] = -a + (double(j) + 0.5) * dy;
    g.area.assign(g.nx * g.ny, 0.0);
    const double r2 = a * a;
    for (std::size_t j = 0; j < g.ny; ++j) {
        for (std::size_t i = 0; i < g.nx; ++i) {
            const double xc = g.x[i], yc = g.y[j];
            const double ax = std::abs(xc) + 0.5 * dx, ay = std::abs(yc) + 0.5 * dy;
            const double bx = std::abs(xc) - 0.5 * dx, by = std::abs(yc) - 0.5 * dy;
            if (ax * ax + ay * ay <= r2) {
                g.area[j * g.nx + i] = dx * dy;  // fully inside
            } else if (bx * bx + by * by >= r2) {
                g.area[j * g.nx + i] = 0.0;  // fully outside
            } else {
                int inside = 0;  // boundary cell: 8x8 sub-sample
                for (int sj = 0; sj < 8; ++sj)
                    for (int si = 0; si < 8; ++si) {
                        const double xs = xc + dx * ((si + 0.5) / 8.0 - 0.5);
                        const double ys = yc + dy * ((sj + 0.5) / 8.0 - 0.5);
                        if (xs * xs + ys * ys <= r2) ++inside;
                    }
                g.area[j * g.nx + i] = dx * dy * double(inside) / 64.0;
            }
        }
    }
    return g;
}

// Integral of |E_r|^2 over the lens disc for a fixed aperture grid.  With
// the in-plane profile (phi_y = 0) the field is even in y_p and only half
// the rows are evaluated.
inline double lens_power_integral(const Frame& f, const ApertureGrid& ap,
                                  const LensGrid& lg, const BeamParams& b) {
    const double field_scale = f.sr / (b.wavelength * b.wavelength * f.d2 * f.d2);
    const bool mirror = (f.phi_y == 0.0);
    const std::size_t rows = mirror ? (lg.ny + 1) / 2 : lg.ny;
    std::vector<double> row_sum(rows, 0.0);
    parallel_for(rows, [&](std::size_t j) {
        const std::size_t j_mirror = mirror ? lg.ny - 1 - j : j;
        double acc = 0.0;
        for (std::size_t i = 0; i < lg.nx; ++i) {
            double area = lg.area[j * lg.nx + i];
            if (j_mirror != j) area += lg.area[j_mirror * lg.nx + i];
            if (area == 0.0) continue;
            const auto s = aperture_sum(f, ap, lg.x[i], lg.y[j]);
            acc += area * std::norm(s);
        }
        row_sum[j] = acc;
    });
    double total = 0.0;
    for (std::size_t j = 0; j < rows; ++j) total += row_sum[j];
    return field_scale * total / f.eta_p2;
}

// Largest possible |aperture sum|, for scale-aware convergence floors.
inline double amplitude_bound(const ApertureGrid& a) {
    double s = 0.0;
    for (std::size_t i = 0; i < a.wre.size(); ++i) s += std::hypot(a.wre[i], a.wim[i]);
    return s;
}

} // namespace wave_detail

// Reflected field at one lens-plane point; refines the aperture grid once
// and errors out if |E_r|^2 has not settled to refinement_tolerance.
inline std::complex<double> reflected_field(const IrsSpec& irs, const BeamParams& b,
                                            const LinkGeometry& g, double x_p, double y_p,
                                            const QuadratureSpec& q = {}) {
    q.validate();
    const auto f = wave_detail::make_frame(irs, b, g);
    const double reach = std::max(std::abs(x_p), std::abs(y_p));
    const auto coarse = wave_detail::build_aperture_grid(f, irs, q, reach);
    const auto fine = wave_detail::build_aperture_grid(f, irs, q, reach, 2.0);
    const auto e0 = wave_detail::scaled_field(f, wave_detail::aperture_sum(f, coarse, x_p, y_p), b);
    const auto e1 = wave_detail::scaled_field(f, wave_detail::aperture_sum(f, fine, x_p, y_p), b);
    const double i0 = std::norm(e0), i1 = std::norm(e1);
    // pattern nulls carry no usable relative scale; floor against the peak bound
    const auto peak = wave_detail::scaled_field(
        f, std::complex<double>(wave_detail::amplitude_bound(fine), 0.0), b);
    const double floor = 1e-6 * std::norm(peak);
    if (std::abs(i1 - i0) > q.refinement_tolerance * std::max(i1, floor))
        throw std::runtime_error("reflected_field: quadrature not converged; raise sampling");
    return e1;
}

struct GmlNumeric {
    double value = 0.0;     // refined-grid result
    double coarse = 0.0;    // base-grid result
    double rel_change = 0.0;
    std::size_t aperture_nx = 0, aperture_ny = 0;
    std::size_t lens_nx = 0, lens_ny = 0;
};

inline GmlNumeric gml_numeric_detailed(const IrsSpec& irs, const LensSpec& lens,
                                       const BeamParams& b, const LinkGeometry& g,
                                       const QuadratureSpec& q = {}) {
    q.validate();
    const auto f = wave_detail::make_frame(irs, b, g);
    const auto lg = wave_detail::build_lens_grid(f, irs, lens, q);
    const auto coarse = wave_detail::build_aperture_grid(f, irs, q, lens.radius);
    const auto fine = wave_detail::build_aperture_grid(f, irs, q, lens.radius, 2.0);
    GmlNumeric r;
    r.coarse = wave_detail::lens_power_integral(f, coarse, lg, b);
    r.value = wave_detail::lens_power_integral(f, fine, lg, b);
    r.rel_change = std::abs(r.value - r.coarse) / std::max(r.value, 1e-300);
    r.aperture_nx = fine.nx;
    r.aperture_ny = fine.ny;
    r.lens_nx = lg.nx;
    r.lens_ny = lg.ny;
    return r;
}

inline double gml_numeric(const IrsSpec& irs, const LensSpec& lens, const BeamParams& b,
                          const LinkGeometry& g, const QuadratureSpec& q = {}) {
    const auto r = gml_numeric_detailed(irs, lens, b, g, q);
    if (r.rel_change > q.refinement_tolerance)
        throw std::runtime_error("gml_numeric: quadrature not converged; raise sampling");
    return r.value;
}

// Plane-wave (sinc) model of the reflected field, valid for apertures well
// inside the beam footprint.  The plane-wave amplitude matches the power
// actually incident on the aperture.
inline std::complex<double> sinc_field(const IrsSpec& irs, const BeamParams& b,
                                       const LinkGeometry& g, double x_p, double y_p) {
    const double g2 = gml_linear(irs, b, g);
    const double e_o = std::sqrt(2.0 * b.impedance * b.power * g2 / (irs.l_x * irs.l_y));
    const double k = b.wavenumber();
    const double sr = g.sin_theta_r();
    const double ax = k * irs.l_x * sr * x_p / (2.0 * g.d2);
    const double ay = k * irs.l_y * y_p / (2.0 * g.d2);
    const std::complex<double> c_tilde =
        irs.l_x * irs.l_y * e_o * std::sqrt(sr) /
        (std::complex<double>(0.0, 1.0) * b.wavelength * g.d2);
    return c_tilde * sinc_unnormalized(ax) * sinc_unnormalized(ay);
}

struct FieldMap {
    std::size_t nx = 0, ny = 0;
    double x0 = 0.0, y0 = 0.0;  // first sample coordinates
    double dx = 0.0, dy = 0.0;
    std::vector<std::complex<double>> samples;  // row-major, y outer
};

// Field sampled on the lens bounding square (covers the full disc).
inline FieldMap compute_field_map(const IrsSpec& irs, const LensSpec& lens,
                                  const BeamParams& b, const LinkGeometry& g,
                                  std::size_t n, const QuadratureSpec& q = {}) {
    q.validate();
    if (n < 2) throw std::domain_error("compute_field_map: n must be >= 2");
    const auto f = wave_detail::make_frame(irs, b, g);
    const auto ap = wave_detail::build_aperture_grid(f, irs, q, lens.radius, 2.0);
    FieldMap m;
    m.nx = m.ny = n;
    m.dx = m.dy = 2.0 * lens.radius / double(n - 1);
    m.x0 = m.y0 = -lens.radius;
    m.samples.resize(n * n);
    parallel_for(n, [&](std::size_t j) {
        const double y = m.y0 + m.dy * double(j);
        for (std::size_t i = 0; i < n; ++i) {
            const double x = m.x0 + m.dx * double(i);
            m.samples[j * n + i] =
                wave_detail::scaled_field(f, wave_detail::aperture_sum(f, ap, x, y), b);
        }
    });
    return m;
}

// Matrix text dump: '#' header with the grid metadata, then one row per
// line with tab-separated "re,im" pairs.
inline void dump_field_map(const FieldMap& m, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("dump_field_map: cannot open " + path);
    out.precision(17);
    out << "# field map: nx=" << m.nx << " ny=" << m.ny << " x0=" << m.x0 << " y0=" << m.y0
        << " dx=" << m.dx << " dy=" << m.dy << "\n";
    out << "# row-major, y varies by row; entries are re,im of E_r [V/m]\n";
    for (std::size_t j = 0; j < m.ny; ++j) {
        for (std::size_t i = 0; i < m.nx; ++i) {
            const auto& v = m.samples[j * m.nx + i];
            if (i) out << '\t';
            out << v.real() << ',' << v.imag();
        }
        out << '\n';
    }
    if (!out) throw std::runtime_error("dump_field_map: write failed for " + path);
}

} // namespace optirs

#endif
