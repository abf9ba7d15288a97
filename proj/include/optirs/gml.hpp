// SPDX-License-Identifier: Apache-2.0
//
// Geometric-loss closed forms for the relay hops and the IRS link, and the
// piecewise power-scaling map with its boundary sizes.
//
// Naming: gml_quadratic_exact is the sinc-integral form (small IRS, finite
// lens), gml_linear is the incident-power erf product, gml_saturated the
// large-IRS lens-capture form.  The *_asymptotic variants are their
// small-size / far-field limits, which scale exactly as area^2 and area^1.
//
// The piecewise map in regime_report evaluates every branch and boundary
// with the far-field beam parameters (w -> lambda d1 / (pi w_o),
// R -> d1).  Written that way the map is exactly continuous at S1, S2 and
// S3, its log-log slopes are exactly 2 / 1 / 0, and its per-regime optima
// coincide with the closed-form placement results, which are derived under
// the same substitution.  The individual operations above keep the exact
// w(d1), R(d1).

#ifndef OPTIRS_GML_HPP
#define OPTIRS_GML_HPP

#include <cmath>
#include <optional>
#include <stdexcept>

#include "optirs/beam.hpp"
#include "optirs/geometry.hpp"
#include "optirs/special.hpp"

namespace optirs {

struct IrsSpec {
    double l_x = 0.0;    // aperture length along x_r [m]
    double l_y = 0.0;    // aperture length along y_r [m]
    double phi_x = 0.0;  // linear phase-profile gradient, x_r
    double phi_y = 0.0;  // linear phase-profile gradient, y_r
    double phi_0 = 0.0;  // constant phase offset [m]

    double area() const { return l_x * l_y; }

    // Gradients that steer the incident beam axis onto the lens normal:
    // phi_x = cos(theta_i)cos(phi_i) + cos(theta_r)cos(phi_r), phi_y = 0
    // in the in-plane layout, phi_0 = d1 + d2.
    static IrsSpec for_link(double l_x, double l_y, const LinkGeometry& g) {
        IrsSpec s;
        s.l_x = l_x;
        s.l_y = l_y;
        s.phi_x = g.mu_i() + g.mu_r();
        s.phi_y = 0.0;
        s.phi_0 = g.d1 + g.d2;
        return s;
    }

    void validate(double wavelength) const {
        if (!(l_x > 0.0) || !(l_y > 0.0))
            throw std::domain_error("IrsSpec: aperture lengths must be positive");
        if (l_x < 100.0 * wavelength || l_y < 100.0 * wavelength)
            throw std::domain_error("IrsSpec: aperture must be >= 100 wavelengths for the continuous-surface model");
    }
};

struct LensSpec {
    double radius = 0.1;        // a [m]
    double responsivity = 1.0;  // zeta [A/W]

    double area() const { return pi * radius * radius; }

    void validate() const {
        if (!(radius > 0.0)) throw std::domain_error("LensSpec: radius must be positive");
        if (!(responsivity > 0.0)) throw std::domain_error("LensSpec: responsivity must be positive");
    }
};

// Incident beam footprint on the node plane.
inline double beam_footprint_x(const BeamParams& b, const LinkGeometry& g) {
    return beamwidth(b, g.d1) / g.sin_theta_i();
}
inline double beam_footprint_y(const BeamParams& b, const LinkGeometry& g) {
    return beamwidth(b, g.d1);
}

// Relay hop: circular lens of radius a capturing a Gaussian beam at
// distance d, via the equal-area square lens of side a sqrt(pi).
inline double relay_hop_gml(double lens_radius, const BeamParams& b, double d) {
    if (!(d > 0.0)) throw std::domain_error("relay_hop_gml: distance must be positive");
    const double e = std::erf(std::sqrt(pi / 2.0) * lens_radius / beamwidth(b, d));
    return e * e;
}

// Fraction of the transmit power incident on the IRS aperture.
inline double gml_linear(const IrsSpec& irs, const BeamParams& b, const LinkGeometry& g) {
    const double w = beamwidth(b, g.d1);
    const double c = std::sqrt(2.0) / 2.0;
    return std::erf(c * irs.l_x * g.sin_theta_i() / w) * std::erf(c * irs.l_y / w);
}

struct GmlValue {
    double value = 0.0;
    bool within_validity = true;  // aperture/lens smallness preconditions held
};

struct GmlLimits {
    double much_less = 0.2;    // ratio accepted for "<<"
    double much_greater = 10;  // ratio required for ">>"
};

// Small-IRS sinc-field form: the plane-wave patch reflected by the aperture
// produces a sinc^2 pattern, integrated over the equal-area square lens.
inline GmlValue gml_quadratic_exact(const IrsSpec& irs, const LensSpec& lens,
                                    const BeamParams& b, const LinkGeometry& g,
                                    const GmlLimits& lim = {}) {
    const double k = b.wavenumber();
    const double sr = g.sin_theta_r();
    const double a = lens.radius;
    const double g2 = gml_linear(irs, b, g);
    const double c1 = k * sr * irs.l_x / (2.0 * g.d2);
    const double c2 = k * irs.l_y / (2.0 * g.d2);
    const double x1 = c1 * a * std::sqrt(pi);
    const double x2 = c2 * a * std::sqrt(pi);
    const double fx = x1 * sine_integral(x1) + std::cos(x1) - 1.0;
    const double fy = x2 * sine_integral(x2) + std::cos(x2) - 1.0;
    const double C1 = 16.0 * g.d2 * g.d2 * g2 /
                      (pi * pi * pi * a * a * k * k * irs.l_x * irs.l_y * std::abs(sr));
    GmlValue out;
    out.value = C1 * fx * fy;
    // received footprint ~ the sinc main lobe, half-widths pi/c1 and pi/c2
    out.within_validity = irs.l_x <= lim.much_less * beam_footprint_x(b, g) &&
                          irs.l_y <= lim.much_less * beam_footprint_y(b, g) &&
                          lens.area() <= lim.much_less * pi * (pi / c1) * (pi / c2);
    return out;
}

// Quadratic power-scaling limit:
//   G1 = 4 pi * (4 pi Sigma^2 |sin r||sin i| / lambda^4) * g_LS * g_PD.
inline double gml_quadratic_asymptotic(const IrsSpec& irs, const LensSpec& lens,
                                       const BeamParams& b, const LinkGeometry& g) {
    const double lam = b.wavelength;
    const double sig = irs.area();
    const double g_ls = 2.0 * pi * b.waist * b.waist / (4.0 * pi * g.d1 * g.d1);
    const double g_pd = pi * lens.radius * lens.radius / (4.0 * pi * g.d2 * g.d2);
    return 4.0 * pi *
           (4.0 * pi * sig * sig * std::abs(g.sin_theta_r()) * std::abs(g.sin_theta_i()) /
            (lam * lam * lam * lam)) *
           g_ls * g_pd;
}

// Linear power-scaling limit: G2 = (4 pi Sigma |sin i| / lambda^2) * g_LS.
inline double gml_linear_asymptotic(const IrsSpec& irs, const BeamParams& b,
                                    const LinkGeometry& g) {
    const double lam = b.wavelength;
    const double g_ls = 2.0 * pi * b.waist * b.waist / (4.0 * pi * g.d1 * g.d1);
    return 4.0 * pi * irs.area() * std::abs(g.sin_theta_i()) / (lam * lam) * g_ls;
}

namespace detail {

struct SatWidths {
    double w_eq_x;
    double w_eq_y;
};

inline SatWidths saturated_widths(double w_d1, double R_d1, double d2,
                                  double si, double sr, double k) {
    const double lam1 = 2.0 * d2 / (k * w_d1 * w_d1);
    const double lam2 = d2 / R_d1;
    const double q = (si * si) / (sr * sr);
    SatWidths w;
    w.w_eq_x = w_d1 * std::abs(sr) / std::abs(si) *
               std::sqrt((lam1 * q) * (lam1 * q) + (lam2 * q + 1.0) * (lam2 * q + 1.0));
    w.w_eq_y = w_d1 * std::sqrt(lam1 * lam1 + (lam2 + 1.0) * (lam2 + 1.0));
    return w;
}

inline double saturated_from_widths(const SatWidths& w, double a) {
    const double c = std::sqrt(pi / 2.0);
    return std::erf(c * a / w.w_eq_x) * std::erf(c * a / w.w_eq_y);
}

} // namespace detail

// Large-IRS lens capture; independent of the IRS size.
inline double gml_saturated(const LensSpec& lens, const BeamParams& b,
                            const LinkGeometry& g) {
    const auto w = detail::saturated_widths(beamwidth(b, g.d1), curvature_radius(b, g.d1),
                                            g.d2, g.sin_theta_i(), g.sin_theta_r(),
                                            b.wavenumber());
    return detail::saturated_from_widths(w, lens.radius);
}

inline detail::SatWidths saturated_equivalent_widths(const LensSpec&, const BeamParams& b,
                                                     const LinkGeometry& g) {
    return detail::saturated_widths(beamwidth(b, g.d1), curvature_radius(b, g.d1), g.d2,
                                    g.sin_theta_i(), g.sin_theta_r(), b.wavenumber());
}

enum class Regime { Quadratic, Linear, Saturated };

inline const char* regime_name(Regime r) {
    switch (r) {
        case Regime::Quadratic: return "quadratic";
        case Regime::Linear: return "linear";
        default: return "saturated";
    }
}

struct RegimeReport {
    Regime regime = Regime::Quadratic;
    double s1 = 0.0;               // quadratic->linear boundary area [m^2]
    std::optional<double> s2;      // linear->saturated boundary area [m^2]
    std::optional<double> s3;      // quadratic->saturated boundary area [m^2]
    double gml = 0.0;
};

namespace detail {

// Branch values of the piecewise map, far-field normalization.
struct MapPieces {
    double g1;       // quadratic branch at the requested area
    double g2;       // linear branch at the requested area
    double g3;       // saturated value
    double s1;
    double s2;
    double s3;
    bool three_branch;
};

inline MapPieces map_pieces(const IrsSpec& irs, const LensSpec& lens,
                            const BeamParams& b, const LinkGeometry& g) {
    const double lam = b.wavelength;
    const double k = b.wavenumber();
    const double si = g.sin_theta_i();
    const double sr = g.sin_theta_r();
    const double a = lens.radius;
    const double w_ff = lam * g.d1 / (pi * b.waist);

    MapPieces m;
    const auto wid = saturated_widths(w_ff, g.d1, g.d2, si, sr, k);
    m.g3 = saturated_from_widths(wid, a);
    m.s1 = lam * lam * g.d2 * g.d2 / (pi * a * a * std::abs(sr));
    m.s2 = pi * m.g3 * w_ff * w_ff / (2.0 * std::abs(si));
    m.s3 = std::sqrt(m.g3) * lam * g.d2 * w_ff / (a * std::sqrt(2.0 * si * sr));
    m.three_branch = m.g3 >= 2.0 * g.d2 * g.d2 * b.waist * b.waist * si /
                                 (g.d1 * g.d1 * a * a * sr);
    const double sig = irs.area();
    m.g2 = 2.0 * sig * si / (pi * w_ff * w_ff);
    m.g1 = m.g2 * sig / m.s1;  // g1/g2 = Sigma/S1 by construction
    return m;
}

} // namespace detail

// Piecewise power-scaling map: regime, boundary sizes and the GML value.
inline RegimeReport regime_report(const IrsSpec& irs, const LensSpec& lens,
                                  const BeamParams& b, const LinkGeometry& g) {
    const auto m = detail::map_pieces(irs, lens, b, g);
    const double sig = irs.area();
    RegimeReport r;
    r.s1 = m.s1;
    if (m.three_branch) {
        r.s2 = m.s2;
        if (sig < m.s1) {
            r.regime = Regime::Quadratic;
            r.gml = m.g1;
        } else if (sig <= m.s2) {
            r.regime = Regime::Linear;
            r.gml = m.g2;
        } else {
            r.regime = Regime::Saturated;
            r.gml = m.g3;
        }
    } else {
        r.s3 = m.s3;
        if (sig <= m.s3) {
            r.regime = Regime::Quadratic;
            r.gml = m.g1;
        } else {
            r.regime = Regime::Saturated;
            r.gml = m.g3;
        }
    }
    return r;
}

} // namespace optirs

#endif
