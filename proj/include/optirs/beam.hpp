// SPDX-License-Identifier: Apache-2.0
//
// Gaussian-beam propagation and the incident field on the (tilted) node
// plane.  The field model keeps the three pieces the closed forms rely on:
// the on-axis path, the plane-wave linear term in x_r, and the quadratic
// wavefront term with the projected transverse coordinates
// (x_r sin(theta_i), y_r) and radius R(d1).  The constant Gouy phase is
// dropped; it cancels in every |E|^2 quantity.

#ifndef OPTIRS_BEAM_HPP
#define OPTIRS_BEAM_HPP

#include <cmath>
#include <stdexcept>

#include "optirs/geometry.hpp"
#include "optirs/special.hpp"

namespace optirs {

struct BeamParams {
    double wavelength = 1550e-9;  // [m]
    double waist = 2.5e-3;        // w_o at the source [m]
    double power = 1e-3;          // total transmit power [W]
    double impedance = 377.0;     // free-space impedance [ohm]

    double wavenumber() const { return 2.0 * pi / wavelength; }
    double rayleigh_range() const { return pi * waist * waist / wavelength; }

    void validate() const {
        if (!(wavelength > 0.0)) throw std::domain_error("BeamParams: wavelength must be positive");
        if (!(waist > 0.0)) throw std::domain_error("BeamParams: waist must be positive");
        if (!(power > 0.0)) throw std::domain_error("BeamParams: power must be positive");
        if (!(impedance > 0.0)) throw std::domain_error("BeamParams: impedance must be positive");
        if (waist < 10.0 * wavelength)
            throw std::domain_error("BeamParams: waist must be >= 10 wavelengths for the paraxial beam model");
    }
};

inline double beamwidth(const BeamParams& b, double z) {
    if (z < 0.0) throw std::domain_error("beamwidth: z must be non-negative");
    const double r = z / b.rayleigh_range();
    return b.waist * std::sqrt(1.0 + r * r);
}

inline double curvature_radius(const BeamParams& b, double z) {
    if (!(z > 0.0)) throw std::domain_error("curvature_radius: diverges at z = 0");
    const double r = b.rayleigh_range() / z;
    return z * (1.0 + r * r);
}

struct IncidentFieldSample {
    double amplitude = 0.0;  // [V/m]
    double phase = 0.0;      // [rad], relative convention (constant offsets dropped)
};

// Squared amplitude of the incident field at (x_r, y_r) on the node plane:
//   |E_in|^2 = 4 eta P sin(theta_i) / (pi w^2(d1))
//              * exp(-2 (x_r^2 sin^2(theta_i) + y_r^2) / w^2(d1)).
inline double incident_intensity_sq(const BeamParams& b, const LinkGeometry& g,
                                    double x_r, double y_r) {
    const double w = beamwidth(b, g.d1);
    const double si = g.sin_theta_i();
    const double q = (x_r * x_r * si * si + y_r * y_r) / (w * w);
    return 4.0 * b.impedance * b.power * si / (pi * w * w) * std::exp(-2.0 * q);
}

inline IncidentFieldSample incident_field_on_irs(const BeamParams& b,
                                                 const LinkGeometry& g,
                                                 double x_r, double y_r) {
    if (!std::isfinite(x_r) || !std::isfinite(y_r))
        throw std::domain_error("incident_field_on_irs: coordinates must be finite");
    IncidentFieldSample s;
    s.amplitude = std::sqrt(incident_intensity_sq(b, g, x_r, y_r));
    const double si = g.sin_theta_i();
    const double R = curvature_radius(b, g.d1);
    const double quad = (x_r * x_r * si * si + y_r * y_r) / (2.0 * R);
    s.phase = -b.wavenumber() * (g.d1 - x_r * g.mu_i() + quad);
    return s;
}

} // namespace optirs

#endif
