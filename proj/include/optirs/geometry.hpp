// SPDX-License-Identifier: Apache-2.0
//
// Tx / node / Rx geometry on the constant-path-length ellipse.
//
// The Tx sits at (-L_tr/2, 0) and the Rx at (+L_tr/2, 0) in the xz-plane;
// the node (IRS or relay) center is at (x_o, z_o) with z_o > 0.  Node
// positions with d1 + d2 = d3 fixed trace the ellipse
//     x_o^2 / d3^2 + z_o^2 / (d3^2 - L_tr^2) = 1/4.
// theta_i / theta_r are the elevations of the incident beam axis and the
// lens normal above the node plane; the azimuths are fixed by the in-plane
// layout (0 when the horizontal direction cosine is positive, pi when the
// node sits beyond an endpoint), which the signed cosines mu_i / mu_r carry.

#ifndef OPTIRS_GEOMETRY_HPP
#define OPTIRS_GEOMETRY_HPP

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace optirs {

struct LinkGeometry {
    double d1 = 0.0;       // Tx-to-node distance [m]
    double d2 = 0.0;       // node-to-Rx distance [m]
    double d3 = 0.0;       // end-to-end, d1 + d2 [m]
    double l_tr = 0.0;     // Tx-to-Rx baseline [m]
    double x_o = 0.0;      // node center, along the baseline [m]
    double z_o = 0.0;      // node center, height above the baseline [m]
    double theta_i = 0.0;  // incidence elevation [rad]
    double theta_r = 0.0;  // reflection elevation [rad]

    double sin_theta_i() const { return z_o / d1; }
    double sin_theta_r() const { return z_o / d2; }
    // cos(theta) * cos(phi) with phi in {0, pi}
    double mu_i() const { return (x_o + 0.5 * l_tr) / d1; }
    double mu_r() const { return (0.5 * l_tr - x_o) / d2; }
    double semi_minor() const { return 0.5 * std::sqrt(d3 * d3 - l_tr * l_tr); }
};

inline double ellipse_height(double d3, double l_tr) {
    return 0.5 * std::sqrt(d3 * d3 - l_tr * l_tr);
}

// Node position from the hop split (d1, d3 - d1) on the ellipse:
//   x_o = (d1^2 - d2^2) / (2 L_tr),
//   z_o = H_e sqrt(1 - (d1^2 - d2^2)^2 / (d3^2 L_tr^2)).
inline void position_from_hop_split(double d1, double d3, double l_tr,
                                    double& x_o, double& z_o) {
    if (!(d3 > l_tr) || !(l_tr > 0.0))
        throw std::domain_error("position_from_hop_split: requires d3 > L_tr > 0");
    if (!(d1 > 0.0) || !(d1 < d3))
        throw std::domain_error("position_from_hop_split: requires 0 < d1 < d3");
    const double u = 2.0 * d1 - d3;  // d1 - d2
    if (std::abs(u) * d3 > d3 * l_tr)
        throw std::domain_error(
            "position_from_hop_split: |d1^2 - d2^2| > d3*L_tr, no point on the ellipse");
    x_o = u * d3 / (2.0 * l_tr);
    const double s = u / l_tr;
    z_o = ellipse_height(d3, l_tr) * std::sqrt(std::max(0.0, 1.0 - s * s));
}

inline LinkGeometry geometry_from_position(double x_o, double z_o, double l_tr) {
    if (!(z_o > 0.0))
        throw std::domain_error("geometry_from_position: node must sit above the baseline (z_o > 0)");
    if (!(l_tr > 0.0))
        throw std::domain_error("geometry_from_position: requires L_tr > 0");
    LinkGeometry g;
    g.l_tr = l_tr;
    g.x_o = x_o;
    g.z_o = z_o;
    g.d1 = std::hypot(x_o + 0.5 * l_tr, z_o);
    g.d2 = std::hypot(0.5 * l_tr - x_o, z_o);
    g.d3 = g.d1 + g.d2;
    g.theta_i = std::asin(std::min(1.0, z_o / g.d1));
    g.theta_r = std::asin(std::min(1.0, z_o / g.d2));
    return g;
}

inline LinkGeometry geometry_from_hop_split(double d1, double d3, double l_tr) {
    double x, z;
    position_from_hop_split(d1, d3, l_tr, x, z);
    return geometry_from_position(x, z, l_tr);
}

// n node positions with x_o uniformly spaced over the open interval
// (-d3/2, d3/2); endpoints excluded so z_o > 0 everywhere.
inline std::vector<LinkGeometry> ellipse_sweep(double d3, double l_tr, std::size_t n) {
    if (n < 2) throw std::domain_error("ellipse_sweep: requires n >= 2");
    std::vector<LinkGeometry> out;
    out.reserve(n);
    for (std::size_t k = 1; k <= n; ++k) {
        // uniform x is uniform d1: d1 = (d3 + 2 L_tr x / d3) / 2
        const double x = d3 * (double(k) / double(n + 1) - 0.5);
        const double d1 = 0.5 * (d3 + 2.0 * l_tr * x / d3);
        out.push_back(geometry_from_hop_split(d1, d3, l_tr));
    }
    return out;
}

} // namespace optirs

#endif
