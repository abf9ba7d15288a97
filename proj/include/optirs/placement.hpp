// SPDX-License-Identifier: Apache-2.0
//
// Optimal node placement on the constant-path-length ellipse: closed-form
// optima per power-scaling regime, the relay midpoint result, and a grid
// sweep of the exact outage as the verifying oracle.
//
// The closed forms come from the stationary points of the far-field branch
// formulas restricted to the ellipse, parameterized by the first hop d1:
//   quadratic:  d1 = d3/2 -+ sqrt(2 rho1)/4,  rho1 = 3 L_tr^2 - d3^2
//   linear:     d1 = (5 d3 - rho2)/8,         rho2 = sqrt(d3^2 + 24 L_tr^2)
//   saturated:  d1 = d3/2
// Positions are recovered through the ellipse parameterization, so every
// returned point satisfies the constraint by construction.

#ifndef OPTIRS_PLACEMENT_HPP
#define OPTIRS_PLACEMENT_HPP

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "optirs/beam.hpp"
#include "optirs/geometry.hpp"
#include "optirs/gml.hpp"
#include "optirs/outage.hpp"
#include "optirs/turbulence.hpp"

namespace optirs {

struct PlacementResult {
    std::vector<std::pair<double, double>> positions;  // (x_o*, z_o*)
    Regime regime = Regime::Saturated;
    double objective = 0.0;        // GML (closed form) or outage (sweep)
    bool closed_form_valid = true; // false when the sweep fallback was used
};

inline PlacementResult optimal_relay_position(double d3, double l_tr) {
    if (!(d3 > l_tr) || !(l_tr > 0.0))
        throw std::domain_error("optimal_relay_position: requires d3 > L_tr > 0");
    PlacementResult r;
    r.positions = {{0.0, ellipse_height(d3, l_tr)}};
    r.regime = Regime::Saturated;  // not size-dependent; midpoint always
    return r;
}

namespace detail {

inline std::vector<double> optimal_hop_splits(Regime regime, double d3, double l_tr) {
    switch (regime) {
        case Regime::Quadratic: {
            const double rho1 = 3.0 * l_tr * l_tr - d3 * d3;
            if (rho1 < 0.0) return {};  // complex-valued stationary points
            const double off = std::sqrt(2.0 * rho1) / 4.0;
            return {0.5 * d3 - off, 0.5 * d3 + off};
        }
        case Regime::Linear: {
            const double rho2 = std::sqrt(d3 * d3 + 24.0 * l_tr * l_tr);
            return {(5.0 * d3 - rho2) / 8.0};
        }
        default:
            return {0.5 * d3};
    }
}

} // namespace detail

// Fixed-branch GML along the ellipse (the formula family the closed-form
// optima are stationary points of).
inline double branch_gml_at(Regime regime, const LinkGeometry& g, double l_x, double l_y,
                            const LensSpec& lens, const BeamParams& b) {
    const auto irs = IrsSpec::for_link(l_x, l_y, g);
    const auto m = detail::map_pieces(irs, lens, b, g);
    switch (regime) {
        case Regime::Quadratic: return m.g1;
        case Regime::Linear: return m.g2;
        default: return m.g3;
    }
}

// Closed-form optimum of the IRS position, branch selected by the regime at
// the symmetric midpoint (the boundary sizes drift with position; the sweep
// is the authoritative cross-check).  When the quadratic stationary points
// are complex (d3^2 > 3 L_tr^2) the result falls back to a fine GML sweep
// and is flagged.
inline PlacementResult optimal_irs_position(double l_x, double l_y, const LensSpec& lens,
                                            const BeamParams& b, double d3, double l_tr) {
    if (!(d3 > l_tr) || !(l_tr > 0.0))
        throw std::domain_error("optimal_irs_position: requires d3 > L_tr > 0");
    const auto mid = geometry_from_hop_split(0.5 * d3, d3, l_tr);
    const auto report = regime_report(IrsSpec::for_link(l_x, l_y, mid), lens, b, mid);

    PlacementResult r;
    r.regime = report.regime;
    auto splits = detail::optimal_hop_splits(report.regime, d3, l_tr);
    if (splits.empty()) {
        // sweep fallback over the fixed branch formula
        const auto grid = ellipse_sweep(d3, l_tr, 4096);
        double best = -1.0;
        std::pair<double, double> arg{0.0, 0.0};
        for (const auto& g : grid) {
            const double v = branch_gml_at(report.regime, g, l_x, l_y, lens, b);
            if (v > best) {
                best = v;
                arg = {g.x_o, g.z_o};
            }
        }
        r.positions = {arg};
        r.objective = best;
        r.closed_form_valid = false;
        return r;
    }
    for (double d1 : splits) {
        const auto g = geometry_from_hop_split(d1, d3, l_tr);
        r.positions.emplace_back(g.x_o, g.z_o);
        r.objective = std::max(r.objective, branch_gml_at(report.regime, g, l_x, l_y, lens, b));
    }
    std::sort(r.positions.begin(), r.positions.end());
    return r;
}

enum class SweepGmlMode {
    RegimeFixed,       // branch picked once at the midpoint, formula swept
    RegimePerPosition  // full piecewise map re-stitched at every position
};

struct PlacementScenario {
    double d3 = 2000.0;
    double l_tr = 1600.0;
    BeamParams beam1;          // Tx laser (feeds the IRS and hop 1)
    BeamParams beam2;          // relay laser (hop 2)
    LensSpec lens;
    double irs_l_x = 0.0, irs_l_y = 0.0;  // ignored for the relay sweep
    double cn2 = 50e-15;
    double kappa_db_per_m = 0.43e-3;
    double gamma_bar = 0.0;    // linear (not dB)
    double gamma_th = 0.0;
    double zeta = 1.0;
    SweepGmlMode gml_mode = SweepGmlMode::RegimeFixed;
};

// Exact outage across the ellipse; returns every grid argmin within 1e-6
// relative of the best objective.
inline PlacementResult sweep_verify(Architecture arch, const PlacementScenario& sc,
                                    std::size_t n) {
    if (n < 64) throw std::domain_error("sweep_verify: requires n >= 64");
    const auto grid = ellipse_sweep(sc.d3, sc.l_tr, n);

    Regime fixed_regime = Regime::Saturated;
    if (arch == Architecture::Irs) {
        const auto mid = geometry_from_hop_split(0.5 * sc.d3, sc.d3, sc.l_tr);
        fixed_regime =
            regime_report(IrsSpec::for_link(sc.irs_l_x, sc.irs_l_y, mid), sc.lens, sc.beam1, mid)
                .regime;
    }
    // end-to-end fading parameters do not depend on the split
    const auto turb3 = TurbulenceModel::for_hop(sc.cn2, sc.beam1.wavelength, sc.d3);
    const double h_p3 = atmospheric_loss(sc.kappa_db_per_m, sc.d3);

    std::vector<double> objective(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& g = grid[i];
        if (arch == Architecture::Irs) {
            double gml;
            if (sc.gml_mode == SweepGmlMode::RegimeFixed) {
                gml = branch_gml_at(fixed_regime, g, sc.irs_l_x, sc.irs_l_y, sc.lens, sc.beam1);
            } else {
                gml = regime_report(IrsSpec::for_link(sc.irs_l_x, sc.irs_l_y, g), sc.lens,
                                    sc.beam1, g)
                          .gml;
            }
            HopBudget path{gml, h_p3, turb3.alpha, turb3.beta};
            objective[i] = outage_irs(sc.gamma_bar, sc.gamma_th, path, sc.zeta);
        } else {
            const auto t1 = TurbulenceModel::for_hop(sc.cn2, sc.beam1.wavelength, g.d1);
            const auto t2 = TurbulenceModel::for_hop(sc.cn2, sc.beam2.wavelength, g.d2);
            HopBudget hop1{relay_hop_gml(sc.lens.radius, sc.beam1, g.d1),
                           atmospheric_loss(sc.kappa_db_per_m, g.d1), t1.alpha, t1.beta};
            HopBudget hop2{relay_hop_gml(sc.lens.radius, sc.beam2, g.d2),
                           atmospheric_loss(sc.kappa_db_per_m, g.d2), t2.alpha, t2.beta};
            objective[i] = outage_relay(sc.gamma_bar, sc.gamma_th, hop1, hop2, sc.zeta);
        }
    }
    const double best = *std::min_element(objective.begin(), objective.end());
    PlacementResult r;
    r.regime = fixed_regime;
    r.objective = best;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (objective[i] <= best * (1.0 + 1e-6))
            r.positions.emplace_back(grid[i].x_o, grid[i].z_o);
    }
    return r;
}

} // namespace optirs

#endif
