// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "optirs/placement.hpp"
#include "optirs/units.hpp"

using namespace optirs;

namespace {

BeamParams beam7mm() {
    BeamParams b;
    b.wavelength = 1550e-9;
    b.waist = 7e-3;
    b.power = 1e-3;
    b.impedance = 377.0;
    return b;
}

const LensSpec lens10cm{0.1, 1.0};

PlacementScenario fig4_scenario(double l, double gamma_th_db) {
    PlacementScenario ps;
    ps.d3 = 2000.0;
    ps.l_tr = 1600.0;
    ps.beam1 = beam7mm();
    ps.beam2 = beam7mm();
    ps.lens = lens10cm;
    ps.irs_l_x = ps.irs_l_y = l;
    ps.gamma_bar = db_to_linear(84.0);
    ps.gamma_th = db_to_linear(gamma_th_db);
    return ps;
}

double ellipse_residual(double x, double z, double d3, double l_tr) {
    return x * x / (d3 * d3) + z * z / (d3 * d3 - l_tr * l_tr) - 0.25;
}

} // namespace

TEST_CASE("relay optimum sits at the midpoint", "[placement]") {
    const auto r = optimal_relay_position(2000.0, 1600.0);
    REQUIRE(r.positions.size() == 1);
    CHECK(r.positions[0].first == 0.0);
    CHECK(r.positions[0].second == Catch::Approx(600.0).epsilon(1e-12));
    for (auto [d3, ltr] : {std::pair{3000.0, 1000.0}, {2500.0, 2400.0}})
        CHECK(optimal_relay_position(d3, ltr).positions[0].first == 0.0);
    CHECK_THROWS_AS(optimal_relay_position(1000.0, 1600.0), std::domain_error);
}

TEST_CASE("closed-form optima per regime", "[placement]") {
    const auto b = beam7mm();

    // quadratic: two symmetric optima toward the endpoints
    const auto quad = optimal_irs_position(1e-3, 1e-3, lens10cm, b, 2000.0, 1600.0);
    CHECK(quad.regime == Regime::Quadratic);
    REQUIRE(quad.positions.size() == 2);
    CHECK(quad.positions[0].first == Catch::Approx(-847.7913).epsilon(1e-5));
    CHECK(quad.positions[1].first == Catch::Approx(847.7913).epsilon(1e-5));
    CHECK(quad.positions[0].second == Catch::Approx(318.1981).epsilon(1e-5));

    // linear: single optimum beyond the Tx
    const auto lin = optimal_irs_position(0.03, 0.03, lens10cm, b, 2000.0, 1600.0);
    CHECK(lin.regime == Regime::Linear);
    REQUIRE(lin.positions.size() == 1);
    CHECK(lin.positions[0].first == Catch::Approx(-951.4843).epsilon(1e-5));
    CHECK(lin.positions[0].second == Catch::Approx(184.6213).epsilon(1e-4));

    // saturated: midpoint
    const auto sat = optimal_irs_position(1.0, 1.0, lens10cm, b, 2000.0, 1600.0);
    CHECK(sat.regime == Regime::Saturated);
    REQUIRE(sat.positions.size() == 1);
    CHECK(sat.positions[0].first == Catch::Approx(0.0).margin(1e-9));
    CHECK(sat.positions[0].second == Catch::Approx(600.0).epsilon(1e-9));

    // every optimum lies on the ellipse
    for (const auto* r : {&quad, &lin, &sat})
        for (const auto& p : r->positions)
            CHECK(std::abs(ellipse_residual(p.first, p.second, 2000.0, 1600.0)) < 1e-9);

    // the linear hop split is feasible
    const double d1_lin = std::hypot(lin.positions[0].first + 800.0, lin.positions[0].second);
    CHECK(d1_lin > 0.0);
    CHECK(d1_lin < 0.5 * (2000.0 + 1600.0));
}

TEST_CASE("closed-form optima are stationary along the ellipse", "[placement]") {
    const auto b = beam7mm();
    const double h = 0.1;
    const auto slope_at = [&](Regime reg, double l, double d1) {
        const auto gp = geometry_from_hop_split(d1 + h, 2000.0, 1600.0);
        const auto gm = geometry_from_hop_split(d1 - h, 2000.0, 1600.0);
        return (branch_gml_at(reg, gp, l, l, lens10cm, b) -
                branch_gml_at(reg, gm, l, l, lens10cm, b)) /
               (2.0 * h);
    };
    // quadratic stationary points: d3/2 and d3/2 -+ sqrt(2 rho1)/4
    const double off = std::sqrt(2.0 * (3.0 * 1600.0 * 1600.0 - 2000.0 * 2000.0)) / 4.0;
    for (double d1 : {1000.0, 1000.0 - off, 1000.0 + off}) {
        const auto g = geometry_from_hop_split(d1, 2000.0, 1600.0);
        const double scale = branch_gml_at(Regime::Quadratic, g, 1e-3, 1e-3, lens10cm, b);
        CHECK(std::abs(slope_at(Regime::Quadratic, 1e-3, d1)) < 1e-6 * scale);
    }
    // linear stationary point
    const double rho2 = std::sqrt(2000.0 * 2000.0 + 24.0 * 1600.0 * 1600.0);
    const double d1_lin = (5.0 * 2000.0 - rho2) / 8.0;
    {
        const auto g = geometry_from_hop_split(d1_lin, 2000.0, 1600.0);
        const double scale = branch_gml_at(Regime::Linear, g, 0.03, 0.03, lens10cm, b);
        CHECK(std::abs(slope_at(Regime::Linear, 0.03, d1_lin)) < 1e-6 * scale);
    }
    // saturated: the x equivalent width bottoms out at the midpoint, and the
    // y width is the beam width propagated over the full path, which does
    // not depend on the split at all
    const auto widths_at = [&](double d1) {
        const auto g = geometry_from_hop_split(d1, 2000.0, 1600.0);
        return saturated_equivalent_widths(lens10cm, b, g);
    };
    CHECK(widths_at(990.0).w_eq_x > widths_at(999.0).w_eq_x);
    CHECK(widths_at(1012.0).w_eq_x > widths_at(1001.0).w_eq_x);
    CHECK(widths_at(700.0).w_eq_y ==
          Catch::Approx(widths_at(1300.0).w_eq_y).epsilon(1e-12));
    CHECK(widths_at(700.0).w_eq_y == Catch::Approx(beamwidth(b, 2000.0)).epsilon(1e-12));
}

TEST_CASE("complex quadratic branch falls back to a sweep", "[placement]") {
    const auto b = beam7mm();
    // d3^2 > 3 L_tr^2 makes the quadratic stationary points complex
    const auto r = optimal_irs_position(1e-3, 1e-3, lens10cm, b, 2000.0, 1000.0);
    CHECK_FALSE(r.closed_form_valid);
    REQUIRE(r.positions.size() == 1);
    CHECK(std::abs(ellipse_residual(r.positions[0].first, r.positions[0].second, 2000.0,
                                    1000.0)) < 1e-9);
}

TEST_CASE("sweep argmins match the closed forms", "[placement]") {
    const std::size_t n = 128;
    const double step = 2000.0 / double(n + 1);

    // relay at the midpoint
    {
        const auto sweep = sweep_verify(Architecture::Relay, fig4_scenario(0.0, 30.0), n);
        for (const auto& p : sweep.positions) CHECK(std::abs(p.first) <= step + 1e-9);
    }
    // 1 mm: symmetric near-endpoint pair
    {
        const auto sweep = sweep_verify(Architecture::Irs, fig4_scenario(1e-3, -50.0), n);
        REQUIRE(sweep.positions.size() == 2);
        CHECK(std::abs(sweep.positions[0].first + 847.7913) <= step + 1e-9);
        CHECK(std::abs(sweep.positions[1].first - 847.7913) <= step + 1e-9);
    }
    // 3 cm: Tx side
    {
        const auto sweep = sweep_verify(Architecture::Irs, fig4_scenario(0.03, 30.0), n);
        REQUIRE_FALSE(sweep.positions.empty());
        CHECK(std::abs(sweep.positions[0].first + 951.4843) <= step + 1e-9);
    }
    // 1 m: midpoint
    {
        const auto sweep = sweep_verify(Architecture::Irs, fig4_scenario(1.0, 30.0), n);
        REQUIRE_FALSE(sweep.positions.empty());
        for (const auto& p : sweep.positions) CHECK(std::abs(p.first) <= step + 1e-9);
    }
    CHECK_THROWS_AS(sweep_verify(Architecture::Relay, fig4_scenario(0.0, 30.0), 32),
                    std::domain_error);
}

TEST_CASE("relay sweep objective is symmetric", "[placement]") {
    const auto ps = fig4_scenario(0.0, 30.0);
    const auto grid = ellipse_sweep(ps.d3, ps.l_tr, 16);
    const auto outage_at = [&](const LinkGeometry& g) {
        const auto t1 = TurbulenceModel::for_hop(ps.cn2, ps.beam1.wavelength, g.d1);
        const auto t2 = TurbulenceModel::for_hop(ps.cn2, ps.beam2.wavelength, g.d2);
        HopBudget h1{relay_hop_gml(ps.lens.radius, ps.beam1, g.d1),
                     atmospheric_loss(ps.kappa_db_per_m, g.d1), t1.alpha, t1.beta};
        HopBudget h2{relay_hop_gml(ps.lens.radius, ps.beam2, g.d2),
                     atmospheric_loss(ps.kappa_db_per_m, g.d2), t2.alpha, t2.beta};
        return outage_relay(ps.gamma_bar, ps.gamma_th, h1, h2);
    };
    for (std::size_t i = 0; i < 8; ++i) {
        const auto& g = grid[i];
        const auto& m = grid[15 - i];
        CHECK(m.d1 == Catch::Approx(g.d2).epsilon(1e-12));  // mirror swaps the hops
        CHECK(outage_at(m) == Catch::Approx(outage_at(g)).epsilon(1e-9));
    }
}

TEST_CASE("relay diversity beats the single-reflection path at any range", "[placement]") {
    // the end-to-end hop sees the full distance while each relay hop sees
    // half of it, so the relay's worst-hop fading order always wins
    for (double d3 : {500.0, 1000.0, 2000.0, 4000.0, 8000.0}) {
        const auto t_half = TurbulenceModel::for_hop(50e-15, 1550e-9, d3 / 2.0);
        const auto t_full = TurbulenceModel::for_hop(50e-15, 1550e-9, d3);
        const double d_rel = std::min(t_half.alpha, t_half.beta) / 2.0;
        const double d_irs = std::min(t_full.alpha, t_full.beta) / 2.0;
        CHECK(d_rel > d_irs);
    }
}
