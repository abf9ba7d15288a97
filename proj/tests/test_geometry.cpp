// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "optirs/geometry.hpp"
#include "optirs/rng.hpp"

using namespace optirs;

namespace {
double ellipse_residual(double x, double z, double d3, double l_tr) {
    return x * x / (d3 * d3) + z * z / (d3 * d3 - l_tr * l_tr) - 0.25;
}
} // namespace

TEST_CASE("position from hop split, canonical cases", "[geometry]") {
    double x, z;
    position_from_hop_split(1000.0, 2000.0, 1600.0, x, z);
    CHECK(x == Catch::Approx(0.0).margin(1e-9));
    CHECK(z == Catch::Approx(600.0).epsilon(1e-12));

    // symmetric split lands on the top of the ellipse for any valid pair
    position_from_hop_split(1500.0, 3000.0, 2500.0, x, z);
    CHECK(x == Catch::Approx(0.0).margin(1e-9));
    CHECK(z == Catch::Approx(0.5 * std::sqrt(3000.0 * 3000.0 - 2500.0 * 2500.0)).epsilon(1e-12));

    // asymmetric point satisfies the ellipse constraint
    position_from_hop_split(1300.0, 2000.0, 1600.0, x, z);
    CHECK(std::abs(ellipse_residual(x, z, 2000.0, 1600.0)) < 1e-12);
}

TEST_CASE("position from hop split, domain errors", "[geometry]") {
    double x, z;
    CHECK_THROWS_AS(position_from_hop_split(0.0, 2000.0, 1600.0, x, z), std::domain_error);
    CHECK_THROWS_AS(position_from_hop_split(2000.0, 2000.0, 1600.0, x, z), std::domain_error);
    CHECK_THROWS_AS(position_from_hop_split(1000.0, 2000.0, 2200.0, x, z), std::domain_error);
    // |d1 - d2| beyond L_tr leaves the ellipse
    CHECK_THROWS_AS(position_from_hop_split(100.0, 2000.0, 1600.0, x, z), std::domain_error);
}

TEST_CASE("geometry from position, canonical cases", "[geometry]") {
    const auto g = geometry_from_position(0.0, 600.0, 1600.0);
    CHECK(g.d1 == Catch::Approx(1000.0).epsilon(1e-12));
    CHECK(g.d2 == Catch::Approx(1000.0).epsilon(1e-12));
    CHECK(g.sin_theta_i() == Catch::Approx(0.6).epsilon(1e-12));
    CHECK(g.sin_theta_r() == Catch::Approx(0.6).epsilon(1e-12));
    CHECK(g.d3 == Catch::Approx(2000.0).epsilon(1e-12));

    // node straight above the Tx: normal incidence
    const auto gt = geometry_from_position(-800.0, 444.0, 1600.0);
    CHECK(gt.theta_i == Catch::Approx(std::acos(0.0)).epsilon(1e-12));

    CHECK_THROWS_AS(geometry_from_position(0.0, 0.0, 1600.0), std::domain_error);
    CHECK_THROWS_AS(geometry_from_position(0.0, -5.0, 1600.0), std::domain_error);
}

TEST_CASE("round trip with hop split", "[geometry]") {
    auto rng = make_stream(7, "geometry-roundtrip");
    const double d3 = 2000.0, l_tr = 1600.0;
    for (int i = 0; i < 20; ++i) {
        const double lo = 0.5 * (d3 - l_tr), hi = 0.5 * (d3 + l_tr);
        const double d1 = lo + (hi - lo) * (0.02 + 0.96 * uniform01(rng));
        const auto g = geometry_from_hop_split(d1, d3, l_tr);
        CHECK(g.d1 == Catch::Approx(d1).epsilon(1e-9));
        CHECK(g.d1 + g.d2 == Catch::Approx(d3).epsilon(1e-12));
        CHECK(std::abs(ellipse_residual(g.x_o, g.z_o, d3, l_tr)) < 1e-12);
        CHECK(g.z_o > 0.0);
        CHECK(g.z_o <= g.semi_minor() * (1.0 + 1e-12));
        CHECK(g.sin_theta_i() > 0.0);
        CHECK(g.sin_theta_i() <= 1.0);
        // mirror symmetry swaps the hops
        const auto m = geometry_from_position(-g.x_o, g.z_o, l_tr);
        CHECK(m.d1 == Catch::Approx(g.d2).epsilon(1e-12));
        CHECK(m.theta_i == Catch::Approx(g.theta_r).epsilon(1e-12));
    }
}

TEST_CASE("ellipse sweep sampling", "[geometry]") {
    const auto three = ellipse_sweep(2000.0, 1600.0, 3);
    REQUIRE(three.size() == 3);
    CHECK(three[1].x_o == Catch::Approx(0.0).margin(1e-9));
    CHECK(three[1].z_o == Catch::Approx(600.0).epsilon(1e-9));
    for (const auto& g : three)
        CHECK(std::abs(ellipse_residual(g.x_o, g.z_o, 2000.0, 1600.0)) < 1e-12);

    const auto two = ellipse_sweep(2000.0, 1600.0, 2);
    REQUIRE(two.size() == 2);
    CHECK(two[0].x_o == Catch::Approx(-two[1].x_o).epsilon(1e-12));

    const auto many = ellipse_sweep(2000.0, 1600.0, 101);
    for (std::size_t i = 1; i < many.size(); ++i) CHECK(many[i].x_o > many[i - 1].x_o);
    CHECK(many.front().z_o > 0.0);
    CHECK(many.back().z_o > 0.0);

    CHECK_THROWS_AS(ellipse_sweep(2000.0, 1600.0, 1), std::domain_error);
}
