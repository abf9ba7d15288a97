// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "optirs/beam.hpp"
#include "optirs/quadrature.hpp"

using namespace optirs;

namespace {
BeamParams fig2_beam() {
    BeamParams b;
    b.wavelength = 1550e-9;
    b.waist = 2.5e-3;
    b.power = 1e-3;
    b.impedance = 377.0;
    return b;
}
} // namespace

TEST_CASE("beamwidth limits", "[beam]") {
    const auto b = fig2_beam();
    CHECK(beamwidth(b, 0.0) == Catch::Approx(b.waist).epsilon(1e-15));
    CHECK(beamwidth(b, b.rayleigh_range()) == Catch::Approx(b.waist * std::sqrt(2.0)).epsilon(1e-13));
    // far field: w ~ z lambda / (pi w_o); 0.197 m at 1 km
    const double w_far = 1000.0 * b.wavelength / (pi * b.waist);
    CHECK(beamwidth(b, 1000.0) == Catch::Approx(w_far).epsilon(2e-4));
    CHECK(beamwidth(b, 1000.0) == Catch::Approx(0.1974).epsilon(2e-3));
    CHECK_THROWS_AS(beamwidth(b, -1.0), std::domain_error);
}

TEST_CASE("beamwidth is increasing and convex", "[beam]") {
    const auto b = fig2_beam();
    double prev = beamwidth(b, 0.0);
    double prev_slope = 0.0;
    for (int i = 1; i <= 60; ++i) {
        const double z = i * 2.0;
        const double w = beamwidth(b, z);
        const double slope = w - prev;
        CHECK(w > prev);
        CHECK(slope >= prev_slope - 1e-12);
        prev = w;
        prev_slope = slope;
    }
}

TEST_CASE("curvature radius", "[beam]") {
    const auto b = fig2_beam();
    const double zr = b.rayleigh_range();
    CHECK(curvature_radius(b, zr) == Catch::Approx(2.0 * zr).epsilon(1e-13));
    for (double z : {32.0 * zr, 100.0 * zr, 1000.0 * zr})
        CHECK(curvature_radius(b, z) == Catch::Approx(z).epsilon(1e-3));
    CHECK(curvature_radius(b, 1000.0) == Catch::Approx(1000.16).margin(0.01));
    CHECK_THROWS_AS(curvature_radius(b, 0.0), std::domain_error);
}

TEST_CASE("beam parameter validation", "[beam]") {
    BeamParams b = fig2_beam();
    b.waist = 5.0 * b.wavelength;
    CHECK_THROWS_AS(b.validate(), std::domain_error);
    b = fig2_beam();
    b.wavelength = -1.0;
    CHECK_THROWS_AS(b.validate(), std::domain_error);
    CHECK_NOTHROW(fig2_beam().validate());
}

TEST_CASE("incident field power accounting", "[beam]") {
    const auto b = fig2_beam();
    const auto g = geometry_from_position(0.0, 600.0, 1600.0);
    const double w = beamwidth(b, g.d1);

    // total power through the node plane equals P_tot
    const double rad = 6.0 * w / g.sin_theta_i();
    const auto gx = simpson_grid(-rad, rad, 801);
    const auto gy = simpson_grid(-6.0 * w, 6.0 * w, 801);
    double total = 0.0;
    for (std::size_t j = 0; j < gy.x.size(); ++j)
        for (std::size_t i = 0; i < gx.x.size(); ++i)
            total += gx.w[i] * gy.w[j] *
                     incident_intensity_sq(b, g, gx.x[i], gy.x[j]) / (2.0 * b.impedance);
    CHECK(total == Catch::Approx(b.power).epsilon(1e-6));

    // peak on axis, phase -k d1 there
    const auto s0 = incident_field_on_irs(b, g, 0.0, 0.0);
    CHECK(s0.amplitude == Catch::Approx(std::sqrt(4.0 * b.impedance * b.power *
                                                  g.sin_theta_i() / (pi * w * w)))
                              .epsilon(1e-12));
    CHECK(std::remainder(s0.phase + b.wavenumber() * g.d1, 2.0 * pi) ==
          Catch::Approx(0.0).margin(1e-6));
    CHECK(incident_field_on_irs(b, g, 0.01, 0.02).amplitude < s0.amplitude);
}

TEST_CASE("incident field symmetry and plane-wave limit", "[beam]") {
    const auto b = fig2_beam();
    const auto g = geometry_from_position(250.0, 480.0, 1600.0);

    // amplitude even in both coordinates
    CHECK(incident_field_on_irs(b, g, 0.013, 0.007).amplitude ==
          Catch::Approx(incident_field_on_irs(b, g, -0.013, -0.007).amplitude).epsilon(1e-13));

    // the odd part of the phase is the plane-wave term k mu_i x_r
    const double x = 0.004;
    const auto plus = incident_field_on_irs(b, g, x, 0.0);
    const auto minus = incident_field_on_irs(b, g, -x, 0.0);
    const double odd_slope = (plus.phase - minus.phase) / (2.0 * x);
    CHECK(odd_slope == Catch::Approx(b.wavenumber() * g.mu_i()).epsilon(1e-9));

    // within |x_r| <= L_x/2 << w_in the total phase is linear to 1%
    const double l_half = 0.005;
    const double quad_part = std::abs(plus.phase + minus.phase - 2.0 * incident_field_on_irs(b, g, 0.0, 0.0).phase);
    CHECK(quad_part < 0.01 * std::abs(odd_slope * l_half));
}
