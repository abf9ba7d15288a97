// SPDX-License-Identifier: Apache-2.0

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "optirs/quadrature.hpp"
#include "optirs/rng.hpp"
#include "optirs/special.hpp"

using namespace optirs;

TEST_CASE("sine integral against direct quadrature", "[special]") {
    // independent oracle: adaptive quadrature of sin(t)/t
    for (double x : {0.1, 0.5, 1.0, 2.15548, 3.59239, 4.05611, 6.46645, 10.7774, 25.1472, 215.5}) {
        const double ref = integrate_adaptive(
            [](double t) { return t == 0.0 ? 1.0 : std::sin(t) / t; }, 0.0, x, 1e-13);
        CHECK(sine_integral(x) == Catch::Approx(ref).margin(1e-11));
    }
    CHECK(sine_integral(0.0) == 0.0);
    CHECK(sine_integral(-2.0) == Catch::Approx(-sine_integral(2.0)).epsilon(1e-15));
    // Si(inf) -> pi/2
    CHECK(sine_integral(1e6) == Catch::Approx(pi / 2).margin(2e-6));
}

TEST_CASE("regularized incomplete gamma", "[special]") {
    CHECK(gamma_p(1.0, 1.0) == Catch::Approx(1.0 - std::exp(-1.0)).epsilon(1e-14));
    CHECK(gamma_p(0.5, 0.25) == Catch::Approx(std::erf(0.5)).epsilon(1e-13));
    CHECK(gamma_q(2.0, 3.0) == Catch::Approx(std::exp(-3.0) * 4.0).epsilon(1e-13));
    for (double a : {0.3, 1.0, 2.5, 17.0, 200.0}) {
        for (double x : {0.01, 0.5, 1.0, 5.0, 30.0, 300.0}) {
            CHECK(gamma_p(a, x) + gamma_q(a, x) == Catch::Approx(1.0).epsilon(1e-12));
        }
        CHECK(gamma_p(a, 0.0) == 0.0);
    }
}

TEST_CASE("adaptive quadrature sanity", "[special]") {
    CHECK(integrate_adaptive([](double t) { return std::exp(-t * t); }, -8.0, 8.0, 1e-13) ==
          Catch::Approx(std::sqrt(pi)).epsilon(1e-12));
    CHECK(integrate_adaptive([](double t) { return std::cos(40.0 * t); }, 0.0, 1.0, 1e-13) ==
          Catch::Approx(std::sin(40.0) / 40.0).margin(1e-12));
}

TEST_CASE("simpson grid integrates polynomials", "[special]") {
    const auto g = simpson_grid(-1.0, 3.0, 41);
    double s = 0.0;
    for (std::size_t i = 0; i < g.x.size(); ++i) s += g.w[i] * g.x[i] * g.x[i] * g.x[i];
    CHECK(s == Catch::Approx((81.0 - 1.0) / 4.0).epsilon(1e-12));
}

TEST_CASE("deterministic streams and gamma sampler", "[special]") {
    auto r1 = make_stream(42, "check", 7);
    auto r2 = make_stream(42, "check", 7);
    for (int i = 0; i < 100; ++i) REQUIRE(r1() == r2());
    auto r3 = make_stream(42, "check", 8);
    CHECK(r1() != r3());

    // gamma sampler moments
    auto rng = make_stream(1, "gamma-moments");
    const double shape = 2.7;
    const int n = 200000;
    double mean = 0.0, m2 = 0.0;
    for (int i = 0; i < n; ++i) {
        const double v = gamma_draw(rng, shape);
        mean += v;
        m2 += v * v;
    }
    mean /= n;
    m2 /= n;
    CHECK(mean == Catch::Approx(shape).epsilon(0.01));
    CHECK(m2 - mean * mean == Catch::Approx(shape).epsilon(0.03));
}
