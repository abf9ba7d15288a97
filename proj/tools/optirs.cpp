// SPDX-License-Identifier: Apache-2.0
//
// Command-line driver: scenario ingestion, the three canonical sweeps,
// placement analysis, and a quick oracle-vs-closed-form validation pass.
//
// Exit codes: 0 success, 1 validation failure, 2 I/O error.

#include <cstdio>
#include <exception>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "optirs/placement.hpp"
#include "optirs/scenario.hpp"
#include "optirs/sweeps.hpp"
#include "optirs/version.hpp"

namespace {

struct CommonOpts {
    std::string scenario_path;
    std::string preset = "baseline";
    std::string out_dir = "out";
    std::uint64_t seed = 0;
    bool seed_set = false;
    std::uint64_t trials = 0;
    bool oracle = false;
};

optirs::Scenario resolve_scenario(const CommonOpts& o) {
    optirs::Scenario sc = optirs::preset_scenario(o.preset);
    if (!o.scenario_path.empty()) sc = optirs::load_scenario(o.scenario_path, sc);
    if (o.seed_set) sc.seed = o.seed;
    if (o.trials > 0) sc.trials = o.trials;
    sc.validate();
    return sc;
}

void add_common(CLI::App* cmd, CommonOpts& o) {
    cmd->add_option("--scenario", o.scenario_path, "scenario file (key = value sections)");
    cmd->add_option("--preset", o.preset, "named preset: fig2|fig3|fig4a|fig4b|baseline")
        ->check(CLI::IsMember({"fig2", "fig3", "fig4a", "fig4b", "baseline"}));
    cmd->add_option("--out", o.out_dir, "output directory");
    auto* s = cmd->add_option("--seed", o.seed, "Monte Carlo seed");
    cmd->callback([&o, s] { o.seed_set = s->count() > 0; });
    cmd->add_option("--trials", o.trials, "Monte Carlo trials per point");
    cmd->add_flag("--oracle", o.oracle, "use the diffraction oracle for IRS GML columns");
}

int run_placement(const optirs::Scenario& sc, std::size_t n) {
    using namespace optirs;
    PlacementScenario ps;
    ps.d3 = sc.d3;
    ps.l_tr = sc.l_tr;
    ps.beam1 = sc.beam1;
    ps.beam2 = sc.beam2;
    ps.lens = sc.lens;
    ps.cn2 = sc.cn2;
    ps.kappa_db_per_m = sc.kappa_db_per_m;
    ps.gamma_bar = db_to_linear(sc.gamma_bar_min_db);
    ps.gamma_th = sc.gamma_th;
    ps.zeta = sc.lens.responsivity;

    if (sc.relay) {
        const auto cf = optimal_relay_position(sc.d3, sc.l_tr);
        const auto sweep = sweep_verify(Architecture::Relay, ps, n);
        std::printf("relay: closed form x* = %.3f m, z* = %.3f m\n", cf.positions[0].first,
                    cf.positions[0].second);
        for (const auto& p : sweep.positions)
            std::printf("relay: sweep argmin x = %.3f m (outage %.6g)\n", p.first,
                        sweep.objective);
        return 0;
    }
    ps.irs_l_x = sc.irs_l_x;
    ps.irs_l_y = sc.irs_l_y;
    const auto cf = optimal_irs_position(sc.irs_l_x, sc.irs_l_y, sc.lens, sc.beam1, sc.d3,
                                         sc.l_tr);
    std::printf("irs  L = %g x %g m, regime %s%s\n", sc.irs_l_x, sc.irs_l_y,
                regime_name(cf.regime), cf.closed_form_valid ? "" : " (sweep fallback)");
    for (const auto& p : cf.positions)
        std::printf("irs: closed form x* = %.3f m, z* = %.3f m\n", p.first, p.second);
    const auto sweep = sweep_verify(Architecture::Irs, ps, n);
    for (const auto& p : sweep.positions)
        std::printf("irs: sweep argmin x = %.3f m (outage %.6g)\n", p.first, sweep.objective);
    return 0;
}

int run_validate(const optirs::Scenario& sc) {
    using namespace optirs;
    int failures = 0;
    const auto g = sc.node_geometry();
    auto check = [&](const char* name, bool ok, double got, double want) {
        std::printf("[%s] %-38s got %.6g, reference %.6g\n", ok ? "PASS" : "FAIL", name, got,
                    want);
        if (!ok) ++failures;
    };

    // oracle vs the quadratic sinc form at a small aperture
    {
        const double l = 0.01;
        const auto irs = IrsSpec::for_link(l, l, g);
        const double oracle = gml_numeric(irs, sc.lens, sc.beam1, g, sc.quad);
        const double closed = gml_quadratic_exact(irs, sc.lens, sc.beam1, g).value;
        check("oracle vs sinc form, L = 1 cm", std::abs(oracle / closed - 1.0) < 0.10, oracle,
              closed);
    }
    // incident-power identity: erf product vs 2-D quadrature
    {
        const double l = 0.03;
        const auto irs = IrsSpec::for_link(l, l, g);
        const auto gx = simpson_grid(-l / 2, l / 2, 257);
        double p_in = 0.0;
        for (std::size_t j = 0; j < gx.x.size(); ++j)
            for (std::size_t i = 0; i < gx.x.size(); ++i)
                p_in += gx.w[i] * gx.w[j] *
                        incident_intensity_sq(sc.beam1, g, gx.x[i], gx.x[j]) /
                        (2.0 * sc.beam1.impedance);
        const double frac = p_in / sc.beam1.power;
        const double closed = gml_linear(irs, sc.beam1, g);
        check("incident power vs erf product", std::abs(frac / closed - 1.0) < 1e-6, frac,
              closed);
    }
    // analytic outage vs Monte Carlo at one SNR
    {
        const auto rep = regime_report(IrsSpec::for_link(0.07, 0.07, g), sc.lens, sc.beam1, g);
        const auto path = optirs::detail::irs_path_budget(sc, rep.gml);
        const double gbar = db_to_linear(80.0);
        const double analytic = outage_irs(gbar, sc.gamma_th, path, sc.lens.responsivity);
        const auto mc = monte_carlo_outage_irs(gbar, sc.gamma_th, path, sc.trials, sc.seed,
                                               sc.lens.responsivity);
        check("analytic outage vs Monte Carlo",
              std::abs(analytic - mc.probability) <= 3.0 * mc.std_error + 1e-12, analytic,
              mc.probability);
    }
    std::printf("%s\n", failures == 0 ? "validation OK" : "validation FAILED");
    return failures == 0 ? 0 : 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{std::string(optirs::version_string) +
                 " — power scaling of optical IRSs vs DF relays in FSO links"};
    app.require_subcommand(1);

    CommonOpts size_o, snr_o, pos_o, plc_o, val_o;

    auto* size_cmd = app.add_subcommand("size-sweep", "GML vs IRS size (Fig. 2 style)");
    add_common(size_cmd, size_o);
    double lmin = 1e-3, lmax = 1.0;
    std::size_t lpoints = 61;
    size_cmd->add_option("--lmin", lmin, "smallest IRS length [m]");
    size_cmd->add_option("--lmax", lmax, "largest IRS length [m]");
    size_cmd->add_option("--points", lpoints, "number of sizes (log spaced)");

    auto* snr_cmd = app.add_subcommand("snr-sweep", "outage vs transmit SNR (Fig. 3 style)");
    add_common(snr_cmd, snr_o);

    auto* pos_cmd = app.add_subcommand("position-sweep", "outage vs node position (Fig. 4 style)");
    add_common(pos_cmd, pos_o);
    std::size_t pos_n = 512;
    bool stitched = false;
    pos_cmd->add_option("--points", pos_n, "ellipse grid size");
    pos_cmd->add_flag("--stitched", stitched, "re-stitch the regime map at every position");

    auto* plc_cmd = app.add_subcommand("placement", "closed-form optima + sweep check");
    add_common(plc_cmd, plc_o);
    std::size_t plc_n = 512;
    plc_cmd->add_option("--points", plc_n, "sweep grid size");

    auto* val_cmd = app.add_subcommand("validate", "oracle-vs-closed-form quick suite");
    add_common(val_cmd, val_o);

    CLI11_PARSE(app, argc, argv);

    try {
        if (size_cmd->parsed()) {
            const auto sc = resolve_scenario(size_o);
            const auto res =
                optirs::run_size_sweep(sc, optirs::log_grid(lmin, lmax, lpoints), size_o.oracle);
            optirs::emit(res, size_o.out_dir);
            std::printf("wrote %s/{%s.csv,.meta,.gp}\n", size_o.out_dir.c_str(),
                        res.name.c_str());
        } else if (snr_cmd->parsed()) {
            const auto sc = resolve_scenario(snr_o);
            const auto grid = optirs::linear_grid(sc.gamma_bar_min_db, sc.gamma_bar_max_db,
                                                  sc.gamma_bar_points);
            const auto res = optirs::run_snr_sweep(
                sc, grid,
                snr_o.oracle ? optirs::VariantGml::Oracle : optirs::VariantGml::RegimeMap);
            optirs::emit(res, snr_o.out_dir);
            std::printf("wrote %s/{%s.csv,.meta,.gp}\n", snr_o.out_dir.c_str(),
                        res.name.c_str());
        } else if (pos_cmd->parsed()) {
            const auto sc = resolve_scenario(pos_o);
            const auto res = optirs::run_position_sweep(
                sc, pos_n,
                stitched ? optirs::SweepGmlMode::RegimePerPosition
                         : optirs::SweepGmlMode::RegimeFixed);
            optirs::emit(res, pos_o.out_dir);
            std::printf("wrote %s/{%s.csv,.meta,.gp}\n", pos_o.out_dir.c_str(),
                        res.name.c_str());
        } else if (plc_cmd->parsed()) {
            return run_placement(resolve_scenario(plc_o), plc_n);
        } else if (val_cmd->parsed()) {
            return run_validate(resolve_scenario(val_o));
        }
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 1;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "validation error: %s\n", e.what());
        return 1;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 0;
}
