// SPDX-License-Identifier: Apache-2.0
//
// The three canonical experiment sweeps (GML vs IRS size, outage vs
// transmit SNR, outage vs node position) and flat-file result persistence:
// CSV + key=value metadata + a gnuplot script.  Output bytes depend only on
// the scenario and seed.

#ifndef OPTIRS_SWEEPS_HPP
#define OPTIRS_SWEEPS_HPP

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <limits>
#include <string>
#include <vector>

#include "optirs/outage.hpp"
#include "optirs/placement.hpp"
#include "optirs/rng.hpp"
#include "optirs/scenario.hpp"
#include "optirs/version.hpp"
#include "optirs/wave.hpp"

namespace optirs {

struct SweepResult {
    std::string name;                        // output basename
    std::string sweep_variable;
    std::vector<std::string> columns;        // includes the sweep variable
    std::vector<std::vector<double>> rows;   // rows.size() == grid size
    std::vector<std::pair<std::string, std::string>> meta;
    std::string gnuplot_extra;               // verb-specific plot lines
};

namespace detail {

inline std::string fmt_g17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

inline void meta_scenario_echo(SweepResult& r, const Scenario& sc) {
    const std::size_t first = r.meta.size();
    r.meta.emplace_back("tool", version_string);
    r.meta.emplace_back("scenario", sc.name);
    r.meta.emplace_back("seed", std::to_string(sc.seed));
    r.meta.emplace_back("trials", std::to_string(sc.trials));
    r.meta.emplace_back("wavelength_m", fmt_g17(sc.beam1.wavelength));
    r.meta.emplace_back("waist1_m", fmt_g17(sc.beam1.waist));
    r.meta.emplace_back("waist2_m", fmt_g17(sc.beam2.waist));
    r.meta.emplace_back("power_w", fmt_g17(sc.beam1.power));
    r.meta.emplace_back("impedance_ohm", fmt_g17(sc.beam1.impedance));
    r.meta.emplace_back("lens_radius_m", fmt_g17(sc.lens.radius));
    r.meta.emplace_back("responsivity", fmt_g17(sc.lens.responsivity));
    r.meta.emplace_back("d3_m", fmt_g17(sc.d3));
    r.meta.emplace_back("ltr_m", fmt_g17(sc.l_tr));
    r.meta.emplace_back("x0_m", fmt_g17(sc.x_o));
    r.meta.emplace_back("cn2", fmt_g17(sc.cn2));
    r.meta.emplace_back("kappa_db_per_m", fmt_g17(sc.kappa_db_per_m));
    r.meta.emplace_back("gamma_th", fmt_g17(sc.gamma_th));
    std::string defaulted;
    for (const auto& d : sc.defaulted) {
        if (!defaulted.empty()) defaulted += ",";
        defaulted += d;
    }
    r.meta.emplace_back("defaulted_keys", defaulted.empty() ? "(none)" : defaulted);
    std::string canon;
    for (std::size_t i = first; i < r.meta.size(); ++i)
        canon += r.meta[i].first + "=" + r.meta[i].second + "\n";
    char hash[24];
    std::snprintf(hash, sizeof hash, "%016llx",
                  static_cast<unsigned long long>(fnv1a(canon)));
    r.meta.emplace_back("scenario_hash", hash);
}

inline HopBudget irs_path_budget(const Scenario& sc, double gml) {
    const auto t = TurbulenceModel::for_hop(sc.cn2, sc.beam1.wavelength, sc.d3);
    return HopBudget{gml, atmospheric_loss(sc.kappa_db_per_m, sc.d3), t.alpha, t.beta};
}

inline void relay_hop_budgets(const Scenario& sc, const LinkGeometry& g, HopBudget& h1,
                              HopBudget& h2) {
    const auto t1 = TurbulenceModel::for_hop(sc.cn2, sc.beam1.wavelength, g.d1);
    const auto t2 = TurbulenceModel::for_hop(sc.cn2, sc.beam2.wavelength, g.d2);
    h1 = HopBudget{relay_hop_gml(sc.lens.radius, sc.beam1, g.d1),
                   atmospheric_loss(sc.kappa_db_per_m, g.d1), t1.alpha, t1.beta};
    h2 = HopBudget{relay_hop_gml(sc.lens.radius, sc.beam2, g.d2),
                   atmospheric_loss(sc.kappa_db_per_m, g.d2), t2.alpha, t2.beta};
}

} // namespace detail

inline std::vector<double> log_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo * std::pow(hi / lo, double(i) / double(n - 1));
    return g;
}

inline std::vector<double> linear_grid(double lo, double hi, std::size_t n) {
    std::vector<double> g(n);
    for (std::size_t i = 0; i < n; ++i)
        g[i] = lo + (hi - lo) * double(i) / double(n - 1);
    return g;
}

// GML map vs IRS side length (square aperture), plus the individual closed forms
// and, when enabled, the diffraction oracle.
inline SweepResult run_size_sweep(const Scenario& sc, const std::vector<double>& l_grid,
                                  bool with_oracle = false) {
    const auto g = sc.node_geometry();
    SweepResult r;
    r.name = "size_sweep";
    r.sweep_variable = "irs_length_m";
    r.columns = {"irs_length_m", "area_m2",      "regime",       "gml_map",
                 "gml_sinc",     "gml_incident", "gml_saturated", "gml_oracle"};
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (double l : l_grid) {
        const auto irs = IrsSpec::for_link(l, l, g);
        const auto rep = regime_report(irs, sc.lens, sc.beam1, g);
        double oracle = nan;
        if (with_oracle) oracle = gml_numeric(irs, sc.lens, sc.beam1, g, sc.quad);
        r.rows.push_back({l, irs.area(), double(int(rep.regime)), rep.gml,
                          gml_quadratic_exact(irs, sc.lens, sc.beam1, g).value,
                          gml_linear(irs, sc.beam1, g), gml_saturated(sc.lens, sc.beam1, g),
                          oracle});
    }
    detail::meta_scenario_echo(r, sc);
    const auto rep0 = regime_report(IrsSpec::for_link(l_grid.front(), l_grid.front(), g),
                                    sc.lens, sc.beam1, g);
    r.meta.emplace_back("sqrt_s1_m", detail::fmt_g17(std::sqrt(rep0.s1)));
    if (rep0.s2) r.meta.emplace_back("sqrt_s2_m", detail::fmt_g17(std::sqrt(*rep0.s2)));
    if (rep0.s3) r.meta.emplace_back("sqrt_s3_m", detail::fmt_g17(std::sqrt(*rep0.s3)));
    r.gnuplot_extra =
        "set logscale xy\n"
        "set xlabel 'IRS length L [m]'\n"
        "set ylabel 'GML h_{gml,3}'\n";
    // dashed verticals at the regime boundaries
    r.gnuplot_extra += "set arrow from " + detail::fmt_g17(std::sqrt(rep0.s1)) +
                       ",graph 0 to " + detail::fmt_g17(std::sqrt(rep0.s1)) +
                       ",graph 1 nohead dashtype 2\n";
    if (rep0.s2)
        r.gnuplot_extra += "set arrow from " + detail::fmt_g17(std::sqrt(*rep0.s2)) +
                           ",graph 0 to " + detail::fmt_g17(std::sqrt(*rep0.s2)) +
                           ",graph 1 nohead dashtype 2\n";
    if (rep0.s3)
        r.gnuplot_extra += "set arrow from " + detail::fmt_g17(std::sqrt(*rep0.s3)) +
                           ",graph 0 to " + detail::fmt_g17(std::sqrt(*rep0.s3)) +
                           ",graph 1 nohead dashtype 2\n";
    r.gnuplot_extra +=
        "plot datafile using 1:4 with lines title 'piecewise map', \\\n"
        "     datafile using 1:5 with lines title 'sinc form', \\\n"
        "     datafile using 1:6 with lines title 'incident power', \\\n"
        "     datafile using 1:8 with points title 'oracle'\n";
    return r;
}

enum class VariantGml { RegimeMap, Oracle };

// Outage vs transmit SNR for the relay and each IRS size variant.  The IRS
// GML per variant is geometry-fixed, so it is computed once (from the
// piecewise map, or from the diffraction oracle when requested).
inline SweepResult run_snr_sweep(const Scenario& sc, const std::vector<double>& gbar_db_grid,
                                 VariantGml gml_source = VariantGml::RegimeMap) {
    const auto g = sc.node_geometry();
    SweepResult r;
    r.name = "snr_sweep";
    r.sweep_variable = "gamma_bar_db";
    r.columns = {"gamma_bar_db"};

    struct Variant {
        std::string label;
        bool is_relay;
        HopBudget path;       // IRS path
        HopBudget h1, h2;     // relay hops
        double gml = 0.0;
    };
    std::vector<Variant> variants;
    if (sc.include_relay_variant) {
        Variant v;
        v.label = "relay";
        v.is_relay = true;
        detail::relay_hop_budgets(sc, g, v.h1, v.h2);
        variants.push_back(v);
    }
    for (double l : sc.variant_sizes) {
        Variant v;
        v.is_relay = false;
        char buf[48];
        std::snprintf(buf, sizeof buf, "irs_L%g", l);
        v.label = buf;
        const auto irs = IrsSpec::for_link(l, l, g);
        v.gml = (gml_source == VariantGml::Oracle)
                    ? gml_numeric(irs, sc.lens, sc.beam1, g, sc.quad)
                    : regime_report(irs, sc.lens, sc.beam1, g).gml;
        v.path = detail::irs_path_budget(sc, v.gml);
        variants.push_back(v);
    }
    const double zeta = sc.lens.responsivity;
    for (const auto& v : variants) {
        r.columns.push_back(v.label + "_outage");
        r.columns.push_back(v.label + "_mc");
        r.columns.push_back(v.label + "_mc_stderr");
        r.columns.push_back(v.label + "_asymptote");
        if (!v.is_relay) r.meta.emplace_back(v.label + "_gml", detail::fmt_g17(v.gml));
    }
    for (double gdb : gbar_db_grid) {
        const double gbar = db_to_linear(gdb);
        std::vector<double> row{gdb};
        for (const auto& v : variants) {
            double analytic, mc, mcse, asym;
            if (v.is_relay) {
                analytic = outage_relay(gbar, sc.gamma_th, v.h1, v.h2, zeta);
                const auto m = monte_carlo_outage_relay(gbar, sc.gamma_th, v.h1, v.h2,
                                                        sc.trials, sc.seed, zeta);
                mc = m.probability;
                mcse = m.std_error;
                const auto a = asymptote_relay(sc.gamma_th, gamma_tilde_hop(v.h1, zeta),
                                               v.h1.alpha, v.h1.beta,
                                               gamma_tilde_hop(v.h2, zeta), v.h2.alpha,
                                               v.h2.beta);
                asym = std::pow(a.coding * gbar, -a.diversity);
            } else {
                analytic = outage_irs(gbar, sc.gamma_th, v.path, zeta);
                const auto m = monte_carlo_outage_irs(gbar, sc.gamma_th, v.path, sc.trials,
                                                      sc.seed, zeta);
                mc = m.probability;
                mcse = m.std_error;
                const auto a = asymptote_irs(sc.gamma_th, gamma_tilde_irs(v.path, zeta),
                                             v.path.alpha, v.path.beta);
                asym = std::pow(a.coding * gbar, -a.diversity);
            }
            row.insert(row.end(), {analytic, mc, mcse, asym});
        }
        r.rows.push_back(std::move(row));
    }
    detail::meta_scenario_echo(r, sc);
    const std::size_t nc = r.columns.size();
    r.gnuplot_extra =
        "set logscale y\n"
        "set xlabel 'transmit SNR [dB]'\n"
        "set ylabel 'outage probability'\n"
        "plot for [c=2:" + std::to_string(nc) + ":4] datafile using 1:c with lines title columnhead(c), \\\n"
        "     for [c=3:" + std::to_string(nc) + ":4] datafile using 1:c with points title columnhead(c)\n";
    return r;
}

// Outage vs node x-position for the relay and the IRS size variants, with
// the closed-form optima recorded in the metadata.
inline SweepResult run_position_sweep(const Scenario& sc, std::size_t n,
                                      SweepGmlMode mode = SweepGmlMode::RegimeFixed) {
    SweepResult r;
    r.name = "position_sweep";
    r.sweep_variable = "x_m";
    r.columns = {"x_m", "z_m"};
    const auto grid = ellipse_sweep(sc.d3, sc.l_tr, n);
    const double gbar = db_to_linear(sc.gamma_bar_min_db);
    const double zeta = sc.lens.responsivity;
    r.rows.reserve(grid.size());
    for (const auto& g : grid) r.rows.push_back({g.x_o, g.z_o});

    if (sc.include_relay_variant) {
        r.columns.push_back("relay_outage");
        for (std::size_t i = 0; i < grid.size(); ++i) {
            HopBudget h1, h2;
            detail::relay_hop_budgets(sc, grid[i], h1, h2);
            r.rows[i].push_back(outage_relay(gbar, sc.gamma_th, h1, h2, zeta));
        }
        const auto opt = optimal_relay_position(sc.d3, sc.l_tr);
        r.meta.emplace_back("relay_opt_x_m", detail::fmt_g17(opt.positions[0].first));
    }
    const auto turb3 = TurbulenceModel::for_hop(sc.cn2, sc.beam1.wavelength, sc.d3);
    const double h_p3 = atmospheric_loss(sc.kappa_db_per_m, sc.d3);
    for (double l : sc.variant_sizes) {
        char buf[48];
        std::snprintf(buf, sizeof buf, "irs_L%g", l);
        const std::string label = buf;
        r.columns.push_back(label + "_outage");
        const auto mid = geometry_from_hop_split(0.5 * sc.d3, sc.d3, sc.l_tr);
        const auto fixed =
            regime_report(IrsSpec::for_link(l, l, mid), sc.lens, sc.beam1, mid).regime;
        for (std::size_t i = 0; i < grid.size(); ++i) {
            const auto& g = grid[i];
            const double gml =
                (mode == SweepGmlMode::RegimeFixed)
                    ? branch_gml_at(fixed, g, l, l, sc.lens, sc.beam1)
                    : regime_report(IrsSpec::for_link(l, l, g), sc.lens, sc.beam1, g).gml;
            HopBudget path{gml, h_p3, turb3.alpha, turb3.beta};
            r.rows[i].push_back(outage_irs(gbar, sc.gamma_th, path, zeta));
        }
        const auto opt = optimal_irs_position(l, l, sc.lens, sc.beam1, sc.d3, sc.l_tr);
        std::string xs;
        for (const auto& p : opt.positions) {
            if (!xs.empty()) xs += ",";
            xs += detail::fmt_g17(p.first);
        }
        r.meta.emplace_back(label + "_opt_x_m", xs);
        r.meta.emplace_back(label + "_opt_regime", regime_name(opt.regime));
    }
    // sweep argmins per outage column
    for (std::size_t c = 2; c < r.columns.size(); ++c) {
        std::size_t best = 0;
        for (std::size_t i = 1; i < r.rows.size(); ++i)
            if (r.rows[i][c] < r.rows[best][c]) best = i;
        r.meta.emplace_back(r.columns[c] + "_argmin_x_m", detail::fmt_g17(r.rows[best][0]));
    }
    detail::meta_scenario_echo(r, sc);
    r.meta.emplace_back("gamma_bar_db", detail::fmt_g17(sc.gamma_bar_min_db));
    r.gnuplot_extra =
        "set logscale y\n"
        "set xlabel 'node x position [m]'\n"
        "set ylabel 'outage probability'\n"
        "plot for [c=3:" + std::to_string(r.columns.size()) +
        "] datafile using 1:c with lines title columnhead(c)\n";
    return r;
}

// Writes <name>.csv, <name>.meta and <name>.gp under out_dir.
inline void emit(const SweepResult& r, const std::string& out_dir) {
    namespace fs = std::filesystem;
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec) throw std::runtime_error("emit: cannot create directory " + out_dir);

    const std::string csv_path = out_dir + "/" + r.name + ".csv";
    std::ofstream csv(csv_path);
    if (!csv) throw std::runtime_error("emit: cannot open " + csv_path);
    for (std::size_t c = 0; c < r.columns.size(); ++c) {
        if (c) csv << ',';
        csv << r.columns[c];
    }
    csv << '\n';
    for (const auto& row : r.rows) {
        for (std::size_t c = 0; c < row.size(); ++c) {
            if (c) csv << ',';
            csv << detail::fmt_g17(row[c]);
        }
        csv << '\n';
    }
    if (!csv) throw std::runtime_error("emit: write failed for " + csv_path);

    const std::string meta_path = out_dir + "/" + r.name + ".meta";
    std::ofstream meta(meta_path);
    if (!meta) throw std::runtime_error("emit: cannot open " + meta_path);
    for (const auto& [k, v] : r.meta) meta << k << " = " << v << '\n';
    if (!meta) throw std::runtime_error("emit: write failed for " + meta_path);

    const std::string gp_path = out_dir + "/" + r.name + ".gp";
    std::ofstream gp(gp_path);
    if (!gp) throw std::runtime_error("emit: cannot open " + gp_path);
    gp << "# " << version_string << "\n"
       << "datafile = '" << r.name << ".csv'\n"
       << "set datafile separator ','\n"
       << "set key autotitle columnhead\n"
       << "set term pngcairo size 900,650\n"
       << "set output '" << r.name << ".png'\n"
       << r.gnuplot_extra;
    if (!gp) throw std::runtime_error("emit: write failed for " + gp_path);
}

} // namespace optirs

#endif
