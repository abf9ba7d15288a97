// SPDX-License-Identifier: Apache-2.0
//
// Scenario files: sectioned key = value text with explicit units.  Every
// key missing from the file is filled from the baseline parameter set
// (1550 nm, 1 mW, 377 ohm, a = 10 cm, zeta = 1, kappa = 0.43e-3 dB/m,
// C_n^2 = 50e-15, d3 = 2 km, L_tr = 1.6 km, node at (0, H_e)) and recorded
// as defaulted.  Unknown sections or keys are errors.

#ifndef OPTIRS_SCENARIO_HPP
#define OPTIRS_SCENARIO_HPP

#include <cstdint>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "optirs/beam.hpp"
#include "optirs/geometry.hpp"
#include "optirs/gml.hpp"
#include "optirs/units.hpp"
#include "optirs/wave.hpp"

namespace optirs {

struct Scenario {
    std::string name = "baseline";
    BeamParams beam1;              // Tx laser
    BeamParams beam2;              // relay laser
    LensSpec lens;
    bool relay = false;            // node is a relay instead of an IRS
    double irs_l_x = 0.1;          // [m]
    double irs_l_y = 0.1;          // [m]
    double d3 = 2000.0;            // [m]
    double l_tr = 1600.0;          // [m]
    double x_o = 0.0;              // node x; z from the ellipse
    double cn2 = 50e-15;
    double kappa_db_per_m = 0.43e-3;
    double gamma_th = 1.0;         // linear
    double gamma_bar_min_db = 60.0;
    double gamma_bar_max_db = 130.0;
    std::size_t gamma_bar_points = 71;
    std::uint64_t trials = 1000000;
    std::uint64_t seed = 20250809;
    QuadratureSpec quad;
    std::vector<double> variant_sizes;  // IRS lengths for snr/position sweeps
    bool include_relay_variant = true;
    std::vector<std::string> defaulted;

    LinkGeometry node_geometry() const {
        const double he = ellipse_height(d3, l_tr);
        const double s = 2.0 * x_o / d3;
        const double z = he * std::sqrt(std::max(0.0, 1.0 - s * s));
        return geometry_from_position(x_o, z, l_tr);
    }

    void validate() const {
        beam1.validate();
        beam2.validate();
        lens.validate();
        if (!(d3 > l_tr) || !(l_tr > 0.0))
            throw std::invalid_argument("scenario: requires d3 > L_tr > 0");
        if (!(std::abs(x_o) < 0.5 * d3))
            throw std::invalid_argument("scenario: node x must satisfy |x| < d3/2");
        if (!relay) {
            IrsSpec probe;
            probe.l_x = irs_l_x;
            probe.l_y = irs_l_y;
            probe.validate(beam1.wavelength);
        }
        for (double l : variant_sizes) {
            IrsSpec probe;
            probe.l_x = probe.l_y = l;
            probe.validate(beam1.wavelength);
        }
        if (!(cn2 > 0.0)) throw std::invalid_argument("scenario: C_n^2 must be positive");
        if (kappa_db_per_m < 0.0) throw std::invalid_argument("scenario: kappa must be >= 0");
        if (!(gamma_th > 0.0)) throw std::invalid_argument("scenario: gamma_th must be positive");
        if (!(gamma_bar_max_db > gamma_bar_min_db) || gamma_bar_points < 2)
            throw std::invalid_argument("scenario: bad transmit-SNR grid");
        if (trials < 10000) throw std::invalid_argument("scenario: trials must be >= 1e4");
        quad.validate();
    }
};

namespace detail {

struct IniData {
    // (section, key) -> value; insertion-ordered duplicates rejected
    std::map<std::pair<std::string, std::string>, std::string> kv;
};

inline IniData parse_ini(std::istream& in, const std::string& origin) {
    IniData data;
    std::string line, section;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        std::string_view s = detail::trim(line);
        if (s.empty() || s.front() == '#' || s.front() == ';') continue;
        if (s.front() == '[') {
            if (s.back() != ']')
                throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                            ": malformed section header");
            section = std::string(detail::trim(s.substr(1, s.size() - 2)));
            continue;
        }
        const auto eq = s.find('=');
        if (eq == std::string_view::npos)
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": expected 'key = value'");
        std::string key(detail::trim(s.substr(0, eq)));
        std::string value(detail::trim(s.substr(eq + 1)));
        if (key.empty())
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) + ": empty key");
        if (!data.kv.emplace(std::make_pair(section, key), value).second)
            throw std::invalid_argument(origin + ":" + std::to_string(lineno) +
                                        ": duplicate key '" + key + "'");
    }
    return data;
}

inline bool parse_bool(const std::string& v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw std::invalid_argument("not a boolean: '" + v + "'");
}

inline std::vector<double> parse_length_list(const std::string& v) {
    std::vector<double> out;
    std::stringstream ss(v);
    std::string item;
    while (std::getline(ss, item, ',')) out.push_back(parse_length(item));
    if (out.empty()) throw std::invalid_argument("empty list");
    return out;
}

} // namespace detail

inline Scenario scenario_from_ini(std::istream& in, const std::string& origin,
                                  Scenario base = {}) {
    auto data = detail::parse_ini(in, origin);
    Scenario sc = std::move(base);
    auto take = [&](const char* section, const char* key) -> const std::string* {
        const auto it = data.kv.find({section, key});
        if (it == data.kv.end()) {
            sc.defaulted.push_back(std::string(section) + "." + key);
            return nullptr;
        }
        const std::string* v = &it->second;
        return v;
    };
    auto handled = [&](const char* section, const char* key) {
        data.kv.erase({section, key});
    };
    try {
        if (const auto* v = take("beam", "wavelength")) sc.beam1.wavelength = sc.beam2.wavelength = parse_length(*v);
        handled("beam", "wavelength");
        if (const auto* v = take("beam", "waist1")) sc.beam1.waist = parse_length(*v);
        handled("beam", "waist1");
        if (const auto* v = take("beam", "waist2")) sc.beam2.waist = parse_length(*v);
        handled("beam", "waist2");
        if (const auto* v = take("beam", "power")) sc.beam1.power = sc.beam2.power = parse_power_watts(*v);
        handled("beam", "power");
        if (const auto* v = take("beam", "impedance")) sc.beam1.impedance = sc.beam2.impedance = parse_plain(*v);
        handled("beam", "impedance");
        if (const auto* v = take("lens", "radius")) sc.lens.radius = parse_length(*v);
        handled("lens", "radius");
        if (const auto* v = take("lens", "responsivity")) sc.lens.responsivity = parse_plain(*v);
        handled("lens", "responsivity");
        if (const auto* v = take("irs", "relay")) sc.relay = detail::parse_bool(*v);
        handled("irs", "relay");
        if (const auto* v = take("irs", "lx")) sc.irs_l_x = parse_length(*v);
        handled("irs", "lx");
        if (const auto* v = take("irs", "ly")) sc.irs_l_y = parse_length(*v);
        handled("irs", "ly");
        if (const auto* v = take("irs", "variant_sizes")) sc.variant_sizes = detail::parse_length_list(*v);
        handled("irs", "variant_sizes");
        if (const auto* v = take("geometry", "d3")) sc.d3 = parse_length(*v);
        handled("geometry", "d3");
        if (const auto* v = take("geometry", "ltr")) sc.l_tr = parse_length(*v);
        handled("geometry", "ltr");
        if (const auto* v = take("geometry", "x0")) sc.x_o = parse_length(*v);
        handled("geometry", "x0");
        if (const auto* v = take("turbulence", "cn2")) sc.cn2 = parse_plain(*v);
        handled("turbulence", "cn2");
        if (const auto* v = take("turbulence", "kappa")) sc.kappa_db_per_m = parse_plain(*v);
        handled("turbulence", "kappa");
        if (const auto* v = take("link", "gamma_th")) sc.gamma_th = parse_ratio(*v);
        handled("link", "gamma_th");
        if (const auto* v = take("link", "gamma_bar_min")) sc.gamma_bar_min_db = linear_to_db(parse_ratio(*v));
        handled("link", "gamma_bar_min");
        if (const auto* v = take("link", "gamma_bar_max")) sc.gamma_bar_max_db = linear_to_db(parse_ratio(*v));
        handled("link", "gamma_bar_max");
        if (const auto* v = take("link", "gamma_bar_points")) sc.gamma_bar_points = std::size_t(parse_plain(*v));
        handled("link", "gamma_bar_points");
        if (const auto* v = take("montecarlo", "trials")) sc.trials = std::uint64_t(parse_plain(*v));
        handled("montecarlo", "trials");
        if (const auto* v = take("montecarlo", "seed")) sc.seed = std::uint64_t(parse_plain(*v));
        handled("montecarlo", "seed");
        if (const auto* v = take("quadrature", "irs_samples")) sc.quad.irs_samples_per_axis = std::size_t(parse_plain(*v));
        handled("quadrature", "irs_samples");
        if (const auto* v = take("quadrature", "lens_samples")) sc.quad.lens_samples_per_axis = std::size_t(parse_plain(*v));
        handled("quadrature", "lens_samples");
        if (const auto* v = take("quadrature", "oversampling")) sc.quad.oversampling_factor = parse_plain(*v);
        handled("quadrature", "oversampling");
        if (const auto* v = take("quadrature", "tolerance")) sc.quad.refinement_tolerance = parse_plain(*v);
        handled("quadrature", "tolerance");
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(origin + ": " + e.what());
    }
    if (!data.kv.empty()) {
        const auto& bad = data.kv.begin()->first;
        throw std::invalid_argument(origin + ": unknown key '[" + bad.first + "] " + bad.second + "'");
    }
    sc.validate();
    return sc;
}

inline Scenario load_scenario(const std::string& path, Scenario base = {}) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open scenario file: " + path);
    auto sc = scenario_from_ini(in, path, std::move(base));
    if (sc.name == "baseline") sc.name = path;
    return sc;
}

// Named presets for the three canonical experiments.
inline Scenario preset_scenario(const std::string& name) {
    Scenario sc;
    sc.name = name;
    if (name == "fig2") {
        sc.beam1.waist = 2.5e-3;
        sc.beam2.waist = 2.5e-3;
        sc.include_relay_variant = false;
    } else if (name == "fig3") {
        sc.beam1.waist = 7e-3;
        sc.beam2.waist = 7e-3;
        sc.gamma_th = 1.0;  // 0 dB
        sc.variant_sizes = {0.01, 0.07, 1.0};
        sc.gamma_bar_min_db = 60.0;
        sc.gamma_bar_max_db = 130.0;
        sc.gamma_bar_points = 71;
    } else if (name == "fig4a") {
        sc.beam1.waist = 7e-3;
        sc.beam2.waist = 7e-3;
        sc.gamma_th = db_to_linear(30.0);
        sc.gamma_bar_min_db = 84.0;  // fixed transmit SNR
        sc.gamma_bar_max_db = 85.0;
        sc.variant_sizes = {0.03, 1.0};
        sc.irs_l_x = sc.irs_l_y = 0.03;
    } else if (name == "fig4b") {
        sc.beam1.waist = 7e-3;
        sc.beam2.waist = 7e-3;
        sc.gamma_th = db_to_linear(-50.0);
        sc.gamma_bar_min_db = 84.0;
        sc.gamma_bar_max_db = 85.0;
        sc.variant_sizes = {0.001};
        sc.irs_l_x = sc.irs_l_y = 0.001;
        sc.include_relay_variant = false;
    } else if (name != "baseline") {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    sc.validate();
    return sc;
}

} // namespace optirs

#endif
