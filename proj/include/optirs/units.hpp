// SPDX-License-Identifier: Apache-2.0
//
// Tiny quantity parser for scenario files: SI lengths with unit suffixes,
// dB values, watts, and plain numbers.

#ifndef OPTIRS_UNITS_HPP
#define OPTIRS_UNITS_HPP

#include <cctype>
#include <cmath>
#include <cstdlib>
#include <stdexcept>
#include <string>
#include <string_view>

namespace optirs {

namespace detail {

inline std::string_view trim(std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
}

inline bool split_number(std::string_view text, double& value, std::string& suffix) {
    const std::string buf(trim(text));
    char* end = nullptr;
    value = std::strtod(buf.c_str(), &end);
    if (end == buf.c_str()) return false;
    suffix = std::string(trim(std::string_view(end)));
    return true;
}

} // namespace detail

inline double parse_length(std::string_view text) {
    double v;
    std::string unit;
    if (!detail::split_number(text, v, unit))
        throw std::invalid_argument("not a length: '" + std::string(text) + "'");
    if (unit.empty() || unit == "m") return v;
    if (unit == "km") return v * 1e3;
    if (unit == "cm") return v * 1e-2;
    if (unit == "mm") return v * 1e-3;
    if (unit == "um") return v * 1e-6;
    if (unit == "nm") return v * 1e-9;
    throw std::invalid_argument("unknown length unit '" + unit + "'");
}

inline double parse_power_watts(std::string_view text) {
    double v;
    std::string unit;
    if (!detail::split_number(text, v, unit))
        throw std::invalid_argument("not a power: '" + std::string(text) + "'");
    if (unit.empty() || unit == "W") return v;
    if (unit == "mW") return v * 1e-3;
    if (unit == "uW") return v * 1e-6;
    if (unit == "nW") return v * 1e-9;
    throw std::invalid_argument("unknown power unit '" + unit + "'");
}

// Accepts "84dB", "84 dB" (-> linear ratio) or a bare linear value.
inline double parse_ratio(std::string_view text) {
    double v;
    std::string unit;
    if (!detail::split_number(text, v, unit))
        throw std::invalid_argument("not a ratio: '" + std::string(text) + "'");
    if (unit.empty()) return v;
    if (unit == "dB" || unit == "db") return std::pow(10.0, v / 10.0);
    throw std::invalid_argument("unknown ratio unit '" + unit + "'");
}

inline double parse_plain(std::string_view text) {
    double v;
    std::string unit;
    if (!detail::split_number(text, v, unit) || !unit.empty())
        throw std::invalid_argument("not a plain number: '" + std::string(text) + "'");
    return v;
}

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double linear_to_db(double x) { return 10.0 * std::log10(x); }

} // namespace optirs

#endif
