// SPDX-License-Identifier: Apache-2.0
//
// End-to-end SNR bookkeeping, analytic and Monte Carlo outage, and the
// high-SNR diversity / coding asymptotes.
//
// Instantaneous SNR model: gamma = gamma_bar * gamma_tilde * h_a^2, with
// gamma_bar = P_tot / sigma_n^2 the transmit SNR and gamma_tilde the
// squared deterministic gains.  The relay hops carry the 1/2 of the equal
// power split.

#ifndef OPTIRS_OUTAGE_HPP
#define OPTIRS_OUTAGE_HPP

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string_view>

#include "optirs/rng.hpp"
#include "optirs/turbulence.hpp"

namespace optirs {

// h_p = 10^(-kappa d / 10), kappa in dB/m
inline double atmospheric_loss(double kappa_db_per_m, double d) {
    if (kappa_db_per_m < 0.0) throw std::domain_error("atmospheric_loss: kappa must be >= 0");
    if (!(d > 0.0)) throw std::domain_error("atmospheric_loss: distance must be positive");
    return std::pow(10.0, -kappa_db_per_m * d / 10.0);
}

struct HopBudget {
    double gml = 1.0;   // deterministic geometric loss
    double h_p = 1.0;   // atmospheric loss
    double alpha = 0.0; // Gamma-Gamma shapes of this hop
    double beta = 0.0;
};

// gamma_tilde_3 = zeta^2 h_gml^2 h_p^2 (single IRS path)
inline double gamma_tilde_irs(const HopBudget& h, double zeta = 1.0) {
    const double g = zeta * h.gml * h.h_p;
    return g * g;
}

// gamma_tilde_i = (1/2) zeta^2 h_gml^2 h_p^2 (relay hop, P_i = P_tot / 2)
inline double gamma_tilde_hop(const HopBudget& h, double zeta = 1.0) {
    const double g = zeta * h.gml * h.h_p;
    return 0.5 * g * g;
}

inline double outage_from_gamma(double gamma_bar, double gamma_th, double gamma_tilde,
                                double alpha, double beta) {
    if (!(gamma_bar > 0.0) || !(gamma_th > 0.0) || !(gamma_tilde > 0.0))
        throw std::domain_error("outage: SNR quantities must be positive");
    return gg_cdf(alpha, beta, std::sqrt(gamma_th / (gamma_bar * gamma_tilde)));
}

inline double outage_irs(double gamma_bar, double gamma_th, const HopBudget& path,
                         double zeta = 1.0) {
    return outage_from_gamma(gamma_bar, gamma_th, gamma_tilde_irs(path, zeta),
                             path.alpha, path.beta);
}

inline double outage_relay(double gamma_bar, double gamma_th, const HopBudget& hop1,
                           const HopBudget& hop2, double zeta = 1.0) {
    const double f1 = outage_from_gamma(gamma_bar, gamma_th, gamma_tilde_hop(hop1, zeta),
                                        hop1.alpha, hop1.beta);
    const double f2 = outage_from_gamma(gamma_bar, gamma_th, gamma_tilde_hop(hop2, zeta),
                                        hop2.alpha, hop2.beta);
    // 1 - (1 - f1)(1 - f2), written to keep relative accuracy for tiny f
    return f1 + f2 - f1 * f2;
}

struct AsymptoteReport {
    double diversity = 0.0;  // D in P_out ~ (C gamma_bar)^-D
    double coding = 0.0;     // C
    double rho1 = 0.0, tau1 = 0.0;
    double rho2 = 0.0, tau2 = 0.0;  // zero for the single-path case
};

inline AsymptoteReport asymptote_irs(double gamma_th, double gamma_tilde3,
                                     double alpha, double beta) {
    const double rho = std::min(alpha, beta);
    const double tau = std::max(alpha, beta);
    if (std::abs(tau - rho) < 1e-9)
        throw std::domain_error("asymptote_irs: degenerate alpha = beta, Gamma(tau - rho) undefined");
    AsymptoteReport r;
    r.rho1 = rho;
    r.tau1 = tau;
    r.diversity = rho / 2.0;
    const double ratio = std::tgamma(tau - rho) / (std::tgamma(tau) * std::tgamma(rho + 1.0));
    r.coding = gamma_tilde3 / (gamma_th * tau * tau * rho * rho) *
               std::pow(ratio, -1.0 / r.diversity);
    return r;
}

namespace detail {

inline double relay_hop_coding(double gamma_th, double gamma_tilde, double rho, double tau,
                               double mu) {
    const double ratio = std::tgamma(tau - rho) * std::pow(tau * rho / mu, rho) /
                         (std::tgamma(tau) * std::tgamma(rho + 1.0));
    return gamma_tilde / gamma_th * std::pow(ratio, -2.0 / rho);
}

} // namespace detail

// mu is the undetermined constant of the cited relay coding-gain form;
// defaults to 1 and only rescales C, never D.
inline AsymptoteReport asymptote_relay(double gamma_th, double gamma_tilde1, double alpha1,
                                       double beta1, double gamma_tilde2, double alpha2,
                                       double beta2, double mu = 1.0) {
    AsymptoteReport r;
    r.rho1 = std::min(alpha1, beta1);
    r.tau1 = std::max(alpha1, beta1);
    r.rho2 = std::min(alpha2, beta2);
    r.tau2 = std::max(alpha2, beta2);
    if (std::abs(r.tau1 - r.rho1) < 1e-9 || std::abs(r.tau2 - r.rho2) < 1e-9)
        throw std::domain_error("asymptote_relay: degenerate alpha = beta hop");
    r.diversity = 0.5 * std::min(r.rho1, r.rho2);
    const double c1 = detail::relay_hop_coding(gamma_th, gamma_tilde1, r.rho1, r.tau1, mu);
    const double c2 = detail::relay_hop_coding(gamma_th, gamma_tilde2, r.rho2, r.tau2, mu);
    if (std::abs(r.rho1 - r.rho2) > 1e-12 * std::max(r.rho1, r.rho2)) {
        r.coding = (r.rho1 < r.rho2) ? c1 : c2;
    } else {
        const double d = r.diversity;
        r.coding = std::pow(std::pow(c1, -d) + std::pow(c2, -d), -1.0 / d);
    }
    return r;
}

enum class Architecture { Irs, Relay };

struct MonteCarloResult {
    double probability = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
};

// Empirical outage over `trials` fading draws; per-block named streams keep
// the result independent of threading and bit-identical for a fixed seed.
inline MonteCarloResult monte_carlo_outage_irs(double gamma_bar, double gamma_th,
                                               const HopBudget& path, std::uint64_t trials,
                                               std::uint64_t seed, double zeta = 1.0) {
    if (trials < 10000) throw std::domain_error("monte_carlo_outage: trials must be >= 1e4");
    const double gt = gamma_tilde_irs(path, zeta);
    const double threshold_h2 = gamma_th / (gamma_bar * gt);
    constexpr std::uint64_t block = 1u << 16;
    std::uint64_t outages = 0;
    for (std::uint64_t start = 0, bi = 0; start < trials; start += block, ++bi) {
        auto rng = make_stream(seed, "mc-irs", bi);
        const std::uint64_t n = std::min(block, trials - start);
        for (std::uint64_t i = 0; i < n; ++i) {
            const double h = gg_sample(path.alpha, path.beta, rng);
            if (h * h < threshold_h2) ++outages;
        }
    }
    MonteCarloResult r;
    r.trials = trials;
    r.probability = double(outages) / double(trials);
    r.std_error = std::sqrt(r.probability * (1.0 - r.probability) / double(trials));
    return r;
}

inline MonteCarloResult monte_carlo_outage_relay(double gamma_bar, double gamma_th,
                                                 const HopBudget& hop1, const HopBudget& hop2,
                                                 std::uint64_t trials, std::uint64_t seed,
                                                 double zeta = 1.0) {
    if (trials < 10000) throw std::domain_error("monte_carlo_outage: trials must be >= 1e4");
    const double th1 = gamma_th / (gamma_bar * gamma_tilde_hop(hop1, zeta));
    const double th2 = gamma_th / (gamma_bar * gamma_tilde_hop(hop2, zeta));
    constexpr std::uint64_t block = 1u << 16;
    std::uint64_t outages = 0;
    for (std::uint64_t start = 0, bi = 0; start < trials; start += block, ++bi) {
        auto rng1 = make_stream(seed, "mc-relay-hop1", bi);
        auto rng2 = make_stream(seed, "mc-relay-hop2", bi);
        const std::uint64_t n = std::min(block, trials - start);
        for (std::uint64_t i = 0; i < n; ++i) {
            const double h1 = gg_sample(hop1.alpha, hop1.beta, rng1);
            const double h2 = gg_sample(hop2.alpha, hop2.beta, rng2);
            if (h1 * h1 < th1 || h2 * h2 < th2) ++outages;
        }
    }
    MonteCarloResult r;
    r.trials = trials;
    r.probability = double(outages) / double(trials);
    r.std_error = std::sqrt(r.probability * (1.0 - r.probability) / double(trials));
    return r;
}

} // namespace optirs

#endif
