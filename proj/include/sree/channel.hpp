// SPDX-License-Identifier: Apache-2.0
//
// sree: energy-efficiency region toolkit for MISO symbiotic radio links
// Copyright (C) 2026 The sree authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef SREE_CHANNEL_HPP
#define SREE_CHANNEL_HPP

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>

#include "sree/cvec.hpp"
#include "sree/errors.hpp"

namespace sree {

inline constexpr double speed_of_light = 2.99792458e8;  // m/s
inline constexpr double min_link_distance_m = 1.0;

inline double db_to_linear(double db) { return std::pow(10.0, db / 10.0); }
inline double dbm_to_watts(double dbm) { return 1e-3 * db_to_linear(dbm); }
inline double deg_to_rad(double deg) { return deg * std::numbers::pi / 180.0; }

// Node placement: PT at the origin, PR at (d0, 0), BD at (d0 cos theta, d0 sin theta).
struct ScenarioGeometry {
    int antennas = 4;
    double d0_m = 300.0;
    double theta_rad = deg_to_rad(20.0);
    double rician_k = 10.0;  // linear
    double pathloss_exp_tr = 2.7;
    double pathloss_exp_td = 2.7;
    double pathloss_exp_dr = 2.1;

    void validate() const {
        auto fail = [](const std::string& m) { throw ValidationError("ScenarioGeometry: " + m); };
        if (antennas < 1) fail("antennas must be >= 1");
        if (!(d0_m > 0.0) || !std::isfinite(d0_m)) fail("d0 must be positive");
        if (!(theta_rad > 0.0) || theta_rad > std::numbers::pi) fail("theta must lie in (0, pi]");
        if (!(rician_k >= 0.0)) fail("Rician K must be >= 0");
        for (double e : {pathloss_exp_tr, pathloss_exp_td, pathloss_exp_dr})
            if (!(e >= 1.5 && e <= 6.0)) fail("path-loss exponents must lie in [1.5, 6]");
    }
};

struct RFParams {
    double bandwidth_hz = 10e6;
    double noise_w = dbm_to_watts(-110.0);
    double reflection = 1.0;       // rho
    double pa_inefficiency = 2.85; // mu
    double pt_circuit_w = 0.02;    // P_s
    double bd_circuit_w = 0.2e-3;  // P_c
    double pmax_w = 0.1;
    double carrier_hz = 3.5e9;

    void validate() const {
        auto fail = [](const std::string& m) { throw ValidationError("RFParams: " + m); };
        if (!(bandwidth_hz > 0.0)) fail("bandwidth must be positive");
        if (!(noise_w > 0.0)) fail("noise power must be positive");
        if (!(reflection >= 0.0 && reflection <= 1.0)) fail("reflection coefficient must lie in [0, 1]");
        if (!(pa_inefficiency > 1.0)) fail("amplifier inefficiency must exceed 1");
        if (!(pt_circuit_w >= 0.0) || !(bd_circuit_w >= 0.0) || !(pmax_w >= 0.0))
            fail("powers must be non-negative");
        if (!(carrier_hz > 0.0)) fail("carrier frequency must be positive");
    }
};

// Raw channels plus the noise/reflection normalized forms
//   h_hat = h / sigma,   g_hat = sqrt(rho) f g / sigma.
struct ChannelSet {
    CVec h;      // PT -> PR
    CVec g;      // PT -> BD
    cplx f{};    // BD -> PR
    CVec h_hat;
    CVec g_hat;

    static ChannelSet from_raw(CVec h, CVec g, cplx f, const RFParams& rf) {
        if (h.size() != g.size() || h.empty()) throw DimensionError("ChannelSet: h and g must share length M >= 1");
        ChannelSet ch{std::move(h), std::move(g), f, {}, {}};
        const double sigma = std::sqrt(rf.noise_w);
        ch.h_hat = ch.h / cplx{sigma, 0.0};
        ch.g_hat = ch.g * (std::sqrt(rf.reflection) * f / sigma);
        return ch;
    }

    std::size_t antennas() const noexcept { return h.size(); }
};

/// Large-scale gain beta0 * d^-alpha with beta0 = (lambda / 4 pi)^2.
inline double path_loss(double d_m, double alpha_exp, double carrier_hz) {
    if (!(d_m > 0.0)) throw DomainError("path_loss: distance must be positive");
    if (!(carrier_hz > 0.0)) throw DomainError("path_loss: carrier must be positive");
    const double lambda = speed_of_light / carrier_hz;
    const double beta0 = std::pow(lambda / (4.0 * std::numbers::pi), 2);
    return beta0 * std::pow(d_m, -alpha_exp);
}

/// Half-wavelength ULA response, entry m = exp(-j pi m sin(phi)), m = 0..M-1.
inline CVec steering(int m, double phi_rad) {
    if (m < 1) throw DomainError("steering: M must be >= 1");
    CVec a(static_cast<std::size_t>(m));
    const double s = std::sin(phi_rad);
    for (int i = 0; i < m; ++i) a[i] = std::polar(1.0, -std::numbers::pi * i * s);
    return a;
}

inline double bd_pr_distance(const ScenarioGeometry& geo) {
    geo.validate();
    const double d1 = 2.0 * geo.d0_m * std::sin(0.5 * geo.theta_rad);
    if (d1 < min_link_distance_m)
        throw ValidationError("bd_pr_distance: BD-PR distance " + std::to_string(d1) + " m is below the 1 m floor");
    return d1;
}

namespace detail {

// Portable sample stream: mt19937_64 words mapped to doubles by explicit bit arithmetic,
// Gaussians by Box-Muller. std::*_distribution is implementation-defined, so it is avoided.
class SampleStream {
  public:
    explicit SampleStream(std::uint64_t seed) : eng_(seed) {}

    // Uniform on (0, 1].
    double uniform() { return (static_cast<double>(eng_() >> 11) + 1.0) * 0x1.0p-53; }

    // Circularly-symmetric complex Gaussian with unit variance.
    cplx cn01() {
        const double u1 = uniform();
        const double u2 = uniform();
        const double r = std::sqrt(-std::log(u1));  // sqrt(-2 ln u1) / sqrt(2)
        const double a = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(a), r * std::sin(a)};
    }

  private:
    std::mt19937_64 eng_;
};

}  // namespace detail

/// Rician draw of (h, g, f) for the given geometry.
///
/// Draw order is fixed (h NLoS, g NLoS, f NLoS, f LoS phase) so that two scenarios sharing a seed
/// share their small-scale fading regardless of theta or distances.
inline ChannelSet gen_channels(const ScenarioGeometry& geo, const RFParams& rf, std::uint64_t seed) {
    geo.validate();
    rf.validate();
    const double d1 = bd_pr_distance(geo);
    const auto m = static_cast<std::size_t>(geo.antennas);

    const double beta_h = path_loss(geo.d0_m, geo.pathloss_exp_tr, rf.carrier_hz);
    const double beta_g = path_loss(geo.d0_m, geo.pathloss_exp_td, rf.carrier_hz);
    const double beta_f = path_loss(d1, geo.pathloss_exp_dr, rf.carrier_hz);

    const double k = geo.rician_k;
    const double los_w = std::isinf(k) ? 1.0 : std::sqrt(k / (k + 1.0));
    const double nlos_w = std::isinf(k) ? 0.0 : std::sqrt(1.0 / (k + 1.0));

    detail::SampleStream rng(seed);
    CVec nh(m), ng(m);
    for (auto& x : nh) x = rng.cn01();
    for (auto& x : ng) x = rng.cn01();
    const cplx nf = rng.cn01();
    const double f_phase = 2.0 * std::numbers::pi * rng.uniform();

    const CVec a_h = steering(geo.antennas, 0.0);
    const CVec a_g = steering(geo.antennas, geo.theta_rad);
    CVec h(m), g(m);
    for (std::size_t i = 0; i < m; ++i) {
        h[i] = std::sqrt(beta_h) * (los_w * a_h[i] + nlos_w * nh[i]);
        g[i] = std::sqrt(beta_g) * (los_w * a_g[i] + nlos_w * ng[i]);
    }
    const cplx f = std::sqrt(beta_f) * (los_w * std::polar(1.0, f_phase) + nlos_w * nf);
    return ChannelSet::from_raw(std::move(h), std::move(g), f, rf);
}

}  // namespace sree

#endif
