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

#ifndef SREE_EE_MODEL_HPP
#define SREE_EE_MODEL_HPP

#include <cmath>
#include <numbers>

#include "sree/channel.hpp"
#include "sree/cvec.hpp"
#include "sree/errors.hpp"
#include "sree/numerics.hpp"

namespace sree {

// Transmit beamformer w, optionally built from a power/direction split w = sqrt(p) v.
struct Beamformer {
    CVec w;

    static Beamformer from_power_direction(double p, const CVec& v) {
        if (!(p >= 0.0)) throw DomainError("Beamformer: power must be non-negative");
        if (std::abs(v.norm() - 1.0) > 1e-12) throw DomainError("Beamformer: direction must have unit norm");
        return {v * cplx{std::sqrt(p), 0.0}};
    }

    double power() const noexcept { return w.norm2(); }
    bool within_budget(const RFParams& rf) const noexcept { return power() <= rf.pmax_w + 1e-9; }
};

struct EEPair {
    double ee_pt = 0.0;  // bits/Joule
    double ee_bd = 0.0;  // bits/Joule
};

// |g_hat^H w|^2: average backscatter SNR, also the SCA objective.
inline double backscatter_gain(const CVec& w, const ChannelSet& ch) { return std::norm(inner(ch.g_hat, w)); }

inline double sinr_pt(const CVec& w, const ChannelSet& ch) {
    if (w.size() != ch.antennas()) throw DimensionError("sinr_pt: beamformer length differs from M");
    return std::norm(inner(ch.h_hat, w)) / (backscatter_gain(w, ch) + 1.0);
}

// EE of the primary link from its SINR and transmit power.
inline double ee_pt_from_sinr(double sinr, double power_w, const RFParams& rf) {
    const double den = rf.pa_inefficiency * power_w + rf.pt_circuit_w;
    if (!(den > 0.0)) throw DomainError("ee_pt: zero power consumption (P_s = 0 and w = 0)");
    return rf.bandwidth_hz * std::log2(1.0 + sinr) / den;
}

// EE of the backscatter device from its average SNR |g_hat^H w|^2.
inline double ee_bd_from_gain(double gain, const RFParams& rf) {
    if (!(rf.bd_circuit_w > 0.0)) throw DomainError("ee_bd: BD circuit power must be positive");
    return rf.bandwidth_hz / rf.bd_circuit_w * avg_backscatter_spectral(gain);
}

inline double ee_pt(const CVec& w, const ChannelSet& ch, const RFParams& rf) {
    return ee_pt_from_sinr(sinr_pt(w, ch), w.norm2(), rf);
}

inline double ee_bd(const CVec& w, const ChannelSet& ch, const RFParams& rf) {
    if (w.size() != ch.antennas()) throw DimensionError("ee_bd: beamformer length differs from M");
    return ee_bd_from_gain(backscatter_gain(w, ch), rf);
}

inline EEPair ee_pair(const CVec& w, const ChannelSet& ch, const RFParams& rf) {
    return {ee_pt(w, ch, rf), ee_bd(w, ch, rf)};
}

inline EEPair ee_pair(const Beamformer& bf, const ChannelSet& ch, const RFParams& rf) {
    return ee_pair(bf.w, ch, rf);
}

}  // namespace sree

#endif
