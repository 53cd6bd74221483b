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

#ifndef SREE_INDIVIDUAL_OPT_HPP
#define SREE_INDIVIDUAL_OPT_HPP

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string_view>

#include "sree/channel.hpp"
#include "sree/cvec.hpp"
#include "sree/ee_model.hpp"
#include "sree/errors.hpp"
#include "sree/numerics.hpp"

namespace sree {

enum class CornerLabel { PtEeMax, BdEeMax, PtRateMax };

constexpr std::string_view to_string(CornerLabel l) {
    switch (l) {
        case CornerLabel::PtEeMax: return "PT_EE_MAX";
        case CornerLabel::BdEeMax: return "BD_EE_MAX";
        case CornerLabel::PtRateMax: return "PT_RATE_MAX";
    }
    return "?";
}

struct CornerResult {
    double p_star = 0.0;  // W
    CVec v_star;          // unit direction
    double ee_self = 0.0;
    double ee_other = 0.0;
    CornerLabel label = CornerLabel::PtEeMax;
    // PT_EE_MAX only: unclipped stationary power (NaN when P_s = 0) and whether the budget binds.
    double p_root = std::numeric_limits<double>::quiet_NaN();
    bool power_clipped = false;

    CVec w() const { return v_star * cplx{std::sqrt(p_star), 0.0}; }

    EEPair pair() const {
        if (label == CornerLabel::BdEeMax) return {ee_other, ee_self};
        return {ee_self, ee_other};
    }
};

// Scalars that fully describe the optimal PT SINR as a function of power:
//   a = |h|^2, b = |h|^2 |g|^2 - |g^H h|^2, c = |g|^2   (normalized channels).
struct SinrProfile {
    double a = 0.0;
    double b = 0.0;
    double c = 0.0;

    static SinrProfile of(const ChannelSet& ch) {
        const double a = ch.h_hat.norm2();
        const double c = ch.g_hat.norm2();
        const double cross = std::norm(inner(ch.g_hat, ch.h_hat));
        return {a, std::max(0.0, a * c - cross), c};
    }

    // f(p) = (a p + b p^2) / (1 + c p)
    double f(double p) const { return (a * p + b * p * p) / (1.0 + c * p); }

    // f'(p) = (a + 2 b p + b c p^2) / (1 + c p)^2
    double df(double p) const {
        const double den = 1.0 + c * p;
        return (a + 2.0 * b * p + b * c * p * p) / (den * den);
    }
};

/// Derivative kernel of EE_PT(p): positive where the optimal-direction EE still increases.
inline double ee_power_kernel(const SinrProfile& s, const RFParams& rf, double p) {
    const double mu = rf.pa_inefficiency;
    const double fp = s.f(p);
    return (mu * p + rf.pt_circuit_w) * s.df(p) / (1.0 + fp) - mu * std::log1p(fp);
}

/// MMSE transmit direction (g g^H + I/p)^{-1} h, normalized.
inline CVec mmse_direction(const ChannelSet& ch, double p) {
    if (!(p > 0.0)) throw DomainError("mmse_direction: power must be positive");
    if (!(ch.h_hat.norm2() > 0.0)) throw NoLinkError("mmse_direction: no primary link (h = 0)");
    return normalized(reg_rank1_inverse_apply(ch.g_hat, 1.0 / p, ch.h_hat));
}

// h^H (g g^H + I/p)^{-1} h evaluated as a quadratic form.
inline double max_sinr_quadratic(const ChannelSet& ch, double p) {
    if (p < 0.0) throw DomainError("max_sinr: power must be non-negative");
    if (p == 0.0) return 0.0;
    return inner(ch.h_hat, reg_rank1_inverse_apply(ch.g_hat, 1.0 / p, ch.h_hat)).real();
}

// Same quantity in rational form f(p).
inline double max_sinr_closed(const ChannelSet& ch, double p) {
    if (p < 0.0) throw DomainError("max_sinr: power must be non-negative");
    return SinrProfile::of(ch).f(p);
}

/// Unique positive root of the EE_PT(p) stationarity condition.
///
/// The kernel starts at a*P_s > 0 and decreases without bound, so a bracket is grown from
/// [1e-9, 1] W by doubling the upper end (at most 60 times) and then bisected.
inline double theorem1_root(const ChannelSet& ch, const RFParams& rf, const RootConfig& cfg = {}) {
    const auto s = SinrProfile::of(ch);
    if (!(s.a > 0.0)) throw NoLinkError("theorem1_root: no primary link (h = 0)");
    if (!(rf.pt_circuit_w > 0.0)) throw DomainError("theorem1_root: requires P_s > 0");
    auto kernel = [&](double p) { return ee_power_kernel(s, rf, p); };

    double lo = 1e-9;
    for (int i = 0; i < 1000 && !(kernel(lo) > 0.0); ++i) lo *= 0.5;
    double hi = 1.0;
    int doublings = 0;
    while (!(kernel(hi) < 0.0)) {
        if (++doublings > 60) throw BracketError("theorem1_root: no sign change after 60 doublings");
        lo = hi;
        hi *= 2.0;
    }
    if (!(kernel(lo) > 0.0)) throw BracketError("theorem1_root: kernel not positive near p = 0");
    return bisect_root(kernel, lo, hi, cfg);
}

// With P_s = 0 the PT efficiency is a supremum at p -> 0+; it is approximated at this fraction of Pmax.
inline constexpr double zero_circuit_power_fraction = 1e-9;

/// PT-EE maximum: MMSE direction at p* = min(p0, Pmax).
inline CornerResult pt_ee_max(const ChannelSet& ch, const RFParams& rf, const RootConfig& cfg = {}) {
    const auto s = SinrProfile::of(ch);
    if (!(s.a > 0.0)) throw NoLinkError("pt_ee_max: no primary link (h = 0)");

    CornerResult r;
    r.label = CornerLabel::PtEeMax;
    if (rf.pt_circuit_w > 0.0) {
        r.p_root = theorem1_root(ch, rf, cfg);
        r.power_clipped = r.p_root >= rf.pmax_w;
        r.p_star = std::min(r.p_root, rf.pmax_w);
    } else {
        r.p_star = zero_circuit_power_fraction * rf.pmax_w;
    }

    if (r.p_star > 0.0) {
        const CVec y = reg_rank1_inverse_apply(ch.g_hat, 1.0 / r.p_star, ch.h_hat);
        r.v_star = normalized(y);
        r.ee_self = ee_pt_from_sinr(s.f(r.p_star), r.p_star, rf);
        const double gamma_c = std::norm(inner(ch.g_hat, y)) / y.norm2() * r.p_star;
        r.ee_other = ee_bd_from_gain(gamma_c, rf);
    } else {
        // Pmax = 0: limiting direction is MRT on h, nothing is radiated.
        r.v_star = normalized(ch.h_hat);
        r.ee_self = ee_pt_from_sinr(0.0, 0.0, rf);
        r.ee_other = 0.0;
    }
    return r;
}

/// BD-EE maximum: MRT on g_hat at full power.
inline CornerResult bd_ee_max(const ChannelSet& ch, const RFParams& rf) {
    const double c = ch.g_hat.norm2();
    if (!(c > 0.0)) throw NoLinkError("bd_ee_max: no backscatter link (g_hat = 0)");
    CornerResult r;
    r.label = CornerLabel::BdEeMax;
    r.p_star = rf.pmax_w;
    r.v_star = normalized(ch.g_hat);
    r.ee_self = ee_bd_from_gain(c * rf.pmax_w, rf);
    const double cross = std::norm(inner(ch.h_hat, ch.g_hat));
    const double sinr = rf.pmax_w * cross / (rf.pmax_w * c * c + c);
    r.ee_other = ee_pt_from_sinr(sinr, rf.pmax_w, rf);
    return r;
}

/// Rate-maximizing benchmark: the optimal SINR is non-decreasing in p, so full power in the MMSE direction.
inline CornerResult pt_rate_max(const ChannelSet& ch, const RFParams& rf) {
    if (!(rf.pmax_w > 0.0)) throw DomainError("pt_rate_max: requires Pmax > 0");
    CornerResult r;
    r.label = CornerLabel::PtRateMax;
    r.p_star = rf.pmax_w;
    r.v_star = mmse_direction(ch, rf.pmax_w);
    const CVec w = r.w();
    r.ee_self = ee_pt(w, ch, rf);
    r.ee_other = ee_bd(w, ch, rf);
    return r;
}

}  // namespace sree

#endif
