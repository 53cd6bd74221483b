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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "scenarios.hpp"

using namespace sree;

TEST(MaxSinr, ThreeFormsAgree) {
    for (int m : {1, 2, 4, 8}) {
        for (int i = 0; i < 25; ++i) {
            const auto ch = scenario::random_instance(100 * m + i, m);
            const double p = 1e-4 * std::pow(1e4, i / 24.0) * RFParams{}.pmax_w;
            const double dense = oracle::max_sinr_dense(ch, p);
            EXPECT_NEAR(max_sinr_quadratic(ch, p) / dense, 1.0, 1e-10) << "m=" << m;
            EXPECT_NEAR(max_sinr_closed(ch, p) / dense, 1.0, 1e-10) << "m=" << m;
        }
    }
}

TEST(MaxSinr, MmseDirectionAttainsMaximum) {
    std::mt19937_64 rng(5);
    std::normal_distribution<double> n;
    const auto ch = scenario::default_instance();
    const double p = 0.02;
    const CVec w = mmse_direction(ch, p) * cplx{std::sqrt(p), 0.0};
    const double best = sinr_pt(w, ch);
    EXPECT_NEAR(best / max_sinr_closed(ch, p), 1.0, 1e-10);
    for (int i = 0; i < 200; ++i) {
        CVec v(ch.antennas());
        for (auto& x : v) x = {n(rng), n(rng)};
        v *= cplx{std::sqrt(p) / v.norm(), 0.0};
        EXPECT_LE(sinr_pt(v, ch), best * (1.0 + 1e-12));
    }
}

TEST(MaxSinr, SingleAntennaFormula) {
    const auto ch = scenario::random_instance(3, 1);
    const double a = ch.h_hat.norm2(), c = ch.g_hat.norm2();
    for (double p : {1e-5, 1e-3, 0.1}) EXPECT_NEAR(max_sinr_closed(ch, p) / (a * p / (1.0 + c * p)), 1.0, 1e-12);
    EXPECT_NEAR(SinrProfile::of(ch).b, 0.0, 1e-9 * a * c);
}

TEST(SinrProfile, DerivativeMatchesFiniteDifference) {
    const auto sp = SinrProfile::of(scenario::default_instance());
    for (double p : {1e-4, 3e-3, 0.05, 0.5}) {
        const double h = 1e-6 * p;
        const double fd = (sp.f(p + h) - sp.f(p - h)) / (2.0 * h);
        EXPECT_NEAR(fd / sp.df(p), 1.0, 1e-7);
    }
}

TEST(StationaryPower, RootIsGridOptimal) {
    const RFParams rf;
    for (int i = 0; i < 10; ++i) {
        const auto ch = scenario::random_instance(i, 4);
        const auto sp = SinrProfile::of(ch);
        const double p0 = theorem1_root(ch, rf);
        EXPECT_NEAR(ee_power_kernel(sp, rf, p0), 0.0, 1e-6 * sp.a * rf.pt_circuit_w);
        const double ee0 = ee_pt_from_sinr(sp.f(p0), p0, rf);
        for (int k = 1; k <= 10000; ++k) {
            const double p = 10.0 * rf.pmax_w * k / 10000.0;
            ASSERT_LE(ee_pt_from_sinr(sp.f(p), p, rf), ee0 * (1.0 + 1e-12));
        }
    }
}

TEST(StationaryPower, KernelShape) {
    const RFParams rf;
    const auto sp = SinrProfile::of(scenario::default_instance());
    EXPECT_NEAR(ee_power_kernel(sp, rf, 0.0), sp.a * rf.pt_circuit_w, 1e-12 * sp.a * rf.pt_circuit_w);
    double prev = ee_power_kernel(sp, rf, 0.0);
    for (int k = 1; k <= 1000; ++k) {
        const double v = ee_power_kernel(sp, rf, k * 1e-3);
        EXPECT_LE(v, prev + 1e-9 * std::abs(prev));
        prev = v;
    }
    EXPECT_LT(prev, 0.0);
}

TEST(StationaryPower, Preconditions) {
    RFParams rf;
    rf.pt_circuit_w = 0.0;
    EXPECT_THROW(theorem1_root(scenario::default_instance(), rf), DomainError);
    const auto ch = ChannelSet::from_raw(CVec(2), CVec{{1e-6, 0.0}, {0.0, 0.0}}, 1e-3, RFParams{});
    EXPECT_THROW(theorem1_root(ch, RFParams{}), NoLinkError);
    EXPECT_THROW(pt_ee_max(ch, RFParams{}), NoLinkError);
}

TEST(PtCorner, ConsistentWithEeModel) {
    const RFParams rf;
    const auto ch = scenario::default_instance();
    const auto c = pt_ee_max(ch, rf);
    EXPECT_EQ(c.label, CornerLabel::PtEeMax);
    EXPECT_FALSE(c.power_clipped);
    EXPECT_EQ(c.p_star, c.p_root);
    EXPECT_NEAR(c.w().norm2(), c.p_star, 1e-15);
    const auto pair = ee_pair(c.w(), ch, rf);
    EXPECT_NEAR(pair.ee_pt / c.ee_self, 1.0, 1e-10);
    EXPECT_NEAR(pair.ee_bd / c.ee_other, 1.0, 1e-10);
    EXPECT_EQ(c.pair().ee_pt, c.ee_self);
}

TEST(PtCorner, ClipsToBudget) {
    RFParams rf;
    rf.pmax_w = 1e-4;
    const auto ch = scenario::default_instance();
    const auto c = pt_ee_max(ch, rf);
    EXPECT_TRUE(c.power_clipped);
    EXPECT_EQ(c.p_star, rf.pmax_w);
    EXPECT_GT(c.p_root, rf.pmax_w);
}

TEST(PtCorner, ZeroCircuitPowerApproachesSupremum) {
    RFParams rf;
    rf.pt_circuit_w = 0.0;
    const auto ch = scenario::default_instance();
    const auto c = pt_ee_max(ch, rf);
    const double sup = rf.bandwidth_hz * SinrProfile::of(ch).a / (rf.pa_inefficiency * std::numbers::ln2);
    EXPECT_NEAR(c.ee_self / sup, 1.0, 1e-3);
    EXPECT_TRUE(std::isnan(c.p_root));
}

TEST(BdCorner, MrtIsOptimalForBackscatter) {
    std::mt19937_64 rng(9);
    std::normal_distribution<double> n;
    const RFParams rf;
    const auto ch = scenario::default_instance();
    const auto c = bd_ee_max(ch, rf);
    EXPECT_EQ(c.pair().ee_bd, c.ee_self);
    EXPECT_NEAR(ee_bd(c.w(), ch, rf) / c.ee_self, 1.0, 1e-12);
    EXPECT_NEAR(ee_pt(c.w(), ch, rf) / c.ee_other, 1.0, 1e-12);
    for (int i = 0; i < 200; ++i) {
        CVec v(ch.antennas());
        for (auto& x : v) x = {n(rng), n(rng)};
        v *= cplx{std::sqrt(rf.pmax_w) / v.norm(), 0.0};
        EXPECT_LE(ee_bd(v, ch, rf), c.ee_self * (1.0 + 1e-12));
    }
}

TEST(RateCorner, FullPowerMmse) {
    const RFParams rf;
    const auto ch = scenario::default_instance();
    const auto c = pt_rate_max(ch, rf);
    EXPECT_EQ(c.p_star, rf.pmax_w);
    EXPECT_NEAR(sinr_pt(c.w(), ch) / max_sinr_closed(ch, rf.pmax_w), 1.0, 1e-10);
    EXPECT_LT(c.ee_self, pt_ee_max(ch, rf).ee_self);
}

TEST(CornerLabel, Names) {
    EXPECT_EQ(to_string(CornerLabel::PtEeMax), "PT_EE_MAX");
    EXPECT_EQ(to_string(CornerLabel::BdEeMax), "BD_EE_MAX");
    EXPECT_EQ(to_string(CornerLabel::PtRateMax), "PT_RATE_MAX");
}
