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

// Prints the two individual optima and a coarse Pareto boundary for one channel draw.

#include <cstdio>

#include "sree/sree.hpp"

int main() {
    using namespace sree;
    const ScenarioGeometry geo;
    const RFParams rf;
    const auto ctx = RegionContext::build(gen_channels(geo, rf, 1), rf);

    const auto pt = ctx.pt_corner.pair();
    const auto bd = ctx.bd_corner.pair();
    std::printf("PT optimum: p* = %.4g W  EE_PT = %.4g  EE_BD = %.4g bits/J\n", ctx.pt_corner.p_star, pt.ee_pt,
                pt.ee_bd);
    std::printf("BD optimum: p  = %.4g W  EE_PT = %.4g  EE_BD = %.4g bits/J\n", ctx.bd_corner.p_star, bd.ee_pt,
                bd.ee_bd);

    std::printf("\n%6s %14s %14s\n", "alpha", "EE_PT", "EE_BD");
    for (const auto& e : boundary_sweep(uniform_alpha_grid(9, 0.1, 0.9), ctx)) {
        if (e.point)
            std::printf("%6.2f %14.6g %14.6g\n", e.alpha, e.point->achieved.ee_pt, e.point->achieved.ee_bd);
        else
            std::printf("%6.2f  failed: %s\n", e.alpha, e.error.c_str());
    }
}
