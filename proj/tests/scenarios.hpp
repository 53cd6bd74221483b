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

// Channel instances shared by the tests.

#ifndef SREE_TESTS_SCENARIOS_HPP
#define SREE_TESTS_SCENARIOS_HPP

#include <random>

#include "sree/sree.hpp"

namespace scenario {

// Default geometry with M antennas and theta drawn from [5, 60] degrees by the instance index.
inline sree::ChannelSet random_instance(std::uint64_t idx, int m, const sree::RFParams& rf = {}) {
    std::mt19937_64 rng(1000 + idx);
    sree::ScenarioGeometry geo;
    geo.antennas = m;
    geo.theta_rad = sree::deg_to_rad(std::uniform_real_distribution<double>(5.0, 60.0)(rng));
    return sree::gen_channels(geo, rf, idx);
}

inline sree::ChannelSet default_instance(std::uint64_t seed = 1) {
    return sree::gen_channels(sree::ScenarioGeometry{}, sree::RFParams{}, seed);
}

}  // namespace scenario

#endif
