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

#ifndef SREE_SREE_HPP
#define SREE_SREE_HPP

#include "sree/channel.hpp"
#include "sree/cvec.hpp"
#include "sree/ee_model.hpp"
#include "sree/errors.hpp"
#include "sree/individual_opt.hpp"
#include "sree/numerics.hpp"
#include "sree/pareto.hpp"
#include "sree/sca_solver.hpp"

namespace sree {
inline constexpr const char* version = "0.3.0";
}

#endif
