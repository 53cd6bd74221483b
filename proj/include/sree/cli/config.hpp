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

#ifndef SREE_CLI_CONFIG_HPP
#define SREE_CLI_CONFIG_HPP

#include <json.hpp>

#include <cstdint>
#include <cstdio>
#include <initializer_list>
#include <set>
#include <string>
#include <vector>

#include "sree/channel.hpp"
#include "sree/errors.hpp"
#include "sree/numerics.hpp"
#include "sree/pareto.hpp"

namespace sree::cli {

using json = nlohmann::json;

class ConfigError : public ValidationError {
  public:
    using ValidationError::ValidationError;
};

struct SolverSettings {
    double kappa = 1e-3;
    RootConfig root{};
    double bisection_rel_tol = 1e-3;
    int sca_max_iters = 500;
    ProfileScaling scaling = ProfileScaling::CornerNormalized;
    unsigned threads = 1;

    ParetoConfig pareto() const {
        ParetoConfig c;
        c.sca.kappa = kappa;
        c.sca.max_iters = sca_max_iters;
        c.root = root;
        c.bisection_rel_tol = bisection_rel_tol;
        c.scaling = scaling;
        return c;
    }
};

struct ExperimentConfig {
    ScenarioGeometry geometry{};
    RFParams rf{};
    std::vector<std::uint64_t> seeds{1};
    std::vector<double> alphas = uniform_alpha_grid(21, 0.01, 0.99);
    SolverSettings solver{};
    std::string output_dir;
};

namespace detail {

inline void reject_unknown(const json& obj, const std::string& where, std::initializer_list<const char*> allowed) {
    if (!obj.is_object()) throw ConfigError(where + ": expected an object");
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, _] : obj.items())
        if (!ok.contains(key)) throw ConfigError(where + ": unknown key '" + key + "'");
}

inline double number(const json& obj, const char* key, const std::string& where) {
    const auto& v = obj.at(key);
    if (!v.is_number()) throw ConfigError(where + "." + key + ": expected a number");
    return v.get<double>();
}

template <class T>
void read_if(const json& obj, const char* key, const std::string& where, T& out) {
    if (!obj.contains(key)) return;
    if constexpr (std::is_same_v<T, std::string>) {
        if (!obj.at(key).is_string()) throw ConfigError(where + "." + key + ": expected a string");
        out = obj.at(key).get<std::string>();
    } else if constexpr (std::is_integral_v<T>) {
        const auto& v = obj.at(key);
        if (!v.is_number_integer()) throw ConfigError(where + "." + key + ": expected an integer");
        out = v.get<T>();
    } else {
        out = static_cast<T>(number(obj, key, where));
    }
}

// Exactly one of two unit-tagged spellings may be given.
inline bool exclusive(const json& obj, const char* a, const char* b, const std::string& where) {
    if (obj.contains(a) && obj.contains(b))
        throw ConfigError(where + ": give either '" + a + "' or '" + b + "', not both");
    return obj.contains(a) || obj.contains(b);
}

}  // namespace detail

/// Parses and validates an experiment document. Omitted keys keep their defaults.
///
/// Units are part of the key names: *_m (meters), *_deg / *_rad, *_db (linear otherwise),
/// *_dbm / *_w, *_hz.
inline ExperimentConfig parse_config(const json& doc) {
    using namespace detail;
    ExperimentConfig cfg;
    reject_unknown(doc, "config", {"geometry", "rf", "seeds", "alpha_grid", "solver", "output_dir"});

    try {
        if (doc.contains("geometry")) {
            const auto& g = doc.at("geometry");
            const std::string w = "geometry";
            reject_unknown(g, w, {"antennas", "d0_m", "theta_deg", "theta_rad", "rician_k_db", "rician_k",
                                  "pathloss_exp_tr", "pathloss_exp_td", "pathloss_exp_dr"});
            auto& geo = cfg.geometry;
            read_if(g, "antennas", w, geo.antennas);
            read_if(g, "d0_m", w, geo.d0_m);
            if (exclusive(g, "theta_deg", "theta_rad", w))
                geo.theta_rad = g.contains("theta_deg") ? deg_to_rad(number(g, "theta_deg", w)) : number(g, "theta_rad", w);
            if (exclusive(g, "rician_k_db", "rician_k", w))
                geo.rician_k = g.contains("rician_k_db") ? db_to_linear(number(g, "rician_k_db", w)) : number(g, "rician_k", w);
            read_if(g, "pathloss_exp_tr", w, geo.pathloss_exp_tr);
            read_if(g, "pathloss_exp_td", w, geo.pathloss_exp_td);
            read_if(g, "pathloss_exp_dr", w, geo.pathloss_exp_dr);
        }
        if (doc.contains("rf")) {
            const auto& r = doc.at("rf");
            const std::string w = "rf";
            reject_unknown(r, w, {"bandwidth_hz", "noise_dbm", "noise_w", "reflection", "pa_inefficiency",
                                  "pt_circuit_w", "bd_circuit_w", "pmax_w", "carrier_hz"});
            auto& rf = cfg.rf;
            read_if(r, "bandwidth_hz", w, rf.bandwidth_hz);
            if (exclusive(r, "noise_dbm", "noise_w", w))
                rf.noise_w = r.contains("noise_dbm") ? dbm_to_watts(number(r, "noise_dbm", w)) : number(r, "noise_w", w);
            read_if(r, "reflection", w, rf.reflection);
            read_if(r, "pa_inefficiency", w, rf.pa_inefficiency);
            read_if(r, "pt_circuit_w", w, rf.pt_circuit_w);
            read_if(r, "bd_circuit_w", w, rf.bd_circuit_w);
            read_if(r, "pmax_w", w, rf.pmax_w);
            read_if(r, "carrier_hz", w, rf.carrier_hz);
        }
        if (doc.contains("seeds")) {
            const auto& s = doc.at("seeds");
            if (!s.is_array() || s.empty()) throw ConfigError("seeds: expected a non-empty array");
            cfg.seeds.clear();
            for (const auto& v : s) {
                if (!v.is_number_unsigned()) throw ConfigError("seeds: entries must be non-negative integers");
                cfg.seeds.push_back(v.get<std::uint64_t>());
            }
        }
        if (doc.contains("alpha_grid")) {
            const auto& a = doc.at("alpha_grid");
            if (a.is_array()) {
                if (a.empty()) throw ConfigError("alpha_grid: empty list");
                cfg.alphas.clear();
                for (const auto& v : a) {
                    if (!v.is_number()) throw ConfigError("alpha_grid: entries must be numbers");
                    cfg.alphas.push_back(v.get<double>());
                }
            } else {
                reject_unknown(a, "alpha_grid", {"count", "min", "max"});
                int count = 21;
                double lo = 0.01, hi = 0.99;
                read_if(a, "count", "alpha_grid", count);
                read_if(a, "min", "alpha_grid", lo);
                read_if(a, "max", "alpha_grid", hi);
                if (count < 1 || !(lo < hi || count == 1)) throw ConfigError("alpha_grid: need count >= 1 and min < max");
                cfg.alphas = uniform_alpha_grid(count, lo, hi);
            }
            for (double al : cfg.alphas) (void)EEProfile::make(al);
        }
        if (doc.contains("solver")) {
            const auto& s = doc.at("solver");
            const std::string w = "solver";
            reject_unknown(s, w, {"kappa", "root_abs_tol", "root_rel_tol", "root_max_iters", "bisection_rel_tol",
                                  "sca_max_iters", "profile_scaling", "threads"});
            auto& sv = cfg.solver;
            read_if(s, "kappa", w, sv.kappa);
            read_if(s, "root_abs_tol", w, sv.root.abs_tol);
            read_if(s, "root_rel_tol", w, sv.root.rel_tol);
            read_if(s, "root_max_iters", w, sv.root.max_iters);
            read_if(s, "bisection_rel_tol", w, sv.bisection_rel_tol);
            read_if(s, "sca_max_iters", w, sv.sca_max_iters);
            read_if(s, "threads", w, sv.threads);
            if (s.contains("profile_scaling")) {
                std::string mode;
                read_if(s, "profile_scaling", w, mode);
                if (mode == "corner_normalized") sv.scaling = ProfileScaling::CornerNormalized;
                else if (mode == "raw") sv.scaling = ProfileScaling::Raw;
                else throw ConfigError("solver.profile_scaling: expected 'corner_normalized' or 'raw'");
            }
            if (sv.threads < 1 || sv.threads > 1024) throw ConfigError("solver.threads: expected 1..1024");
            if (!(sv.kappa > 0.0) || !(sv.bisection_rel_tol > 0.0) || sv.sca_max_iters < 1)
                throw ConfigError("solver: kappa, bisection_rel_tol must be positive, sca_max_iters >= 1");
            sv.root.validate();
        }
        read_if(doc, "output_dir", "config", cfg.output_dir);

        cfg.geometry.validate();
        cfg.rf.validate();
        (void)bd_pr_distance(cfg.geometry);
    } catch (const ConfigError&) {
        throw;
    } catch (const ValidationError& e) {
        throw ConfigError(e.what());
    } catch (const json::exception& e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    return cfg;
}

inline json canonical_json(const ExperimentConfig& c) {
    json j;
    j["geometry"] = {{"antennas", c.geometry.antennas},
                     {"d0_m", c.geometry.d0_m},
                     {"theta_rad", c.geometry.theta_rad},
                     {"rician_k", c.geometry.rician_k},
                     {"pathloss_exp_tr", c.geometry.pathloss_exp_tr},
                     {"pathloss_exp_td", c.geometry.pathloss_exp_td},
                     {"pathloss_exp_dr", c.geometry.pathloss_exp_dr}};
    j["rf"] = {{"bandwidth_hz", c.rf.bandwidth_hz}, {"noise_w", c.rf.noise_w},
               {"reflection", c.rf.reflection},     {"pa_inefficiency", c.rf.pa_inefficiency},
               {"pt_circuit_w", c.rf.pt_circuit_w}, {"bd_circuit_w", c.rf.bd_circuit_w},
               {"pmax_w", c.rf.pmax_w},             {"carrier_hz", c.rf.carrier_hz}};
    j["seeds"] = c.seeds;
    j["alpha_grid"] = c.alphas;
    j["solver"] = {{"kappa", c.solver.kappa},
                   {"root_abs_tol", c.solver.root.abs_tol},
                   {"root_rel_tol", c.solver.root.rel_tol},
                   {"root_max_iters", c.solver.root.max_iters},
                   {"bisection_rel_tol", c.solver.bisection_rel_tol},
                   {"sca_max_iters", c.solver.sca_max_iters},
                   {"profile_scaling", c.solver.scaling == ProfileScaling::Raw ? "raw" : "corner_normalized"}};
    return j;
}

// FNV-1a 64 of the canonical config dump.
inline std::string config_hash(const ExperimentConfig& c) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : canonical_json(c).dump()) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace sree::cli

#endif
