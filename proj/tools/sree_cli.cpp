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

// sree command-line driver.
//
//   sree corners     --config cfg.json --out DIR
//   sree boundary    --config cfg.json --out DIR [--alpha-count N] [--seed N]
//   sree convergence --config cfg.json --out DIR [--alpha A] [--eta E | --eta-fraction F]
//   sree validate    --config cfg.json
//
// Exit codes: 0 success, 1 validation checks failed, 2 configuration error, 3 solver failure.

#include <CLI11.hpp>
#include <json.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "sree/cli/commands.hpp"

namespace fs = std::filesystem;
using namespace sree;
using namespace sree::cli;

namespace {

constexpr int exit_ok = 0;
constexpr int exit_checks_failed = 1;
constexpr int exit_config = 2;
constexpr int exit_solver = 3;

struct Options {
    std::string config_path;
    std::string out_dir;
    std::optional<std::uint64_t> seed;
    std::optional<int> alpha_count;
    bool quiet = false;
    double alpha = 0.5;
    std::optional<double> eta;
    double eta_fraction = 0.5;
};

ExperimentConfig load(const Options& o) {
    json doc = json::object();
    if (!o.config_path.empty()) {
        std::ifstream in(o.config_path);
        if (!in) throw ConfigError("cannot open config file " + o.config_path);
        try {
            doc = json::parse(in);
        } catch (const json::parse_error& e) {
            throw ConfigError(std::string("config is not valid JSON: ") + e.what());
        }
    }
    ExperimentConfig cfg = parse_config(doc);
    if (o.seed) cfg.seeds = {*o.seed};
    if (o.alpha_count) {
        if (*o.alpha_count < 1) throw ConfigError("--alpha-count must be at least 1");
        cfg.alphas = uniform_alpha_grid(*o.alpha_count);
    }
    if (!o.out_dir.empty()) cfg.output_dir = o.out_dir;
    return cfg;
}

void write_file(const fs::path& p, const std::string& body) {
    std::ofstream f(p, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + p.string());
    f << body;
}

void emit(const ExperimentConfig& cfg, const std::string& cmd, const RunOutput& run, bool quiet) {
    if (cfg.output_dir.empty()) {
        std::cout << run.csv;
        return;
    }
    const fs::path dir(cfg.output_dir);
    fs::create_directories(dir);
    write_file(dir / (cmd + ".csv"), run.csv);
    write_file(dir / (cmd + ".manifest.json"), manifest(cfg, cmd).dump(2) + "\n");
    write_file(dir / (cmd + ".witnesses.json"), run.witnesses.dump(2) + "\n");
    if (!quiet) std::cerr << "wrote " << (dir / (cmd + ".csv")).string() << "\n";
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Energy-efficiency region toolkit for MISO symbiotic radio links"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(sree::version));

    Options o;
    auto common = [&](CLI::App* sub) {
        sub->add_option("--config", o.config_path, "JSON experiment config");
        sub->add_option("--out", o.out_dir, "output directory (default: CSV to stdout)");
        sub->add_option("--seed", o.seed, "run a single seed, overriding the config");
        sub->add_option("--alpha-count", o.alpha_count, "uniform alpha grid size on [0.01, 0.99]");
        sub->add_flag("--quiet", o.quiet, "suppress progress messages");
    };
    auto* corners = app.add_subcommand("corners", "individual EE optima and the rate benchmark");
    auto* boundary = app.add_subcommand("boundary", "Pareto boundary of the EE region");
    auto* convergence = app.add_subcommand("convergence", "SCA trace at one (alpha, eta)");
    auto* validate = app.add_subcommand("validate", "structural property checks");
    for (auto* s : {corners, boundary, convergence, validate}) common(s);
    convergence->add_option("--alpha", o.alpha, "profile parameter")->check(CLI::Range(1e-3, 1.0 - 1e-3));
    auto* eta_opt = convergence->add_option("--eta", o.eta, "EE level in profile units");
    convergence->add_option("--eta-fraction", o.eta_fraction, "EE level as a fraction of its upper bound")
        ->excludes(eta_opt);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? exit_ok : exit_config;
    }

    try {
        const ExperimentConfig cfg = load(o);
        if (*corners) {
            emit(cfg, "corners", cmd_corners(cfg), o.quiet);
        } else if (*boundary) {
            emit(cfg, "boundary", cmd_boundary(cfg), o.quiet);
        } else if (*convergence) {
            emit(cfg, "convergence", cmd_convergence(cfg, {o.alpha, o.eta, o.eta_fraction}), o.quiet);
        } else if (*validate) {
            const auto rep = cmd_validate(cfg);
            if (!o.quiet || !rep.all_pass()) std::cout << rep.table();
            if (!cfg.output_dir.empty()) {
                fs::create_directories(cfg.output_dir);
                write_file(fs::path(cfg.output_dir) / "validate.txt", rep.table());
                write_file(fs::path(cfg.output_dir) / "validate.manifest.json", manifest(cfg, "validate").dump(2) + "\n");
            }
            return rep.all_pass() ? exit_ok : exit_checks_failed;
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "sree: configuration error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::domain_error& e) {
        std::cerr << "sree: configuration error: " << e.what() << "\n";
        return exit_config;
    } catch (const std::exception& e) {
        std::cerr << "sree: solver failure: " << e.what() << "\n";
        return exit_solver;
    }
    return exit_ok;
}
