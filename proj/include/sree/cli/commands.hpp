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

#ifndef SREE_CLI_COMMANDS_HPP
#define SREE_CLI_COMMANDS_HPP

#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "sree/cli/config.hpp"
#include "sree/sree.hpp"

namespace sree::cli {

// Output of one command: the CSV body plus the witness beamformers behind every EE value.
struct RunOutput {
    std::string csv;
    json witnesses = json::array();
};

inline std::string fmt_num(double v) {
    if (std::isnan(v)) return "";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

// RFC-4180 quoting.
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + "\"";
}

class CsvWriter {
  public:
    explicit CsvWriter(std::initializer_list<const char*> header) {
        bool first = true;
        for (const char* h : header) {
            if (!first) out_ << ',';
            out_ << h;
            first = false;
        }
        out_ << "\r\n";
    }
    template <class... Cells>
    void row(const Cells&... cells) {
        bool first = true;
        ((out_ << (first ? "" : ",") << cell(cells), first = false), ...);
        out_ << "\r\n";
    }
    std::string str() const { return out_.str(); }

  private:
    static std::string cell(double v) { return fmt_num(v); }
    static std::string cell(int v) { return std::to_string(v); }
    static std::string cell(std::uint64_t v) { return std::to_string(v); }
    static std::string cell(const std::string& s) { return csv_field(s); }
    static std::string cell(const char* s) { return csv_field(s); }
    std::ostringstream out_;
};

inline json witness_json(const CVec& w) {
    json arr = json::array();
    for (const auto& x : w) arr.push_back({x.real(), x.imag()});
    return arr;
}

inline CVec witness_from_json(const json& arr) {
    std::vector<cplx> v;
    for (const auto& x : arr) v.emplace_back(x.at(0).get<double>(), x.at(1).get<double>());
    return CVec(std::move(v));
}

inline ChannelSet channels_for(const ExperimentConfig& cfg, std::uint64_t seed) {
    return gen_channels(cfg.geometry, cfg.rf, seed);
}

/// Corner points: PT_EE_MAX, BD_EE_MAX and the PT_RATE_MAX benchmark per seed.
inline RunOutput cmd_corners(const ExperimentConfig& cfg) {
    CsvWriter csv{"seed", "label", "p_star_W", "ee_pt", "ee_bd", "status"};
    RunOutput out;
    for (auto seed : cfg.seeds) {
        const auto ch = channels_for(cfg, seed);
        const auto pareto_cfg = cfg.solver.pareto();
        auto emit = [&](CornerLabel label, auto&& compute) {
            const std::string name{to_string(label)};
            try {
                const CornerResult r = compute();
                const auto pair = r.pair();
                csv.row(seed, name, r.p_star, pair.ee_pt, pair.ee_bd, "ok");
                out.witnesses.push_back({{"seed", seed}, {"label", name}, {"w", witness_json(r.w())}});
            } catch (const std::exception& e) {
                csv.row(seed, name, NAN, NAN, NAN, std::string("error: ") + e.what());
            }
        };
        emit(CornerLabel::PtEeMax, [&] { return pt_ee_max(ch, cfg.rf, pareto_cfg.root); });
        emit(CornerLabel::BdEeMax, [&] { return bd_ee_max(ch, cfg.rf); });
        emit(CornerLabel::PtRateMax, [&] { return pt_rate_max(ch, cfg.rf); });
    }
    out.csv = csv.str();
    return out;
}

/// Pareto boundary per seed, bracketed by the two individual optima. With several seeds, rows with
/// seed "mean" average each column over the seeds that succeeded.
inline RunOutput cmd_boundary(const ExperimentConfig& cfg) {
    CsvWriter csv{"seed", "kind", "alpha", "eta_star", "ee_pt_ray", "ee_bd_ray", "ee_pt_achieved",
                  "ee_bd_achieved", "bisection_iters", "sca_iters", "status"};
    RunOutput out;
    const auto pcfg = cfg.solver.pareto();
    const std::size_t n_rows = cfg.alphas.size() + 2;
    std::vector<std::vector<double>> sums(n_rows, std::vector<double>(6, 0.0));
    std::vector<int> counts(n_rows, 0);

    for (auto seed : cfg.seeds) {
        std::optional<RegionContext> ctx;
        try {
            ctx = RegionContext::build(channels_for(cfg, seed), cfg.rf, pcfg);
        } catch (const std::exception& e) {
            csv.row(seed, "region", NAN, NAN, NAN, NAN, NAN, NAN, 0, 0, std::string("error: ") + e.what());
            continue;
        }
        auto corner_row = [&](std::size_t slot, const char* kind, double alpha, const CornerResult& c) {
            const auto p = c.pair();
            csv.row(seed, kind, alpha, NAN, p.ee_pt, p.ee_bd, p.ee_pt, p.ee_bd, 0, 0, "ok");
            out.witnesses.push_back({{"seed", seed}, {"kind", kind}, {"alpha", alpha}, {"w", witness_json(c.w())}});
            const double vals[6] = {0.0, p.ee_pt, p.ee_bd, p.ee_pt, p.ee_bd, 0.0};
            for (int k = 0; k < 6; ++k) sums[slot][k] += vals[k];
            ++counts[slot];
        };

        corner_row(0, "corner_bd", 0.0, ctx->bd_corner);
        const auto sweep = boundary_sweep(cfg.alphas, *ctx, pcfg, cfg.solver.threads);
        for (std::size_t i = 0; i < sweep.size(); ++i) {
            const auto& e = sweep[i];
            if (!e.point) {
                csv.row(seed, "boundary", e.alpha, NAN, NAN, NAN, NAN, NAN, 0, 0, "error: " + e.error);
                continue;
            }
            const auto& p = *e.point;
            csv.row(seed, "boundary", p.alpha, p.eta_star, p.ray_point.ee_pt, p.ray_point.ee_bd, p.achieved.ee_pt,
                    p.achieved.ee_bd, p.bisection_iters, p.sca_total_iters, "ok");
            out.witnesses.push_back(
                {{"seed", seed}, {"kind", "boundary"}, {"alpha", p.alpha}, {"w", witness_json(p.w_star)}});
            const double vals[6] = {p.eta_star, p.ray_point.ee_pt, p.ray_point.ee_bd,
                                    p.achieved.ee_pt, p.achieved.ee_bd, 0.0};
            for (int k = 0; k < 6; ++k) sums[i + 1][k] += vals[k];
            ++counts[i + 1];
        }
        corner_row(n_rows - 1, "corner_pt", 1.0, ctx->pt_corner);
    }

    if (cfg.seeds.size() > 1) {
        for (std::size_t slot = 0; slot < n_rows; ++slot) {
            const bool corner = slot == 0 || slot + 1 == n_rows;
            const char* kind = slot == 0 ? "corner_bd" : (corner ? "corner_pt" : "boundary");
            const double alpha = slot == 0 ? 0.0 : (corner ? 1.0 : cfg.alphas[slot - 1]);
            if (counts[slot] == 0) {
                csv.row("mean", kind, alpha, NAN, NAN, NAN, NAN, NAN, 0, 0, "error: no successful seed");
                continue;
            }
            const double n = counts[slot];
            const auto& s = sums[slot];
            csv.row("mean", kind, alpha, corner ? NAN : s[0] / n, s[1] / n, s[2] / n, s[3] / n, s[4] / n, 0, 0,
                    "ok (" + std::to_string(counts[slot]) + " seeds)");
        }
    }
    out.csv = csv.str();
    return out;
}

class InfeasibleRequest : public SolverError {
  public:
    using SolverError::SolverError;
};

struct ConvergenceRequest {
    double alpha = 0.5;
    std::optional<double> eta;  // profile units; defaults to eta_fraction * eta_ub
    double eta_fraction = 0.5;
};

/// One SCA run at (alpha, eta) on the first seed: surrogate-bound and accurate EE_BD per iteration.
inline RunOutput cmd_convergence(const ExperimentConfig& cfg, const ConvergenceRequest& req) {
    const auto pcfg = cfg.solver.pareto();
    const auto ctx = RegionContext::build(channels_for(cfg, cfg.seeds.front()), cfg.rf, pcfg);
    const auto prof = EEProfile::make(req.alpha);
    const auto wts = ctx.weights(prof);
    const double eta_ub = std::min(ctx.eta_pt_max() / wts.pt, ctx.eta_bd_max() / wts.bd);
    const double eta = req.eta.value_or(req.eta_fraction * eta_ub);
    if (!(eta >= 0.0)) throw InfeasibleRequest("convergence: eta must be non-negative");
    if (eta > 0.0 && !(wts.pt * eta < ctx.eta_pt_max()))
        throw InfeasibleRequest("convergence: EE_PT target " + fmt_num(wts.pt * eta) +
                                " bits/J is not below the PT maximum " + fmt_num(ctx.eta_pt_max()));

    ScaOptions opt = pcfg.sca;
    ScaResult run;
    try {
        run = sca_run(wts.pt * eta, initial_point(ctx), ctx.ch, ctx.rf, opt);
    } catch (const InfeasibleStartError& e) {
        throw InfeasibleRequest(std::string("convergence: ") + e.what());
    }

    CsvWriter csv{"iteration", "bound_objective_ee_bd", "accurate_ee_bd"};
    for (const auto& r : run.trace) csv.row(r.iteration, r.bound_ee_bd, r.accurate_ee_bd);
    RunOutput out;
    out.csv = csv.str();
    out.witnesses.push_back({{"seed", cfg.seeds.front()}, {"alpha", req.alpha}, {"eta", eta},
                             {"w", witness_json(run.w_star)}});
    return out;
}

struct CheckResult {
    std::string name;
    std::uint64_t seed = 0;
    bool pass = false;
    std::string detail;
};

struct ValidationReport {
    std::vector<CheckResult> checks;
    bool all_pass() const {
        return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.pass; });
    }
    std::string table() const {
        std::ostringstream os;
        for (const auto& c : checks) {
            char line[256];
            std::snprintf(line, sizeof line, "%-22s seed=%-6llu %s  %s\n", c.name.c_str(),
                          static_cast<unsigned long long>(c.seed), c.pass ? "PASS" : "FAIL", c.detail.c_str());
            os << line;
        }
        os << (all_pass() ? "all checks passed\n" : "some checks FAILED\n");
        return os.str();
    }
};

/// Structural property suite on the configured scenario: shape of the optimal-SINR curve and of
/// the EE stationarity kernel, the two closed forms of the optimal SINR, optimality of the root,
/// corner consistency and SCA monotonicity.
inline ValidationReport cmd_validate(const ExperimentConfig& cfg) {
    ValidationReport rep;
    const auto pcfg = cfg.solver.pareto();
    for (auto seed : cfg.seeds) {
        auto add = [&](std::string name, bool ok, std::string detail) {
            rep.checks.push_back({std::move(name), seed, ok, std::move(detail)});
        };
        const auto ch = channels_for(cfg, seed);
        const auto& rf = cfg.rf;
        const auto sp = SinrProfile::of(ch);
        const double pmax = rf.pmax_w;
        constexpr int n = 2000;
        const double dp = 10.0 * pmax / n;

        bool f_ok = true, h_ok = true;
        double worst_curv = 0.0;
        for (int i = 0; i <= n; ++i) {
            const double p = i * dp;
            const double f0 = sp.f(p);
            if (f0 < 0.0) f_ok = false;
            if (i > 0 && f0 < sp.f(p - dp) - 1e-12 * std::max(1.0, f0)) f_ok = false;
            if (i > 0 && i < n) {
                const double second = sp.f(p + dp) - 2.0 * f0 + sp.f(p - dp);
                worst_curv = std::max(worst_curv, second / std::max(1.0, f0));
                if (second > 1e-8 * std::max(1.0, f0)) f_ok = false;
            }
            if (i > 0 && ee_power_kernel(sp, rf, p) > ee_power_kernel(sp, rf, p - dp) + 1e-9 * std::max(1.0, sp.a * rf.pt_circuit_w))
                h_ok = false;
        }
        add("f_concave_increasing", f_ok, "max rel 2nd diff " + fmt_num(worst_curv));
        add("h_nonincreasing", h_ok, "grid of " + std::to_string(n + 1) + " points on [0, 10 Pmax]");

        const double h0 = ee_power_kernel(sp, rf, 0.0);
        const double want = sp.a * rf.pt_circuit_w;
        add("h0_positive", h0 > 0.0 && std::abs(h0 - want) <= 1e-12 * want, "h(0)=" + fmt_num(h0));

        double fd_err = 0.0, dual_err = 0.0;
        for (int i = 1; i <= 50; ++i) {
            const double p = pmax * i / 5.0;
            const double step = 1e-5 * p;
            const double fd = (sp.f(p + step) - sp.f(p - step)) / (2.0 * step);
            fd_err = std::max(fd_err, std::abs(fd - sp.df(p)) / std::abs(sp.df(p)));
            const double q = max_sinr_quadratic(ch, p);
            dual_err = std::max(dual_err, std::abs(q - sp.f(p)) / std::max(1e-300, std::abs(sp.f(p))));
        }
        add("df_finite_difference", fd_err <= 1e-6, "max rel err " + fmt_num(fd_err));
        add("sinr_dual_forms", dual_err <= 1e-10, "max rel err " + fmt_num(dual_err));

        try {
            const auto pc = pt_ee_max(ch, rf, pcfg.root);
            double best = 0.0;
            for (int i = 1; i <= 20000; ++i) {
                const double p = pmax * i / 20000.0;
                best = std::max(best, ee_pt_from_sinr(sp.f(p), p, rf));
            }
            add("root_optimality", pc.ee_self >= best * (1.0 - 5e-4),
                "EE(p*)=" + fmt_num(pc.ee_self) + " grid max=" + fmt_num(best));

            const auto bc = bd_ee_max(ch, rf);
            const double e1 = std::abs(ee_pt(pc.w(), ch, rf) - pc.ee_self) / pc.ee_self;
            const double e2 = std::abs(ee_bd(bc.w(), ch, rf) - bc.ee_self) / bc.ee_self;
            const double e3 = std::abs(ee_pt(bc.w(), ch, rf) - bc.ee_other) / std::max(1e-300, bc.ee_other);
            const double worst = std::max({e1, e2, e3});
            add("corner_consistency", worst <= 1e-10, "max rel err " + fmt_num(worst));

            const auto ctx = RegionContext::build(ch, rf, pcfg);
            const auto wts = ctx.weights(EEProfile::make(0.5));
            const double eta = 0.5 * std::min(ctx.eta_pt_max() / wts.pt, ctx.eta_bd_max() / wts.bd);
            const auto run = sca_run(wts.pt * eta, initial_point(ctx), ch, rf, pcfg.sca);
            bool mono = true;
            for (std::size_t i = 1; i < run.trace.size(); ++i) {
                const auto& r = run.trace[i];
                if (r.accurate_ee_bd < run.trace[i - 1].accurate_ee_bd * (1.0 - 1e-9)) mono = false;
                if (r.accurate_ee_bd < r.bound_ee_bd * (1.0 - 1e-12)) mono = false;
            }
            add("sca_monotone", mono, std::to_string(run.iterations) + " iterations");
        } catch (const std::exception& e) {
            add("corner_and_sca", false, e.what());
        }
    }
    return rep;
}

inline json manifest(const ExperimentConfig& cfg, const std::string& command) {
    return {{"tool", "sree"},
            {"version", sree::version},
            {"command", command},
            {"config_hash", config_hash(cfg)},
            {"seeds", cfg.seeds},
            {"config", canonical_json(cfg)}};
}

}  // namespace sree::cli

#endif
