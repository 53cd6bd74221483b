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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "../oracles.hpp"
#include "../scenarios.hpp"
#include "sree/cli/commands.hpp"

using namespace sree;

namespace {

namespace tol {
constexpr double e1_rel = 1e-10;
constexpr double sinr_forms_rel = 1e-10;
constexpr double root_grid_rel = 5e-4;
constexpr double sca_step_rel = 1e-9;
constexpr int sca_max_iters = 50;
constexpr double sca_kappa = 1e-3;
constexpr double corner_rel = 1e-2;
constexpr double brute_force_rel = 2e-2;
constexpr double dominance_band = 2e-2;
}  // namespace tol

namespace budget_s {
constexpr double c1 = 1.0;
constexpr double c2 = 1.0;
constexpr double c3 = 30.0;
constexpr double c4 = 10.0;
constexpr double c5 = 60.0;
constexpr double c6 = 300.0;
constexpr double c7 = 300.0;
constexpr double c8 = 300.0;
}  // namespace budget_s

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string num(double v) {
    char b[32];
    std::snprintf(b, sizeof b, "%.3g", v);
    return b;
}

int failures = 0;

void run(int id, const char* name, double budget, const std::function<Outcome()>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > budget) {
        o.pass = false;
        o.detail += "; over time budget " + num(budget) + " s";
    }
    if (!o.pass) ++failures;
    std::printf("criterion %d: %s  %-34s %s [%.2f s]\n", id, o.pass ? "PASS" : "FAIL", name, o.detail.c_str(), secs);
    std::fflush(stdout);
}

Outcome special_function() {
    double worst = 0.0;
    for (int i = 0; i < 50; ++i) {
        const double z = std::pow(10.0, -8.0 + 16.0 * i / 49.0);
        const double ref = oracle::e1_scaled_quadrature(z);
        worst = std::max(worst, std::abs(exp_e1_scaled(z) - ref) / ref);
    }
    return {worst <= tol::e1_rel, "max rel err " + num(worst) + " over 50 z in [1e-8, 1e8]"};
}

Outcome closed_forms() {
    std::mt19937_64 rng(2024);
    std::uniform_real_distribution<double> u(-6.0, 1.0);
    double worst = 0.0, worst_dense = 0.0;
    int n = 0;
    for (int m : {1, 2, 4, 8})
        for (int i = 0; i < 25; ++i, ++n) {
            const auto ch = scenario::random_instance(5000 + n, m);
            const double p = RFParams{}.pmax_w * std::pow(10.0, u(rng));
            const double q = max_sinr_quadratic(ch, p);
            const double r = max_sinr_closed(ch, p);
            worst = std::max(worst, std::abs(q - r) / r);
            worst_dense = std::max(worst_dense, std::abs(oracle::max_sinr_dense(ch, p) - r) / r);
        }
    return {worst <= tol::sinr_forms_rel && worst_dense <= tol::sinr_forms_rel,
            "quadratic vs rational " + num(worst) + ", dense solve vs rational " + num(worst_dense) + " (" +
                std::to_string(n) + " instances)"};
}

Outcome theorem1() {
    const RFParams rf;
    constexpr int grid = 100000;
    constexpr int shape_grid = 2000;
    double worst_gap = -1.0;
    int shape_failures = 0, clipped = 0;
    for (int i = 0; i < 100; ++i) {
        const auto ch = scenario::random_instance(7000 + i, 4);
        const auto sp = SinrProfile::of(ch);
        const auto c = pt_ee_max(ch, rf);
        if (c.power_clipped) ++clipped;
        const double ee_root = ee_pt_from_sinr(oracle::max_sinr_dense(ch, c.p_root), c.p_root, rf);
        const double ee_star = c.ee_self;
        double best_all = 0.0, best_budget = 0.0;
        for (int k = 1; k <= grid; ++k) {
            const double p = 10.0 * rf.pmax_w * k / grid;
            const double ee = ee_pt_from_sinr(oracle::max_sinr_dense(ch, p), p, rf);
            best_all = std::max(best_all, ee);
            if (p <= rf.pmax_w) best_budget = std::max(best_budget, ee);
        }
        worst_gap = std::max({worst_gap, (best_all - ee_root) / best_all, (best_budget - ee_star) / best_budget});

        const double dp = 10.0 * rf.pmax_w / shape_grid;
        const double h0 = ee_power_kernel(sp, rf, 0.0);
        const double want_h0 = ch.h_hat.norm2() * rf.pt_circuit_w;
        bool ok = h0 > 0.0 && std::abs(h0 - want_h0) <= 1e-12 * want_h0;
        for (int k = 1; k <= shape_grid && ok; ++k) {
            const double p = k * dp;
            const double f0 = sp.f(p), fm = sp.f(p - dp);
            if (f0 < fm) ok = false;
            if (k < shape_grid && sp.f(p + dp) - 2.0 * f0 + fm > 1e-10 * f0) ok = false;
            if (ee_power_kernel(sp, rf, p) > ee_power_kernel(sp, rf, p - dp) + 1e-12 * want_h0) ok = false;
        }
        if (!ok) ++shape_failures;
    }
    return {worst_gap <= tol::root_grid_rel && shape_failures == 0,
            "worst grid excess " + num(std::max(worst_gap, 0.0)) + " (1e5 pts), shape failures " +
                std::to_string(shape_failures) + "/100, clipped " + std::to_string(clipped)};
}

bool trace_ok(const ScaResult& r, std::string& why) {
    if (r.iterations > tol::sca_max_iters) {
        why = "too many iterations";
        return false;
    }
    for (std::size_t i = 0; i < r.trace.size(); ++i) {
        const auto& t = r.trace[i];
        if (t.accurate_ee_bd < t.bound_ee_bd * (1.0 - 1e-12)) {
            why = "accurate below bound at iteration " + std::to_string(i);
            return false;
        }
        if (i > 0 && t.accurate_ee_bd < r.trace[i - 1].accurate_ee_bd * (1.0 - tol::sca_step_rel)) {
            why = "accurate EE decreased at iteration " + std::to_string(i);
            return false;
        }
    }
    return true;
}

Outcome sca_behaviour() {
    const auto ctx = RegionContext::build(scenario::default_instance(), RFParams{});
    const auto wts = ctx.weights(EEProfile::make(0.5));
    const double eta = 0.5 * std::min(ctx.eta_pt_max() / wts.pt, ctx.eta_bd_max() / wts.bd);
    const double target = wts.pt * eta;
    ScaOptions opt;
    opt.kappa = tol::sca_kappa;

    std::vector<CVec> starts{initial_point(ctx)};
    std::mt19937_64 rng(77);
    std::normal_distribution<double> n;
    while (starts.size() < 6) {
        CVec r(ctx.ch.antennas());
        for (auto& x : r) x = {n(rng), n(rng)};
        r *= cplx{ctx.pt_corner.w().norm() / r.norm(), 0.0};
        // Random direction blended into the PT optimum until the EE_PT floor holds strictly.
        for (double t = 0.8; t > 1e-4; t *= 0.5) {
            const CVec w = ctx.pt_corner.w() * cplx{1.0 - t, 0.0} + r * cplx{t, 0.0};
            if (ee_pt(w, ctx.ch, ctx.rf) > target * (1.0 + 1e-6) && w.norm2() < ctx.rf.pmax_w) {
                starts.push_back(w);
                break;
            }
        }
    }
    int max_iters = 0;
    for (std::size_t s = 0; s < starts.size(); ++s) {
        const auto r = sca_run(target, starts[s], ctx.ch, ctx.rf, opt);
        std::string why;
        if (!trace_ok(r, why)) return {false, "start " + std::to_string(s) + ": " + why};
        max_iters = std::max(max_iters, r.iterations);
    }
    return {true, "6 starts, monotone, accurate >= bound, max " + std::to_string(max_iters) + " iterations"};
}

Outcome corners() {
    double worst = 0.0;
    for (std::uint64_t seed : {1, 2, 3}) {
        const auto ctx = RegionContext::build(scenario::default_instance(seed), RFParams{});
        const auto hi = pareto_point(EEProfile::make(0.999), ctx);
        const auto lo = pareto_point(EEProfile::make(0.001), ctx);
        for (double v : {hi.ray_point.ee_pt, hi.achieved.ee_pt})
            worst = std::max(worst, std::abs(v - ctx.eta_pt_max()) / ctx.eta_pt_max());
        for (double v : {lo.ray_point.ee_bd, lo.achieved.ee_bd})
            worst = std::max(worst, std::abs(v - ctx.eta_bd_max()) / ctx.eta_bd_max());
    }
    return {worst <= tol::corner_rel, "max rel deviation from the corners " + num(worst) + " (3 seeds)"};
}

Outcome brute_force() {
    ScenarioGeometry geo;
    geo.antennas = 2;
    const RFParams rf;
    double worst = 0.0;
    for (std::uint64_t seed : {1, 2}) {
        const auto ctx = RegionContext::build(gen_channels(geo, rf, seed), rf);
        for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
            const auto p = pareto_point(EEProfile::make(a), ctx);
            const auto w = ctx.weights(EEProfile::make(a));
            const auto bf = oracle::brute_force_eta(ctx.ch, rf, w.pt, w.bd);
            worst = std::max(worst, std::abs(p.eta_star - bf.eta) / bf.eta);
        }
    }
    return {worst <= tol::brute_force_rel,
            "max rel gap to brute force " + num(worst) + " (M = 2, 2 seeds x 5 alphas)"};
}

BoundaryCurve boundary_of(const ScenarioGeometry& geo, const RFParams& rf, std::uint64_t seed) {
    const auto ctx = RegionContext::build(gen_channels(geo, rf, seed), rf);
    std::vector<EEPair> pts{ctx.pt_corner.pair(), ctx.bd_corner.pair()};
    for (const auto& e : boundary_sweep(uniform_alpha_grid(21), ctx)) {
        if (!e.point) throw SolverError("boundary sweep failed at alpha " + num(e.alpha) + ": " + e.error);
        pts.push_back(e.point->achieved);
    }
    return BoundaryCurve(pts);
}

int undominated(const BoundaryCurve& outer, const BoundaryCurve& inner) {
    int bad = 0;
    for (const auto& p : inner.points())
        if (!outer.weakly_dominates(p, tol::dominance_band)) ++bad;
    return bad;
}

Outcome figures() {
    const std::uint64_t seed = 1;
    ScenarioGeometry g10, g20, g40;
    g10.theta_rad = deg_to_rad(10.0);
    g20.theta_rad = deg_to_rad(20.0);
    g40.theta_rad = deg_to_rad(40.0);
    RFParams rf, rf0;
    rf0.pt_circuit_w = 0.0;

    const auto c10 = boundary_of(g10, rf, seed);
    const auto c40 = boundary_of(g40, rf, seed);
    const auto c20 = boundary_of(g20, rf, seed);
    const auto c20_0 = boundary_of(g20, rf0, seed);
    const int a = undominated(c10, c40);
    const int b = undominated(c20_0, c20);

    int c = 0;
    const std::vector<std::pair<const BoundaryCurve*, ScenarioGeometry>> cases{{&c10, g10}, {&c20, g20}, {&c40, g40}};
    for (const auto& [curve, geo] : cases) {
        const auto rate = pt_rate_max(gen_channels(geo, rf, seed), rf).pair();
        if (!curve->weakly_dominates(rate, tol::dominance_band)) ++c;
    }
    return {a == 0 && b == 0 && c == 0, "(a) theta 10 over 40: " + std::to_string(a) +
                                            " undominated; (b) Ps 0 over 20 mW: " + std::to_string(b) +
                                            " undominated; (c) rate-max outside: " + std::to_string(c) + "/3"};
}

Outcome determinism() {
    auto cfg = cli::parse_config(cli::json::object());
    const auto first = cli::cmd_boundary(cfg).csv;
    const auto second = cli::cmd_boundary(cfg).csv;
    cfg.solver.threads = 4;
    const auto threaded = cli::cmd_boundary(cfg).csv;
    return {first == second && first == threaded,
            std::to_string(first.size()) + " bytes, repeat " + (first == second ? "identical" : "differs") +
                ", 4 threads " + (first == threaded ? "identical" : "differs")};
}

}  // namespace

int main() {
    std::printf("sree %s acceptance\n", std::string(sree::version).c_str());
    run(1, "special-function accuracy", budget_s::c1, special_function);
    run(2, "closed-form SINR equivalence", budget_s::c2, closed_forms);
    run(3, "stationary-power optimality", budget_s::c3, theorem1);
    run(4, "SCA monotone convergence", budget_s::c4, sca_behaviour);
    run(5, "boundary corner consistency", budget_s::c5, corners);
    run(6, "brute-force gap at M = 2", budget_s::c6, brute_force);
    run(7, "region ordering", budget_s::c7, figures);
    run(8, "determinism", budget_s::c8, determinism);
    std::printf("%d of 8 criteria failed\n", failures);
    return failures == 0 ? 0 : 1;
}
