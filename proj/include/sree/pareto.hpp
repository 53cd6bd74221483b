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

#ifndef SREE_PARETO_HPP
#define SREE_PARETO_HPP

#include <algorithm>
#include <atomic>
#include <cmath>
#include <limits>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include "sree/channel.hpp"
#include "sree/cvec.hpp"
#include "sree/ee_model.hpp"
#include "sree/errors.hpp"
#include "sree/individual_opt.hpp"
#include "sree/numerics.hpp"
#include "sree/sca_solver.hpp"

namespace sree {

// Ray direction (alpha, 1 - alpha) in the EE plane.
struct EEProfile {
    double alpha = 0.5;

    static EEProfile make(double alpha) {
        if (!(alpha >= 1e-3 && alpha <= 1.0 - 1e-3))
            throw ValidationError("EEProfile: alpha must lie in [1e-3, 1 - 1e-3]");
        return {alpha};
    }
};

// How alpha maps onto the two EE axes.
//   Raw:              targets (alpha eta, (1 - alpha) eta) in bits/J.
//   CornerNormalized: targets (alpha eta EE_PT^max, (1 - alpha) eta EE_BD^max), so alpha spreads
//                     evenly along the boundary even when the two EEs differ by orders of magnitude.
enum class ProfileScaling { CornerNormalized, Raw };

struct ProfileWeights {
    double pt = 0.5;
    double bd = 0.5;
};

struct ParetoConfig {
    ScaOptions sca{};
    RootConfig root{};
    double bisection_rel_tol = 1e-3;
    int max_bisection_iters = 200;
    ProfileScaling scaling = ProfileScaling::CornerNormalized;
};

// Channel plus the two individual optima that bracket every boundary search.
struct RegionContext {
    ChannelSet ch;
    RFParams rf;
    CornerResult pt_corner;
    CornerResult bd_corner;
    ProfileScaling scaling = ProfileScaling::CornerNormalized;

    static RegionContext build(ChannelSet ch, const RFParams& rf, const ParetoConfig& cfg = {}) {
        rf.validate();
        if (!(ch.h_hat.norm2() > 0.0)) throw NoLinkError("RegionContext: no primary link (h = 0)");
        if (!(ch.g_hat.norm2() > 0.0)) throw NoLinkError("RegionContext: no backscatter link (g_hat = 0)");
        if (!(rf.pmax_w > 0.0)) throw ValidationError("RegionContext: Pmax must be positive");
        RegionContext ctx{std::move(ch), rf, {}, {}, cfg.scaling};
        ctx.pt_corner = pt_ee_max(ctx.ch, rf, cfg.root);
        ctx.bd_corner = bd_ee_max(ctx.ch, rf);
        return ctx;
    }

    double eta_pt_max() const { return pt_corner.ee_self; }
    double eta_bd_max() const { return bd_corner.ee_self; }

    ProfileWeights weights(EEProfile prof) const {
        if (scaling == ProfileScaling::Raw) return {prof.alpha, 1.0 - prof.alpha};
        return {prof.alpha * eta_pt_max(), (1.0 - prof.alpha) * eta_bd_max()};
    }
};

/// Smallest average backscatter SNR whose BD efficiency reaches ee_bd_target (bits/J).
inline double gamma_threshold(double ee_bd_target, const RFParams& rf) {
    if (!(ee_bd_target >= 0.0)) throw DomainError("gamma_threshold: target must be non-negative");
    if (ee_bd_target == 0.0) return 0.0;
    auto excess = [&](double g) { return ee_bd_from_gain(g, rf) - ee_bd_target; };
    double hi = 1.0;
    for (int i = 0; i < 2000 && excess(hi) < 0.0; ++i) hi *= 2.0;
    double lo = hi;
    do { lo *= 0.5; } while (lo > 0.0 && excess(lo) >= 0.0);
    if (excess(hi) < 0.0) throw BracketError("gamma_threshold: target unreachable");
    const RootConfig cfg{std::numeric_limits<double>::min(), 1e-13, 400};
    return bisect_root(excess, lo, hi, cfg);
}

/// SCA starting point: the PT-EE corner beamformer. It maximizes EE_PT, so it satisfies the
/// EE_PT floor strictly whenever that floor is below the maximum. When it happens to carry no
/// backscatter gain (h orthogonal to g), a small MRT-on-g component is mixed in so that the
/// linearized objective is not identically zero.
inline CVec initial_point(const RegionContext& ctx) {
    CVec w0 = ctx.pt_corner.w();
    const double scale = ctx.ch.g_hat.norm2() * ctx.rf.pmax_w;
    if (backscatter_gain(w0, ctx.ch) <= 1e-14 * scale) {
        constexpr double mix = 1e-6;
        const double p = std::max(w0.norm2(), zero_circuit_power_fraction * ctx.rf.pmax_w);
        w0 = w0 * cplx{std::sqrt(1.0 - mix), 0.0} +
             normalized(ctx.ch.g_hat) * cplx{std::sqrt(mix * p), 0.0};
    }
    return w0;
}

struct FeasibilityResult {
    bool feasible = false;
    std::optional<CVec> witness;
    double gain = 0.0;           // best |g^H w|^2 found
    double gain_required = 0.0;  // threshold for the BD target
    int sca_iters = 0;
};

/// Decides whether eta * weights is achievable: maximize the backscatter gain subject to the
/// EE_PT floor and compare with the SNR threshold implied by the EE_BD floor.
inline FeasibilityResult is_feasible(double eta, ProfileWeights wts, const RegionContext& ctx,
                                     const ParetoConfig& cfg = {}) {
    if (!(eta >= 0.0)) throw DomainError("is_feasible: eta must be non-negative");
    FeasibilityResult out;
    const double pt_target = wts.pt * eta;
    out.gain_required = gamma_threshold(wts.bd * eta, ctx.rf);

    if (eta > 0.0 && !(pt_target < ctx.eta_pt_max())) return out;

    const CVec w0 = initial_point(ctx);
    const double g0 = backscatter_gain(w0, ctx.ch);
    if (g0 >= out.gain_required) {
        out.feasible = true;
        out.gain = g0;
        out.witness = w0;
        return out;
    }

    ScaOptions opt = cfg.sca;
    opt.stop_gain = out.gain_required;
    ScaResult run;
    try {
        run = sca_run(pt_target, w0, ctx.ch, ctx.rf, opt);
    } catch (const InfeasibleStartError&) {
        return out;  // floor numerically at the PT maximum
    }
    out.sca_iters = run.iterations;
    out.gain = run.gain_star;
    if (run.gain_star >= out.gain_required) {
        out.feasible = true;
        out.witness = run.w_star;
    }
    return out;
}

struct ParetoPoint {
    double alpha = 0.0;
    double eta_star = 0.0;  // in profile units (dimensionless when corner-normalized)
    EEPair ray_point;       // eta_star * weights, bits/J
    EEPair achieved;        // evaluated at w_star
    CVec w_star;
    int bisection_iters = 0;
    int sca_total_iters = 0;
};

/// Largest eta for which eta * weights(alpha) is achievable, by bisection on [0, eta_ub] with
/// eta_ub = min(EE_PT^max / w_pt, EE_BD^max / w_bd). Returns the last feasible eta and its witness.
inline ParetoPoint pareto_point(EEProfile prof, const RegionContext& ctx, const ParetoConfig& cfg = {}) {
    prof = EEProfile::make(prof.alpha);
    const ProfileWeights wts = ctx.weights(prof);
    const double eta_ub = std::min(ctx.eta_pt_max() / wts.pt, ctx.eta_bd_max() / wts.bd);

    ParetoPoint pt;
    pt.alpha = prof.alpha;
    double lo = 0.0;
    double hi = eta_ub;
    CVec witness = initial_point(ctx);

    while (hi - lo > cfg.bisection_rel_tol * hi) {
        if (pt.bisection_iters >= cfg.max_bisection_iters)
            throw ConvergenceError("pareto_point: bisection limit reached", lo);
        const double mid = 0.5 * (lo + hi);
        const auto fr = is_feasible(mid, wts, ctx, cfg);
        pt.sca_total_iters += fr.sca_iters;
        ++pt.bisection_iters;
        if (fr.feasible) {
            lo = mid;
            witness = *fr.witness;
        } else {
            hi = mid;
        }
    }

    pt.eta_star = lo;
    pt.ray_point = {wts.pt * lo, wts.bd * lo};
    pt.w_star = std::move(witness);
    pt.achieved = ee_pair(pt.w_star, ctx.ch, ctx.rf);
    return pt;
}

struct SweepEntry {
    double alpha = 0.0;
    std::optional<ParetoPoint> point;
    std::string error;
};

inline std::vector<double> uniform_alpha_grid(int count, double lo = 0.01, double hi = 0.99) {
    if (count < 1) throw ValidationError("alpha grid: count must be >= 1");
    if (count == 1) return {0.5 * (lo + hi)};
    std::vector<double> a(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) a[i] = lo + (hi - lo) * i / (count - 1);
    return a;
}

/// One boundary point per alpha; failures are recorded per entry. Entries are independent and may
/// be computed on several threads; the output order follows the input regardless.
inline std::vector<SweepEntry> boundary_sweep(const std::vector<double>& alphas, const RegionContext& ctx,
                                              const ParetoConfig& cfg = {}, unsigned threads = 1) {
    if (alphas.empty()) throw ValidationError("boundary_sweep: empty alpha list");
    std::vector<SweepEntry> out(alphas.size());
    auto work = [&](std::size_t i) {
        out[i].alpha = alphas[i];
        try {
            out[i].point = pareto_point(EEProfile::make(alphas[i]), ctx, cfg);
        } catch (const std::exception& e) {
            out[i].error = e.what();
        }
    };

    threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(alphas.size())));
    if (threads == 1) {
        for (std::size_t i = 0; i < alphas.size(); ++i) work(i);
        return out;
    }
    std::atomic<std::size_t> next{0};
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t)
        pool.emplace_back([&] {
            for (std::size_t i = next++; i < alphas.size(); i = next++) work(i);
        });
    pool.clear();
    return out;
}

/// Piecewise-linear interpolation of a computed boundary, used for dominance comparisons.
class BoundaryCurve {
  public:
    explicit BoundaryCurve(std::vector<EEPair> pts) : pts_(std::move(pts)) {
        if (pts_.empty()) throw ValidationError("BoundaryCurve: no points");
        std::sort(pts_.begin(), pts_.end(), [](const EEPair& a, const EEPair& b) { return a.ee_pt < b.ee_pt; });
    }

    double max_ee_pt() const { return pts_.back().ee_pt; }

    // Best EE_BD on the curve at PT efficiency x (including any point further right).
    double ee_bd_at(double x) const {
        if (x > max_ee_pt()) return -std::numeric_limits<double>::infinity();
        double best = -std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i < pts_.size(); ++i) {
            if (pts_[i].ee_pt >= x) best = std::max(best, pts_[i].ee_bd);
            if (i + 1 < pts_.size() && pts_[i].ee_pt <= x && x <= pts_[i + 1].ee_pt) {
                const double span = pts_[i + 1].ee_pt - pts_[i].ee_pt;
                const double s = span > 0.0 ? (x - pts_[i].ee_pt) / span : 1.0;
                best = std::max(best, pts_[i].ee_bd + s * (pts_[i + 1].ee_bd - pts_[i].ee_bd));
            }
        }
        return best;
    }

    // True when some curve point is within the relative band of dominating p in both coordinates.
    bool weakly_dominates(const EEPair& p, double tol) const {
        return ee_bd_at((1.0 - tol) * p.ee_pt) >= (1.0 - tol) * p.ee_bd;
    }

    const std::vector<EEPair>& points() const { return pts_; }

  private:
    std::vector<EEPair> pts_;
};

}  // namespace sree

#endif
