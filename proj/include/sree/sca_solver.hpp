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

#ifndef SREE_SCA_SOLVER_HPP
#define SREE_SCA_SOLVER_HPP

#include <Eigen/Dense>

#include <cmath>
#include <limits>
#include <numbers>
#include <optional>
#include <vector>

#include "sree/channel.hpp"
#include "sree/cvec.hpp"
#include "sree/ee_model.hpp"
#include "sree/errors.hpp"

namespace sree {

// Current SCA iterate: beamformer, slack S >= |g^H w|^2, and the history of surrogate optima.
struct SCAState {
    CVec w;
    double S = 0.0;
    std::vector<double> objective_trace;
    double kappa = 1e-3;
};

/// Convex surrogate of the gain-maximization problem around an expansion point (w_i, S_i).
///
/// With G = g g^H and H = h h^H (normalized channels) the surrogate reads
///     max   phi_lb(w)
///     s.t.  pt_target (mu |w|^2 + P_s) + B zeta_ub(S) - B log2(1 + phi_lb(w) + chi_lb(w)) <= 0
///           |w|^2 - Pmax <= 0
///           w^H G w - S <= 0
/// where phi_lb, chi_lb are first-order expansions of w^H G w, w^H H w (global under-estimators)
/// and zeta_ub is the tangent of log2(S + 1) (a global over-estimator).
struct SubproblemCoeffs {
    CVec g_hat;
    CVec h_hat;
    CVec grad_g;  // G w_i
    CVec grad_h;  // H w_i
    double gain_g0 = 0.0;  // w_i^H G w_i
    double gain_h0 = 0.0;  // w_i^H H w_i
    double s0 = 0.0;
    double pt_target = 0.0;  // required EE_PT (alpha * eta), bits/J
    double mu = 0.0;
    double ps = 0.0;
    double bandwidth = 0.0;
    double pmax = 0.0;

    double phi_lb(const CVec& w) const { return 2.0 * inner(grad_g, w).real() - gain_g0; }
    double chi_lb(const CVec& w) const { return 2.0 * inner(grad_h, w).real() - gain_h0; }
    double zeta_ub(double S) const {
        return std::log2(s0 + 1.0) + std::numbers::log2e / (s0 + 1.0) * (S - s0);
    }

    // Constraint values; all must be < 0 in the interior.
    double c_ee(const CVec& w, double S) const {
        const double arg = 1.0 + phi_lb(w) + chi_lb(w);
        if (!(arg > 0.0)) return std::numeric_limits<double>::infinity();
        return pt_target * (mu * w.norm2() + ps) + bandwidth * zeta_ub(S) - bandwidth * std::log2(arg);
    }
    double c_power(const CVec& w) const { return w.norm2() - pmax; }
    double c_slack(const CVec& w, double S) const { return std::norm(inner(g_hat, w)) - S; }
};

struct BarrierOptions {
    double t_init = 1.0;
    double t_max = 1e8;
    double t_factor = 5.0;
    double newton_tol = 1e-10;  // on half the squared Newton decrement
    int max_newton = 200;       // per centering stage
};

struct ScaOptions {
    double kappa = 1e-3;
    int max_iters = 500;
    // Stop as soon as the accurate gain reaches this value (feasibility probes).
    double stop_gain = std::numeric_limits<double>::infinity();
    BarrierOptions barrier{};
};

struct SubproblemSolution {
    CVec w;
    double S = 0.0;
    double objective = 0.0;  // phi_lb at the solution
    int newton_iters = 0;
    double final_decrement = 0.0;  // half squared Newton decrement at the last centering
};

struct ScaTraceRecord {
    int iteration = 0;
    double bound_gain = 0.0;     // surrogate optimum
    double accurate_gain = 0.0;  // |g^H w|^2 at the new iterate
    double bound_ee_bd = 0.0;
    double accurate_ee_bd = 0.0;
};

struct ScaResult {
    CVec w_star;
    double gain_star = 0.0;
    std::vector<ScaTraceRecord> trace;
    int iterations = 0;
    bool stopped_early = false;
};

// Exact value of the EE constraint with slack, i.e. the surrogate constraint at its own expansion point.
inline double exact_ee_constraint(const CVec& w, double S, const ChannelSet& ch, const RFParams& rf,
                                  double pt_target) {
    const double hh = std::norm(inner(ch.h_hat, w));
    const double gg = std::norm(inner(ch.g_hat, w));
    return pt_target * (rf.pa_inefficiency * w.norm2() + rf.pt_circuit_w) +
           rf.bandwidth_hz * std::log2(S + 1.0) - rf.bandwidth_hz * std::log2(hh + gg + 1.0);
}

/// Slack for a fresh start: tight (S = |g^H w|^2) plus half the room left by the EE constraint,
/// capped at |g|^2 Pmax. A slack hugging |g^H w|^2 makes the first barrier Hessian numerically singular.
inline double initial_slack(const CVec& w, const ChannelSet& ch, const RFParams& rf, double pt_target) {
    const double gain = backscatter_gain(w, ch);
    const double hh = std::norm(inner(ch.h_hat, w));
    const double power_use = pt_target * (rf.pa_inefficiency * w.norm2() + rf.pt_circuit_w) / rf.bandwidth_hz;
    // Largest S with exact constraint value 0.
    const double s_max = std::expm1(std::log1p(hh + gain) - power_use * std::numbers::ln2);
    const double room = s_max - gain;
    if (!(room > 0.0)) throw InfeasibleStartError("sca_run: w0 does not strictly satisfy the EE_PT constraint");
    const double S = gain + 0.5 * std::min(room, ch.g_hat.norm2() * rf.pmax_w);
    if (!(exact_ee_constraint(w, S, ch, rf, pt_target) < 0.0) || !(S > gain))
        throw InfeasibleStartError("sca_run: w0 does not strictly satisfy the EE_PT constraint");
    return S;
}

inline SubproblemCoeffs linearize(const SCAState& state, const ChannelSet& ch, const RFParams& rf,
                                  double pt_target) {
    SubproblemCoeffs k;
    k.g_hat = ch.g_hat;
    k.h_hat = ch.h_hat;
    const cplx tg = inner(ch.g_hat, state.w);
    const cplx th = inner(ch.h_hat, state.w);
    k.grad_g = ch.g_hat * tg;
    k.grad_h = ch.h_hat * th;
    k.gain_g0 = std::norm(tg);
    k.gain_h0 = std::norm(th);
    k.s0 = state.S;
    k.pt_target = pt_target;
    k.mu = rf.pa_inefficiency;
    k.ps = rf.pt_circuit_w;
    k.bandwidth = rf.bandwidth_hz;
    k.pmax = rf.pmax_w;
    return k;
}

namespace detail {

// Log-barrier objective over x = [Re w / su; Im w / su; S / ss], su = sqrt(Pmax), ss = |g|^2 Pmax.
class SurrogateBarrier {
  public:
    explicit SurrogateBarrier(const SubproblemCoeffs& k)
        : k_(k), m_(k.g_hat.size()), su_(std::sqrt(k.pmax)), ss_(k.g_hat.norm2() * k.pmax) {
        qg_ = real_part_map(k.grad_g);
        qh_ = real_part_map(k.grad_h);
        r1_ = real_part_map(k.g_hat);
        r2_ = imag_part_map(k.g_hat);
    }

    Eigen::Index dim() const { return static_cast<Eigen::Index>(2 * m_ + 1); }

    Eigen::VectorXd to_x(const CVec& w, double S) const {
        Eigen::VectorXd x(dim());
        for (std::size_t i = 0; i < m_; ++i) {
            x(i) = w[i].real() / su_;
            x(m_ + i) = w[i].imag() / su_;
        }
        x(2 * m_) = S / ss_;
        return x;
    }
    CVec w_of(const Eigen::VectorXd& x) const {
        CVec w(m_);
        for (std::size_t i = 0; i < m_; ++i) w[i] = cplx{x(i), x(m_ + i)} * su_;
        return w;
    }
    double s_of(const Eigen::VectorXd& x) const { return x(2 * m_) * ss_; }

    struct Raw {
        double c_ee, c_power, c_slack, arg, phi, ga, gb, nw;
    };

    std::optional<Raw> raw(const Eigen::VectorXd& x) const {
        const Eigen::VectorXd u = x.head(2 * m_) * su_;
        const double S = s_of(x);
        Raw r{};
        r.phi = 2.0 * qg_.dot(u) - k_.gain_g0;
        const double chi = 2.0 * qh_.dot(u) - k_.gain_h0;
        r.arg = 1.0 + r.phi + chi;
        r.nw = u.squaredNorm();
        r.ga = r1_.dot(u);
        r.gb = r2_.dot(u);
        if (!(r.arg > 0.0)) return std::nullopt;
        r.c_ee = k_.pt_target * (k_.mu * r.nw + k_.ps) + k_.bandwidth * k_.zeta_ub(S) -
                 k_.bandwidth * std::log2(r.arg);
        r.c_power = r.nw - k_.pmax;
        r.c_slack = r.ga * r.ga + r.gb * r.gb - S;
        if (!(r.c_ee < 0.0) || !(r.c_power < 0.0) || !(r.c_slack < 0.0)) return std::nullopt;
        return r;
    }

    // Surrogate objective, scaled to O(1).
    double objective(const Raw& r) const { return -r.phi / ss_; }

    std::optional<double> value(const Eigen::VectorXd& x, double t) const {
        const auto r = raw(x);
        if (!r) return std::nullopt;
        return t * objective(*r) - std::log(-r->c_ee) - std::log(-r->c_power) - std::log(-r->c_slack);
    }

    void derivatives(const Eigen::VectorXd& x, double t, Eigen::VectorXd& grad, Eigen::MatrixXd& hess) const {
        const auto r = raw(x);
        if (!r) throw SolverError("surrogate barrier evaluated outside its domain");
        const Eigen::Index n = dim();
        const auto nu = static_cast<Eigen::Index>(2 * m_);
        const Eigen::VectorXd u = x.head(nu) * su_;
        const double log2e = std::numbers::log2e;

        Eigen::VectorXd d0 = Eigen::VectorXd::Zero(n), d1 = Eigen::VectorXd::Zero(n),
                        d2 = Eigen::VectorXd::Zero(n), d3 = Eigen::VectorXd::Zero(n);
        const Eigen::VectorXd q = 2.0 * (qg_ + qh_);
        d0.head(nu) = -2.0 * qg_ / ss_;
        d1.head(nu) = 2.0 * k_.pt_target * k_.mu * u - k_.bandwidth * log2e / r->arg * q;
        d1(nu) = k_.bandwidth * log2e / (k_.s0 + 1.0);
        d2.head(nu) = 2.0 * u;
        d3.head(nu) = 2.0 * r->ga * r1_ + 2.0 * r->gb * r2_;
        d3(nu) = -1.0;

        const double s1 = -r->c_ee, s2 = -r->c_power, s3 = -r->c_slack;
        grad = t * d0 + d1 / s1 + d2 / s2 + d3 / s3;

        hess = d1 * d1.transpose() / (s1 * s1) + d2 * d2.transpose() / (s2 * s2) + d3 * d3.transpose() / (s3 * s3);
        auto huu = hess.topLeftCorner(nu, nu);
        huu.diagonal().array() += 2.0 * k_.pt_target * k_.mu / s1 + 2.0 / s2;
        huu += (k_.bandwidth * log2e / (r->arg * r->arg) / s1) * (q * q.transpose());
        huu += (2.0 / s3) * (r1_ * r1_.transpose() + r2_ * r2_.transpose());

        // Chain rule into scaled coordinates.
        Eigen::VectorXd dscale(n);
        dscale.head(nu).setConstant(su_);
        dscale(nu) = ss_;
        grad = grad.cwiseProduct(dscale);
        hess = dscale.asDiagonal() * hess * dscale.asDiagonal();
    }

  private:
    // Real-coordinate maps: Re(a^H w) = real_part_map(a) . [Re w; Im w], likewise for Im.
    Eigen::VectorXd real_part_map(const CVec& a) const {
        Eigen::VectorXd r(2 * m_);
        for (std::size_t i = 0; i < m_; ++i) {
            r(i) = a[i].real();
            r(m_ + i) = a[i].imag();
        }
        return r;
    }
    Eigen::VectorXd imag_part_map(const CVec& a) const {
        Eigen::VectorXd r(2 * m_);
        for (std::size_t i = 0; i < m_; ++i) {
            r(i) = -a[i].imag();
            r(m_ + i) = a[i].real();
        }
        return r;
    }

    const SubproblemCoeffs& k_;
    std::size_t m_;
    double su_;
    double ss_;
    Eigen::VectorXd qg_, qh_, r1_, r2_;
};

// Solves hess * step = -grad after symmetric Jacobi equilibration. Cholesky with a growing diagonal
// shift guards against loss of definiteness when one barrier term dominates the others by many
// orders of magnitude.
inline Eigen::VectorXd newton_step(const Eigen::MatrixXd& hess, const Eigen::VectorXd& grad) {
    const Eigen::VectorXd d = hess.diagonal().cwiseAbs().cwiseMax(1e-300).cwiseSqrt().cwiseInverse();
    Eigen::MatrixXd a = d.asDiagonal() * hess * d.asDiagonal();
    const Eigen::VectorXd b = -d.cwiseProduct(grad);
    for (double shift = 0.0; shift < 1e3; shift = shift == 0.0 ? 1e-14 : shift * 10.0) {
        Eigen::MatrixXd as = a;
        as.diagonal().array() += shift;
        Eigen::LLT<Eigen::MatrixXd> llt(as);
        if (llt.info() != Eigen::Success) continue;
        Eigen::VectorXd y = llt.solve(b);
        if (y.allFinite() && b.dot(y) >= 0.0) return d.cwiseProduct(y);
    }
    throw SolverError("solve_subproblem: Newton system is not positive definite");
}

}  // namespace detail

/// Solves the convex surrogate by a log-barrier method with damped Newton centering.
/// The warm point must be strictly feasible; the returned point is strictly feasible too.
inline SubproblemSolution solve_subproblem(const SubproblemCoeffs& k, const SCAState& warm,
                                           const BarrierOptions& opt = {}) {
    if (warm.w.size() != k.g_hat.size()) throw DimensionError("solve_subproblem: warm point length differs from M");
    if (!(k.g_hat.norm2() > 0.0) || !(k.pmax > 0.0))
        throw SolverError("solve_subproblem: degenerate surrogate (g = 0 or Pmax = 0)");

    const detail::SurrogateBarrier barrier(k);
    Eigen::VectorXd x = barrier.to_x(warm.w, warm.S);
    if (!barrier.raw(x)) throw InfeasibleStartError("solve_subproblem: warm point is not strictly feasible");

    const Eigen::Index n = barrier.dim();
    Eigen::VectorXd grad(n), step(n);
    Eigen::MatrixXd hess(n, n);
    int total = 0;
    double last_dec = 0.0;

    for (double t = opt.t_init;; t *= opt.t_factor) {
        const double t_stage = std::min(t, opt.t_max);
        double dec = std::numeric_limits<double>::infinity();
        int it = 0;
        for (; it < opt.max_newton; ++it) {
            barrier.derivatives(x, t_stage, grad, hess);
            step = detail::newton_step(hess, grad);
            const double slope = grad.dot(step);
            dec = -0.5 * slope;
            if (dec <= opt.newton_tol) break;

            double s = 1.0;
            auto trial = barrier.value(x + s * step, t_stage);
            while (!trial && s > 1e-20) {
                s *= 0.5;
                trial = barrier.value(x + s * step, t_stage);
            }
            const double phi0 = *barrier.value(x, t_stage);
            while (trial && *trial > phi0 + 0.25 * s * slope && s > 1e-20) {
                s *= 0.5;
                trial = barrier.value(x + s * step, t_stage);
            }
            if (!trial || s <= 1e-20) break;  // no representable progress left
            x += s * step;
        }
        total += it;
        last_dec = dec;
        if (it == opt.max_newton && dec > 1e-6)
            throw SolverError("solve_subproblem: Newton centering did not converge");
        if (t_stage >= opt.t_max) break;
    }

    SubproblemSolution sol;
    sol.w = barrier.w_of(x);
    sol.S = barrier.s_of(x);
    sol.objective = k.phi_lb(sol.w);
    sol.newton_iters = total;
    sol.final_decrement = last_dec;
    return sol;
}

/// Successive convex approximation for max |g^H w|^2 subject to EE_PT >= pt_target and |w|^2 <= Pmax.
///
/// Each surrogate optimum is a lower bound on the true gain at the new iterate, and the previous
/// iterate stays feasible for the next surrogate, so the accurate gain never decreases.
/// Terminates when the relative increase of the surrogate optimum drops below kappa.
inline ScaResult sca_run(double pt_target, const CVec& w0, const ChannelSet& ch, const RFParams& rf,
                         const ScaOptions& opt = {}) {
    if (w0.size() != ch.antennas()) throw DimensionError("sca_run: w0 length differs from M");
    ScaResult res;
    const double scale = ch.g_hat.norm2() * rf.pmax_w;
    if (!(scale > 0.0)) {
        res.w_star = w0;
        return res;
    }

    SCAState st{w0, 0.0, {}, opt.kappa};
    if (st.w.norm2() >= rf.pmax_w * (1.0 - 1e-10)) st.w *= cplx{1.0 - 1e-8, 0.0};
    if (!(st.w.norm2() < rf.pmax_w)) throw InfeasibleStartError("sca_run: w0 violates the power budget");
    double gain = backscatter_gain(st.w, ch);
    st.S = initial_slack(st.w, ch, rf, pt_target);

    const double ee0 = ee_bd_from_gain(gain, rf);
    res.trace.push_back({0, gain, gain, ee0, ee0});
    double prev = gain;
    for (int i = 0; i < opt.max_iters; ++i) {
        const auto k = linearize(st, ch, rf, pt_target);
        auto sol = solve_subproblem(k, st, opt.barrier);
        if (!(sol.objective >= gain)) {
            // Surrogate solve landed below its own warm start; keep the previous iterate.
            sol.w = st.w;
            sol.S = st.S;
            sol.objective = gain;
        }
        st.w = sol.w;
        st.S = sol.S;
        st.objective_trace.push_back(sol.objective);
        gain = backscatter_gain(st.w, ch);
        res.trace.push_back({i + 1, sol.objective, gain, ee_bd_from_gain(sol.objective, rf), ee_bd_from_gain(gain, rf)});
        res.iterations = i + 1;

        if (gain >= opt.stop_gain) {
            res.stopped_early = true;
            break;
        }
        const bool done = prev > 0.0 ? (sol.objective - prev) / prev < opt.kappa : sol.objective <= 0.0;
        prev = sol.objective;
        if (done) break;
        if (i + 1 == opt.max_iters) throw ConvergenceError("sca_run: iteration limit reached", gain);
    }
    res.w_star = st.w;
    res.gain_star = gain;
    return res;
}

}  // namespace sree

#endif
