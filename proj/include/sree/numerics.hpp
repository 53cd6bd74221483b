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

#ifndef SREE_NUMERICS_HPP
#define SREE_NUMERICS_HPP

#include <cmath>
#include <concepts>
#include <limits>
#include <numbers>
#include <string>
#include <utility>

#include "sree/errors.hpp"

namespace sree {

struct RootConfig {
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    int max_iters = 200;

    void validate() const {
        if (!(abs_tol > 0.0) || !(rel_tol > 0.0) || max_iters < 1)
            throw ValidationError("RootConfig: abs_tol, rel_tol must be positive and max_iters >= 1");
    }
};

/// e^z * E1(z) for real z > 0, evaluated as a single quantity.
///
/// For z <= 1 the convergent power series of E1 is used; e^z is harmless there.
/// For z > 1 the continued fraction
///     e^z E1(z) = 1/(z+1- 1/(z+3- 4/(z+5- ...)))
/// is evaluated with the modified Lentz algorithm, so neither factor is ever formed.
/// Relative accuracy is close to machine precision on [1e-12, 1e12].
inline double exp_e1_scaled(double z) {
    if (!std::isfinite(z) || !(z > 0.0))
        throw DomainError("exp_e1_scaled: argument must be finite and positive, got " + std::to_string(z));

    constexpr double eps = std::numeric_limits<double>::epsilon();
    if (z <= 1.0) {
        // E1(z) = -gamma - ln z - sum_{k>=1} (-z)^k / (k k!)
        double sum = 0.0;
        double term = 1.0;  // (-z)^k / k!
        for (int k = 1; k < 200; ++k) {
            term *= -z / k;
            const double contrib = term / k;
            sum += contrib;
            if (std::abs(contrib) < eps * 1e-2 * std::abs(sum)) break;
        }
        const double e1 = -std::numbers::egamma - std::log(z) - sum;
        return std::exp(z) * e1;
    }

    constexpr double tiny = 1e-300;
    double b = z + 1.0;
    double c = 1.0 / tiny;
    double d = 1.0 / b;
    double h = d;
    for (int i = 1; i < 100000; ++i) {
        const double an = -static_cast<double>(i) * i;
        b += 2.0;
        d = an * d + b;
        if (std::abs(d) < tiny) d = tiny;
        c = b + an / c;
        if (std::abs(c) < tiny) c = tiny;
        d = 1.0 / d;
        const double del = c * d;
        h *= del;
        if (std::abs(del - 1.0) <= eps) return h;
    }
    throw ConvergenceError("exp_e1_scaled: continued fraction did not converge", h);
}

/// Ergodic backscatter spectral efficiency E_x[log2(1 + gamma x)], x ~ Exp(1), in bits/s/Hz.
/// Equals log2(e) e^{1/gamma} E1(1/gamma); zero at gamma = 0 by continuity.
inline double avg_backscatter_spectral(double gamma) {
    if (std::isnan(gamma) || gamma < 0.0)
        throw DomainError("avg_backscatter_spectral: SNR must be non-negative");
    if (gamma == 0.0) return 0.0;
    const double z = 1.0 / gamma;
    if (!std::isfinite(gamma) || z == 0.0)
        throw DomainError("avg_backscatter_spectral: SNR must be finite");
    if (!std::isfinite(z)) return std::numbers::log2e * gamma;  // subnormal gamma
    return std::numbers::log2e * exp_e1_scaled(z);
}

/// Bisection on a bracketing interval. The endpoints may be given in either order.
/// Stops once the bracket is narrower than max(abs_tol, rel_tol*|x|).
template <std::invocable<double> F>
double bisect_root(F&& f, double lo, double hi, const RootConfig& cfg = {}) {
    cfg.validate();
    if (!std::isfinite(lo) || !std::isfinite(hi))
        throw BracketError("bisect_root: non-finite bracket");
    if (lo > hi) std::swap(lo, hi);

    double flo = f(lo);
    const double fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (std::isnan(flo) || std::isnan(fhi) || (flo > 0.0) == (fhi > 0.0))
        throw BracketError("bisect_root: no sign change on the bracket");

    double mid = lo + 0.5 * (hi - lo);
    for (int it = 0; it < cfg.max_iters; ++it) {
        mid = lo + 0.5 * (hi - lo);
        if (hi - lo <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(mid))) return mid;
        const double fm = f(mid);
        if (fm == 0.0) return mid;
        if ((fm > 0.0) == (flo > 0.0)) {
            lo = mid;
            flo = fm;
        } else {
            hi = mid;
        }
    }
    throw ConvergenceError("bisect_root: iteration limit reached", mid);
}

}  // namespace sree

#endif
