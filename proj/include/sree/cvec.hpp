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

#ifndef SREE_CVEC_HPP
#define SREE_CVEC_HPP

#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "sree/errors.hpp"

namespace sree {

using cplx = std::complex<double>;

// Dense complex column vector of runtime length M >= 1.
class CVec {
  public:
    CVec() = default;
    explicit CVec(std::size_t m) : v_(m, cplx{0.0, 0.0}) {}
    CVec(std::initializer_list<cplx> init) : v_(init) {}
    explicit CVec(std::vector<cplx> data) : v_(std::move(data)) {}

    static CVec basis(std::size_t m, std::size_t k) {
        CVec e(m);
        e.v_.at(k) = 1.0;
        return e;
    }

    std::size_t size() const noexcept { return v_.size(); }
    bool empty() const noexcept { return v_.empty(); }

    cplx& operator[](std::size_t i) { return v_[i]; }
    const cplx& operator[](std::size_t i) const { return v_[i]; }

    auto begin() noexcept { return v_.begin(); }
    auto end() noexcept { return v_.end(); }
    auto begin() const noexcept { return v_.begin(); }
    auto end() const noexcept { return v_.end(); }

    std::span<const cplx> view() const noexcept { return v_; }

    // Squared Euclidean norm.
    double norm2() const noexcept {
        double s = 0.0;
        for (const auto& x : v_) s += std::norm(x);
        return s;
    }
    double norm() const noexcept { return std::sqrt(norm2()); }

    bool all_finite() const noexcept {
        for (const auto& x : v_)
            if (!std::isfinite(x.real()) || !std::isfinite(x.imag())) return false;
        return true;
    }

    CVec& operator+=(const CVec& o) {
        check_same(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] += o.v_[i];
        return *this;
    }
    CVec& operator-=(const CVec& o) {
        check_same(o);
        for (std::size_t i = 0; i < v_.size(); ++i) v_[i] -= o.v_[i];
        return *this;
    }
    CVec& operator*=(cplx s) noexcept {
        for (auto& x : v_) x *= s;
        return *this;
    }
    CVec& operator/=(cplx s) noexcept {
        for (auto& x : v_) x /= s;
        return *this;
    }

    friend CVec operator+(CVec a, const CVec& b) { return a += b; }
    friend CVec operator-(CVec a, const CVec& b) { return a -= b; }
    friend CVec operator*(CVec a, cplx s) { return a *= s; }
    friend CVec operator*(cplx s, CVec a) { return a *= s; }
    friend CVec operator/(CVec a, cplx s) { return a /= s; }

    friend bool operator==(const CVec&, const CVec&) = default;

  private:
    void check_same(const CVec& o) const {
        if (o.size() != size()) throw DimensionError("CVec: length mismatch");
    }

    std::vector<cplx> v_;
};

/// a^H b (conjugate-linear in a).
inline cplx inner(const CVec& a, const CVec& b) {
    if (a.size() != b.size()) throw DimensionError("inner: length mismatch");
    cplx s{0.0, 0.0};
    for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
    return s;
}

inline CVec normalized(const CVec& x) {
    const double n = x.norm();
    if (!(n > 0.0) || !std::isfinite(n)) throw DomainError("normalized: zero or non-finite vector");
    return x / cplx{n, 0.0};
}

/// Applies (g g^H + c I)^{-1} to x via the Sherman-Morrison form
///     (1/c) (x - g (g^H x) / (c + |g|^2)).
inline CVec reg_rank1_inverse_apply(const CVec& g, double c, const CVec& x) {
    if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("reg_rank1_inverse_apply: c must be positive");
    if (g.size() != x.size()) throw DimensionError("reg_rank1_inverse_apply: length mismatch");
    const cplx coef = inner(g, x) / (c + g.norm2());
    CVec y = x;
    for (std::size_t i = 0; i < y.size(); ++i) y[i] = (y[i] - g[i] * coef) / c;
    return y;
}

}  // namespace sree

#endif
