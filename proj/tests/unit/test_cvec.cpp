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

#include <gtest/gtest.h>

#include <random>

#include "oracles.hpp"
#include "sree/cvec.hpp"

using namespace sree;

namespace {

CVec random_cvec(std::mt19937_64& rng, std::size_t m, double scale = 1.0) {
    std::normal_distribution<double> n(0.0, scale);
    CVec v(m);
    for (auto& x : v) x = {n(rng), n(rng)};
    return v;
}

}  // namespace

TEST(CVec, InnerConjugatesFirstArgument) {
    const CVec a{{0.0, 1.0}};
    const CVec b{{2.0, 0.0}};
    EXPECT_EQ(inner(a, b), cplx(0.0, -2.0));
    EXPECT_EQ(inner(b, a), cplx(0.0, 2.0));
}

TEST(CVec, NormOfThreeFour) {
    const CVec v{{3.0, 0.0}, {0.0, 4.0}};
    EXPECT_DOUBLE_EQ(v.norm2(), 25.0);
    EXPECT_DOUBLE_EQ(v.norm(), 5.0);
    EXPECT_NEAR(normalized(v).norm(), 1.0, 1e-15);
}

TEST(CVec, BasisAndArithmetic) {
    const CVec e1 = CVec::basis(3, 1);
    EXPECT_EQ(e1[1], cplx(1.0, 0.0));
    EXPECT_EQ(e1[0], cplx(0.0, 0.0));
    const CVec s = e1 * cplx{2.0, 0.0} - e1;
    EXPECT_EQ(s, e1);
    EXPECT_THROW(CVec::basis(2, 5), std::out_of_range);
}

TEST(CVec, LengthMismatchThrows) {
    CVec a(2), b(3);
    EXPECT_THROW(inner(a, b), DimensionError);
    EXPECT_THROW(a += b, DimensionError);
    EXPECT_THROW(normalized(CVec(3)), DomainError);
}

TEST(CVec, AllFinite) {
    CVec v(2);
    EXPECT_TRUE(v.all_finite());
    v[1] = {std::nan(""), 0.0};
    EXPECT_FALSE(v.all_finite());
}

TEST(RegRank1Inverse, MatchesDenseSolve) {
    std::mt19937_64 rng(7);
    for (std::size_t m : {1u, 2u, 4u, 8u}) {
        for (int rep = 0; rep < 10; ++rep) {
            const CVec g = random_cvec(rng, m, 3.0);
            const CVec x = random_cvec(rng, m);
            const double c = std::exp(std::uniform_real_distribution<double>(-5.0, 5.0)(rng));
            oracle::CMat a(m, std::vector<cplx>(m));
            for (std::size_t i = 0; i < m; ++i)
                for (std::size_t j = 0; j < m; ++j) a[i][j] = g[i] * std::conj(g[j]) + (i == j ? c : 0.0);
            const auto ref = oracle::solve(a, oracle::to_std(x));
            const CVec y = reg_rank1_inverse_apply(g, c, x);
            double err = 0.0, nrm = 0.0;
            for (std::size_t i = 0; i < m; ++i) {
                err += std::norm(y[i] - ref[i]);
                nrm += std::norm(ref[i]);
            }
            EXPECT_LE(std::sqrt(err / nrm), 1e-12) << "m=" << m;
        }
    }
}

TEST(RegRank1Inverse, RejectsNonPositiveShift) {
    EXPECT_THROW(reg_rank1_inverse_apply(CVec(2), 0.0, CVec(2)), DomainError);
}
