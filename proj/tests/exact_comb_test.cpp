/*
 * Copyright 2026 The legipower Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include <legipower/exact_comb.hpp>

#include "support/brute_force.hpp"

#include <gtest/gtest.h>

using namespace legipower;

TEST(Binomial, SmallCases)
{
    EXPECT_EQ(binomial(4, 2), 6);
    EXPECT_EQ(binomial(5, 0), 1);
    EXPECT_EQ(binomial(5, 5), 1);
    EXPECT_EQ(binomial(0, 0), 1);
}

TEST(Binomial, OutOfRangeIsZero)
{
    EXPECT_EQ(binomial(5, 6), 0);
    EXPECT_EQ(binomial(5, -1), 0);
    EXPECT_EQ(binomial(0, 1), 0);
    EXPECT_THROW(binomial(-1, 0), DomainError);
}

TEST(Binomial, HundredChooseFiftyMatchesPascalOracle)
{
    const auto pascal = brute::pascal_triangle(100);
    ASSERT_EQ(pascal[100][50], Natural("100891344545564193334812497256"));
    EXPECT_EQ(binomial(100, 50), Natural("100891344545564193334812497256"));
}

TEST(Binomial, AgreesWithPascalTriangle)
{
    const auto pascal = brute::pascal_triangle(120);
    for (int n = 0; n <= 120; ++n) {
        const auto row = binomial_row(n);
        for (int k = 0; k <= n; ++k) {
            ASSERT_EQ(binomial(n, k), pascal[n][k]) << n << " choose " << k;
            ASSERT_EQ(row[k], pascal[n][k]);
        }
    }
}

TEST(Binomial, PascalIdentityAndRatioRecurrence)
{
    for (int n = 1; n <= 60; ++n) {
        for (int k = 0; k < n; ++k) {
            EXPECT_EQ(binomial(n + 1, k + 1), binomial(n, k) + binomial(n, k + 1));
            EXPECT_EQ(binomial(n, k + 1) * (k + 1), binomial(n, k) * (n - k));
        }
    }
}

TEST(FRatio, Examples)
{
    EXPECT_EQ(f_ratio(5, 2, 0), Ratio(5, 2));
    // C(5,3)/C(4,1) = 10/4
    EXPECT_EQ(f_ratio(5, 2, 1), Ratio(5, 2));
    // C(6,4)/C(5,2) = 15/10
    EXPECT_EQ(f_ratio(6, 3, 1), Ratio(3, 2));
}

TEST(FRatio, AtZeroIsSizeOverQuota)
{
    for (int p = 2; p <= 30; ++p) {
        for (int u = 1; u < p; ++u) {
            EXPECT_EQ(f_ratio(p, u, 0), Ratio(p, u));
        }
    }
}

TEST(GRatio, Examples)
{
    EXPECT_EQ(g_ratio(5, 2, 0), Ratio(1));
    EXPECT_EQ(g_ratio(5, 2, 1), Ratio(1, 2));
    EXPECT_EQ(g_ratio(10, 4, 2), Ratio(4, 7));
}

TEST(FRatio, DomainErrors)
{
    EXPECT_THROW(f_ratio(5, 0, 0), DomainError);
    EXPECT_THROW(f_ratio(5, 5, 0), DomainError);
    EXPECT_THROW(f_ratio(5, 2, 3), DomainError);
    EXPECT_THROW(g_ratio(5, 2, -1), DomainError);
    EXPECT_THROW(g_ratio(3, 4, 0), DomainError);
}

TEST(FRatio, StepIdentityWithG)
{
    for (int p = 2; p <= 40; ++p) {
        for (int u = 1; u < p; ++u) {
            for (int i = 0; i < p - u - 1; ++i) {
                ASSERT_EQ(f_ratio(p, u, i + 1), g_ratio(p, u, i) * f_ratio(p, u, i)) << p << ' ' << u << ' ' << i;
            }
        }
    }
}

TEST(Ineq1, Examples)
{
    // C(2,1)C(5,3) = 20 vs C(4,2)C(3,2) = 18
    EXPECT_TRUE(ineq1_holds({3, 2}, {5, 3}, 5));
    // C(2,1)C(4,3) = 8 vs C(3,2)C(3,2) = 9
    EXPECT_FALSE(ineq1_holds({3, 2}, {4, 3}, 5));
    // 30 = 30
    EXPECT_FALSE(ineq1_holds({3, 2}, {6, 4}, 6));
    auto [l, r] = pairwise_sides({3, 2}, {6, 4}, 6);
    EXPECT_EQ(l, 30);
    EXPECT_EQ(r, 30);
}

TEST(Ineq1, RejectsDegenerateQuotas)
{
    EXPECT_THROW(ineq1_holds({3, 1}, {5, 3}, 5), DomainError);
    EXPECT_THROW(ineq1_holds({3, 2}, {5, 5}, 5), DomainError);
}

TEST(Certify, BothConditionsCertifyWholeRange)
{
    const auto v = certify_comparison({3, 2}, {5, 3});
    ASSERT_EQ(v.size(), 3u);
    EXPECT_EQ(v.at(5), (CertVerdict{CertOutcome::CertifiedGreater, CertBasis::MinimalSize}));
    EXPECT_EQ(v.at(6), (CertVerdict{CertOutcome::CertifiedGreater, CertBasis::RatioChain}));
    EXPECT_EQ(v.at(7), (CertVerdict{CertOutcome::CertifiedGreater, CertBasis::RatioChain}));
}

TEST(Certify, EqualityAtMinimumThenGreater)
{
    const auto v = certify_comparison({3, 2}, {6, 4});
    EXPECT_EQ(v.at(6), (CertVerdict{CertOutcome::CertifiedEqual, CertBasis::MinimalSize}));
    EXPECT_EQ(v.at(7), (CertVerdict{CertOutcome::CertifiedGreater, CertBasis::SingleCrossing}));
    EXPECT_EQ(v.at(8), (CertVerdict{CertOutcome::CertifiedGreater, CertBasis::SingleCrossing}));
}

TEST(Certify, ExceptionalCaseNotCertifiedAtMinimum)
{
    // 26 * 100 = 2600 < 2601 = 51 * 51
    const auto v = certify_comparison({51, 26}, {100, 51});
    EXPECT_EQ(v.at(77).outcome, CertOutcome::NotCertified);
    EXPECT_EQ(v.at(77).basis, CertBasis::None);
}

TEST(Certify, MinimalSizeIffRatioCondition)
{
    for (int ms = 3; ms <= 20; ++ms) {
        for (int qs = 2; qs < ms; ++qs) {
            for (int mr = 3; mr <= 20; ++mr) {
                for (int qr = 2; qr < mr; ++qr) {
                    const bool holds = ineq1_holds({ms, qs}, {mr, qr}, qs + qr);
                    ASSERT_EQ(holds, qs * mr > qr * ms);
                    if (qs * mr == qr * ms) {
                        auto [l, r] = pairwise_sides({ms, qs}, {mr, qr}, qs + qr);
                        ASSERT_EQ(l, r);
                    }
                }
            }
        }
    }
}

// Certificates never contradict the direct evaluation, on all proper quotas
// with m_s < m_r <= 20 and also with the houses swapped.
TEST(Certify, SoundOnExhaustiveGrid)
{
    int certified = 0;
    for (int ms = 3; ms <= 20; ++ms) {
        for (int mr = ms + 1; mr <= 20; ++mr) {
            for (int qs = 2; qs < ms; ++qs) {
                for (int qr = 2; qr < mr; ++qr) {
                    for (auto [a, b] : {std::pair<HouseShape, HouseShape>{{ms, qs}, {mr, qr}},
                                        std::pair<HouseShape, HouseShape>{{mr, qr}, {ms, qs}}}) {
                        for (const auto& [k, verdict] : certify_comparison(a, b)) {
                            auto [l, r] = pairwise_sides(a, b, k);
                            if (verdict.outcome == CertOutcome::CertifiedGreater) {
                                ASSERT_GT(l, r) << ms << ' ' << qs << ' ' << mr << ' ' << qr << " k=" << k;
                                ASSERT_TRUE(ineq1_holds(a, b, k));
                                ++certified;
                            } else if (verdict.outcome == CertOutcome::CertifiedEqual) {
                                ASSERT_EQ(l, r);
                                ++certified;
                            }
                        }
                    }
                }
            }
        }
    }
    EXPECT_GT(certified, 10000);
}

// Where both sides are nonzero, k -> ineq1_holds(k) is false...false,true...true.
TEST(Certify, SingleCrossingOnExhaustiveGrid)
{
    for (int ms = 3; ms <= 20; ++ms) {
        for (int mr = ms + 1; mr <= 20; ++mr) {
            for (int qs = 2; qs < ms; ++qs) {
                for (int qr = 2; qr < mr; ++qr) {
                    const HouseShape s{ms, qs}, r{mr, qr};
                    bool seen_true = false;
                    for (int k = qs + qr; k <= std::min(qs + mr, qr + ms); ++k) {
                        const bool h = ineq1_holds(s, r, k);
                        ASSERT_FALSE(seen_true && !h) << ms << ' ' << qs << ' ' << mr << ' ' << qr << " k=" << k;
                        seen_true = seen_true || h;
                    }
                }
            }
        }
    }
}
