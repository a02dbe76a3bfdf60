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

#include <legipower/coalition_engine.hpp>

#include "support/brute_force.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <random>

using namespace legipower;
using legipower::brute::as_map;
using legipower::brute::enumerate_template;

TEST(TemplateCounts, SenatorOfSmallBicameral)
{
    const CoalitionTemplate t{1, {{2, 1, 1}, {5, 3, 5}}};
    const auto oracle = enumerate_template(t);
    ASSERT_EQ(oracle, (std::map<std::int64_t, Natural>{{5, 20}, {6, 10}, {7, 2}}));
    EXPECT_EQ(as_map(template_counts(t)), oracle);
    EXPECT_EQ(template_counts(t), (CountVector{{5, 20}, {6, 10}, {7, 2}}));
}

TEST(TemplateCounts, EmptyProduct)
{
    EXPECT_EQ(template_counts({0, {}}), (CountVector{{0, 1}}));
}

TEST(TemplateCounts, ShiftedRow)
{
    EXPECT_EQ(template_counts({2, {{3, 0, 3}}}), (CountVector{{2, 1}, {3, 3}, {4, 3}, {5, 1}}));
}

TEST(TemplateCounts, RejectsMalformedPools)
{
    EXPECT_THROW(template_counts({0, {{3, 2, 1}}}), std::invalid_argument);
    EXPECT_THROW(template_counts({0, {{3, 0, 4}}}), std::invalid_argument);
    EXPECT_THROW(template_counts({-1, {}}), std::invalid_argument);
}

namespace {

CoalitionTemplate random_template(std::mt19937& rng, int max_universe)
{
    std::uniform_int_distribution<int> pools_dist(0, 4);
    CoalitionTemplate t;
    int budget = max_universe;
    t.fixed_count = std::uniform_int_distribution<int>(0, 2)(rng);
    budget -= static_cast<int>(t.fixed_count);
    const int pools = pools_dist(rng);
    for (int j = 0; j < pools && budget > 0; ++j) {
        const int size = std::uniform_int_distribution<int>(0, std::min(budget, 7))(rng);
        budget -= size;
        const int a = std::uniform_int_distribution<int>(0, size)(rng);
        const int b = std::uniform_int_distribution<int>(0, size)(rng);
        t.pools.push_back({size, std::min(a, b), std::max(a, b)});
    }
    return t;
}

} // namespace

TEST(TemplateCounts, MatchesEnumerationOnRandomTemplates)
{
    std::mt19937 rng(20261016);
    for (int trial = 0; trial < 400; ++trial) {
        const auto t = random_template(rng, 18);
        const auto counts = template_counts(t);
        ASSERT_EQ(as_map(counts), enumerate_template(t)) << "trial " << trial;

        Natural mass = 1;
        for (const auto& p : t.pools) {
            Natural s = 0;
            for (auto a = p.min_pick; a <= p.max_pick; ++a) {
                s += binomial(p.pool_size, a);
            }
            mass *= s;
        }
        EXPECT_EQ(counts.total(), mass);
        EXPECT_TRUE(counts.support_is_interval());

        auto shuffled = t;
        std::shuffle(shuffled.pools.begin(), shuffled.pools.end(), rng);
        EXPECT_EQ(template_counts(shuffled), counts);
    }
}

TEST(UCount, Examples)
{
    const std::vector<HouseShape> two{{3, 2}, {4, 3}};
    EXPECT_EQ(u_count(two, 5), 12);
    EXPECT_EQ(u_count(two, 7), 1);
    const std::vector<HouseShape> one{{3, 2}};
    EXPECT_EQ(u_count(one, 1), 0);
}

TEST(UCount, MatchesEnumeration)
{
    const std::vector<HouseShape> houses{{3, 2}, {4, 3}, {5, 3}};
    CoalitionTemplate t;
    for (const auto& h : houses) {
        t.pools.push_back({h.size, h.quota, h.size});
    }
    const auto oracle = enumerate_template(t);
    for (int k = 0; k <= 12; ++k) {
        const Natural expected = oracle.contains(k) ? oracle.at(k) : Natural(0);
        EXPECT_EQ(u_count(houses, k), expected) << k;
    }
}

TEST(SumCounts, Examples)
{
    const std::vector<CountVector> a{{{5, 2}}, {{5, 3}, {6, 1}}};
    EXPECT_EQ(sum_counts(a), (CountVector{{5, 5}, {6, 1}}));
    EXPECT_TRUE(sum_counts(std::vector<CountVector>{}).empty());
    const std::vector<CountVector> c{{{3, 1}}, {{4, 1}}, {{5, 1}}};
    EXPECT_EQ(sum_counts(c), (CountVector{{3, 1}, {4, 1}, {5, 1}}));
}

TEST(CountVectorTest, TrimsAndComparesStructurally)
{
    CountVector v(3, {0, 0, 4, 0, 5, 0});
    EXPECT_EQ(v.min_size(), 5);
    EXPECT_EQ(v.max_size(), 7);
    EXPECT_EQ(v.at(6), 0);
    EXPECT_FALSE(v.support_is_interval());
    EXPECT_EQ(v, (CountVector{{7, 5}, {5, 4}}));
    EXPECT_TRUE(CountVector(0, {0, 0}).empty());
    EXPECT_EQ(CountVector(0, {0, 0}), CountVector{});
}
