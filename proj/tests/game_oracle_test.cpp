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

#include <legipower/game_oracle.hpp>

#include "support/brute_force.hpp"

#include <gtest/gtest.h>

#include <bit>

using namespace legipower;
using namespace legipower::oracle;

namespace {

std::vector<Player> anonymous(int n, const std::string& label = "p")
{
    std::vector<Player> out;
    for (int i = 1; i <= n; ++i) {
        out.push_back({i, label});
    }
    return out;
}

SimpleGame majority3()
{
    return SimpleGame(anonymous(3), [](Coalition s) { return std::popcount(s) >= 2; });
}

Coalition set_of(std::initializer_list<int> players)
{
    Coalition s = 0;
    for (int p : players) {
        s |= Coalition{1} << (p - 1);
    }
    return s;
}

} // namespace

TEST(Validate, MajorityIsASimpleGame)
{
    EXPECT_FALSE(validate(3, [](Coalition s) { return std::popcount(s) >= 2; }).has_value());
}

TEST(Validate, OddSizeRuleIsNotMonotone)
{
    const auto v = validate(3, [](Coalition s) { return std::popcount(s) % 2 == 1; });
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->kind, Violation::Kind::NotMonotone);
    EXPECT_EQ(v->subset, set_of({1}));
    EXPECT_EQ(v->superset, set_of({1, 2}));
    EXPECT_EQ(describe(*v), "not monotone: {1} wins but its superset {1,2} loses");
}

TEST(Validate, EmptyWinningRejected)
{
    const auto v = validate(3, [](Coalition) { return true; });
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->kind, Violation::Kind::EmptyWins);
    EXPECT_THROW(SimpleGame(anonymous(3), [](Coalition) { return true; }), InvalidGame);
}

TEST(Validate, GrandCoalitionMustWin)
{
    const auto v = validate(2, [](Coalition) { return false; });
    ASSERT_TRUE(v.has_value());
    EXPECT_EQ(v->kind, Violation::Kind::GrandCoalitionLoses);
}

TEST(Validate, CapacityBound)
{
    EXPECT_THROW(validate(26, [](Coalition) { return false; }), CapacityError);
    EXPECT_THROW(from_spec(UsSpec{}), CapacityError);
}

TEST(CriticalVector, Majority)
{
    EXPECT_EQ(critical_vector(majority3(), 1), (CountVector{{2, 2}}));
}

TEST(CriticalVector, Unanimity)
{
    const SimpleGame g(anonymous(4), [](Coalition s) { return s == 0xF; });
    for (int i = 1; i <= 4; ++i) {
        EXPECT_EQ(critical_vector(g, i), (CountVector{{4, 1}}));
    }
}

TEST(CriticalVector, SmallBicameralSenator)
{
    const auto g = from_spec(MulticamSpec{{{"senate", 3, 2}, {"house", 5, 3}}});
    EXPECT_EQ(critical_vector(g, g.first_of("senate")), (CountVector{{5, 20}, {6, 10}, {7, 2}}));
    EXPECT_EQ(critical_vector(g, g.first_of("house")), (CountVector{{5, 18}, {6, 6}}));
}

TEST(MinimalWinning, Majority)
{
    EXPECT_EQ(minimal_winning(majority3()), (std::vector<Coalition>{set_of({1, 2}), set_of({1, 3}), set_of({2, 3})}));
}

TEST(MinimalWinning, Unanimity)
{
    const SimpleGame g(anonymous(3), [](Coalition s) { return s == 0x7; });
    EXPECT_EQ(minimal_winning(g), (std::vector<Coalition>{0x7}));
}

// Senate 4 (q=3, override 4), house 5 (q=3, override 4), president, VP.
TEST(MinimalWinning, MiniUsFamilies)
{
    const UsSpec spec{4, 5, 3, 3, 4, 4, true, true};
    const auto g = from_spec(spec);
    ASSERT_EQ(g.size(), 11);
    const Coalition president = 1, vp = 2, senate = 0x3C, house = 0x7C0;
    int signed_three = 0, signed_two_plus_vp = 0, override_family = 0;
    for (Coalition s : minimal_winning(g)) {
        const int sen = std::popcount(s & senate), rep = std::popcount(s & house);
        if ((s & president) && !(s & vp) && sen == 3 && rep == 3) {
            ++signed_three;
        } else if ((s & president) && (s & vp) && sen == 2 && rep == 3) {
            ++signed_two_plus_vp;
        } else if (!(s & president) && !(s & vp) && sen == 4 && rep == 4) {
            ++override_family;
        } else {
            ADD_FAILURE() << "unexpected minimal winning coalition " << format_coalition(s);
        }
    }
    EXPECT_EQ(signed_three, 4 * 10);
    EXPECT_EQ(signed_two_plus_vp, 6 * 10);
    EXPECT_EQ(override_family, 1 * 5);
}

TEST(MinimalWinning, GeneratesTheWinningSets)
{
    for (const auto& spec : legipower::brute::mini_us_specs()) {
        const auto g = from_spec(spec);
        const auto mwc = minimal_winning(g);
        for (Coalition s = 0; s <= g.grand_coalition(); ++s) {
            const bool contains = std::any_of(mwc.begin(), mwc.end(), [s](Coalition m) { return (s & m) == m; });
            ASSERT_EQ(contains, g.wins(s));
        }
    }
}

TEST(FromSpec, MulticameralGamesValidate)
{
    EXPECT_EQ(from_spec(MulticamSpec{{{"a", 3, 2}, {"b", 5, 3}}}).size(), 8);
    EXPECT_EQ(from_spec(MulticamSpec{{{"a", 3, 2}, {"b", 4, 3}, {"c", 5, 3}}}).size(), 12);
}

TEST(FromSpec, MiniUsSpecsValidate)
{
    for (const auto& spec : legipower::brute::mini_us_specs()) {
        EXPECT_NO_THROW(from_spec(spec));
    }
}

TEST(FromSpec, PlayersOfAClassAreInterchangeable)
{
    for (const auto& spec : legipower::brute::mini_us_specs()) {
        const auto g = from_spec(spec);
        std::map<std::string, CountVector> seen;
        for (const auto& p : g.players()) {
            const auto cv = critical_vector(g, p.index);
            auto [it, inserted] = seen.emplace(p.label, cv);
            if (!inserted) {
                EXPECT_EQ(it->second, cv) << p.label;
            }
        }
    }
}
