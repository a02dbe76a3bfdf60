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

#ifndef LEGIPOWER_GAME_ORACLE_HPP
#define LEGIPOWER_GAME_ORACLE_HPP

// Brute-force ground truth over labeled players. Every coalition is a bitmask
// (player i is bit i - 1) and every question is answered by sweeping all 2^n
// masks in increasing order, so results are reproducible bit for bit.

#include <legipower/coalition_engine.hpp>
#include <legipower/specs.hpp>

#include <bit>
#include <cstdint>
#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace legipower::oracle {

using Coalition = std::uint32_t;

inline constexpr int kMaxPlayers = 25;

struct Player
{
    int index = 0; // 1-based
    std::string label;
};

using WinPredicate = std::function<bool(Coalition)>;

struct Violation
{
    enum class Kind { EmptyWins, GrandCoalitionLoses, NotMonotone };

    Kind kind = Kind::EmptyWins;
    Coalition subset = 0;   // winning
    Coalition superset = 0; // losing superset (NotMonotone only)
};

/// "{1,2}" with 1-based player indices.
inline std::string format_coalition(Coalition s)
{
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (int i = 0; i < 32; ++i) {
        if (s & (Coalition{1} << i)) {
            out << (first ? "" : ",") << (i + 1);
            first = false;
        }
    }
    out << '}';
    return out.str();
}

inline std::string describe(const Violation& v)
{
    switch (v.kind) {
    case Violation::Kind::EmptyWins: return "empty coalition is winning";
    case Violation::Kind::GrandCoalitionLoses: return "grand coalition is losing";
    case Violation::Kind::NotMonotone:
        return "not monotone: " + format_coalition(v.subset) + " wins but its superset "
               + format_coalition(v.superset) + " loses";
    }
    return "?";
}

class CapacityError : public std::length_error
{
public:
    using std::length_error::length_error;
};

class InvalidGame : public std::invalid_argument
{
public:
    explicit InvalidGame(Violation v) : std::invalid_argument(describe(v)), violation_(v) {}
    const Violation& violation() const { return violation_; }

private:
    Violation violation_;
};

namespace detail {

inline void require_capacity(std::int64_t n)
{
    if (n < 1 || n > kMaxPlayers) {
        throw CapacityError("oracle supports 1.." + std::to_string(kMaxPlayers) + " players, got "
                            + std::to_string(n));
    }
}

inline std::optional<Violation> check_axioms(int n, const std::vector<bool>& wins)
{
    const Coalition full = (Coalition{1} << n) - 1;
    if (wins[0]) {
        return Violation{Violation::Kind::EmptyWins, 0, 0};
    }
    if (!wins[full]) {
        return Violation{Violation::Kind::GrandCoalitionLoses, full, 0};
    }
    for (Coalition s = 0; s <= full; ++s) {
        if (!wins[s]) {
            continue;
        }
        for (int i = 0; i < n; ++i) {
            const Coalition bit = Coalition{1} << i;
            if (!(s & bit) && !wins[s | bit]) {
                return Violation{Violation::Kind::NotMonotone, s, s | bit};
            }
        }
    }
    return std::nullopt;
}

inline std::vector<bool> tabulate(int n, const WinPredicate& win)
{
    const Coalition full = (Coalition{1} << n) - 1;
    std::vector<bool> wins(static_cast<std::size_t>(full) + 1);
    for (Coalition s = 0; s <= full; ++s) {
        wins[s] = win(s);
    }
    return wins;
}

} // namespace detail

/// Checks the three simple-game axioms on all 2^n coalitions; the first
/// violation in mask order is reported.
inline std::optional<Violation> validate(int n, const WinPredicate& win)
{
    detail::require_capacity(n);
    return detail::check_axioms(n, detail::tabulate(n, win));
}

/// A validated monotone simple game with its win table.
class SimpleGame
{
public:
    SimpleGame(std::vector<Player> players, const WinPredicate& win) : players_(std::move(players))
    {
        detail::require_capacity(static_cast<std::int64_t>(players_.size()));
        for (std::size_t i = 0; i < players_.size(); ++i) {
            if (players_[i].index != static_cast<int>(i) + 1) {
                throw std::invalid_argument("player indices must be 1..n in order");
            }
        }
        wins_ = detail::tabulate(size(), win);
        if (auto v = detail::check_axioms(size(), wins_)) {
            throw InvalidGame(*v);
        }
    }

    int size() const { return static_cast<int>(players_.size()); }
    const std::vector<Player>& players() const { return players_; }
    bool wins(Coalition s) const { return wins_[s]; }
    Coalition grand_coalition() const { return (Coalition{1} << size()) - 1; }

    /// First player carrying the label.
    int first_of(std::string_view label) const
    {
        for (const auto& p : players_) {
            if (p.label == label) {
                return p.index;
            }
        }
        throw std::invalid_argument("no player labelled '" + std::string(label) + "'");
    }

private:
    std::vector<Player> players_;
    std::vector<bool> wins_;
};

/// c_i(k): winning coalitions of size k containing i that lose without i.
inline CountVector critical_vector(const SimpleGame& g, int player)
{
    if (player < 1 || player > g.size()) {
        throw std::invalid_argument("player index out of range");
    }
    const Coalition bit = Coalition{1} << (player - 1);
    std::vector<std::uint64_t> counts(static_cast<std::size_t>(g.size()) + 1);
    for (Coalition s = 0; s <= g.grand_coalition(); ++s) {
        if ((s & bit) && g.wins(s) && !g.wins(s & ~bit)) {
            ++counts[static_cast<std::size_t>(std::popcount(s))];
        }
    }
    std::vector<Natural> natural(counts.begin(), counts.end());
    return CountVector(0, std::move(natural));
}

/// Inclusion-minimal winning coalitions in increasing mask order.
inline std::vector<Coalition> minimal_winning(const SimpleGame& g)
{
    std::vector<Coalition> out;
    for (Coalition s = 0; s <= g.grand_coalition(); ++s) {
        if (!g.wins(s)) {
            continue;
        }
        bool minimal = true;
        for (int i = 0; i < g.size() && minimal; ++i) {
            const Coalition bit = Coalition{1} << i;
            if ((s & bit) && g.wins(s & ~bit)) {
                minimal = false;
            }
        }
        if (minimal) {
            out.push_back(s);
        }
    }
    return out;
}

/// Players labelled by chamber name, chambers in spec order.
inline SimpleGame from_spec(const MulticamSpec& spec)
{
    spec.validate();
    detail::require_capacity(spec.total_players());
    std::vector<Player> players;
    std::vector<Coalition> masks;
    for (const auto& c : spec.chambers) {
        Coalition mask = 0;
        for (std::int64_t j = 0; j < c.size; ++j) {
            mask |= Coalition{1} << players.size();
            players.push_back({static_cast<int>(players.size()) + 1, c.name});
        }
        masks.push_back(mask);
    }
    auto win = [spec, masks](Coalition s) {
        for (std::size_t j = 0; j < masks.size(); ++j) {
            if (std::popcount(s & masks[j]) < spec.chambers[j].quota) {
                return false;
            }
        }
        return true;
    };
    return SimpleGame(std::move(players), win);
}

/// Players in the order president, vice president, senators, representatives,
/// labelled with the PlayerClass names.
inline SimpleGame from_spec(const UsSpec& spec)
{
    spec.validate();
    detail::require_capacity(spec.total_players());
    std::vector<Player> players;
    auto add = [&players](PlayerClass c) {
        const Coalition bit = Coalition{1} << players.size();
        players.push_back({static_cast<int>(players.size()) + 1, to_string(c)});
        return bit;
    };
    const Coalition president = spec.has_president ? add(PlayerClass::President) : 0;
    const Coalition vp = spec.has_vp ? add(PlayerClass::VicePresident) : 0;
    Coalition senate = 0, house = 0;
    for (std::int64_t j = 0; j < spec.senate_size; ++j) {
        senate |= add(PlayerClass::Senator);
    }
    for (std::int64_t j = 0; j < spec.house_size; ++j) {
        house |= add(PlayerClass::Representative);
    }
    auto win = [=](Coalition s) {
        return spec.passes((s & president) != 0, (s & vp) != 0, std::popcount(s & senate),
                           std::popcount(s & house));
    };
    return SimpleGame(std::move(players), win);
}

} // namespace legipower::oracle

#endif // LEGIPOWER_GAME_ORACLE_HPP
