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

#ifndef LEGIPOWER_SEMIVALUES_HPP
#define LEGIPOWER_SEMIVALUES_HPP

#include <legipower/coalition_engine.hpp>
#include <legipower/exact_comb.hpp>

#include <algorithm>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace legipower {

class InvalidWeights : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

/// Weights (lambda_1, ..., lambda_n) of a semivalue on n players. Every
/// instance satisfies lambda_k >= 0 and sum_k lambda_k C(n-1, k-1) = 1
/// exactly; the constructor rejects anything else.
class WeightingVector
{
public:
    explicit WeightingVector(std::vector<Ratio> weights) : weights_(std::move(weights))
    {
        if (weights_.empty()) {
            throw InvalidWeights("weighting vector needs at least one player");
        }
        const auto n = player_count();
        const auto row = binomial_row(n - 1);
        Ratio total = 0;
        for (std::int64_t k = 1; k <= n; ++k) {
            const auto& w = weights_[static_cast<std::size_t>(k - 1)];
            if (w < 0) {
                throw InvalidWeights("weight " + std::to_string(k) + " is negative");
            }
            total += w * row[static_cast<std::size_t>(k - 1)];
        }
        if (total != 1) {
            throw InvalidWeights("weights do not normalize: sum of lambda_k C(n-1,k-1) is " + total.str());
        }
    }

    std::int64_t player_count() const { return static_cast<std::int64_t>(weights_.size()); }

    /// lambda_k for 1 <= k <= n.
    const Ratio& weight(std::int64_t k) const { return weights_.at(static_cast<std::size_t>(k - 1)); }

    const std::vector<Ratio>& weights() const { return weights_; }

    friend bool operator==(const WeightingVector&, const WeightingVector&) = default;

private:
    std::vector<Ratio> weights_;
};

inline WeightingVector banzhaf(std::int64_t n)
{
    if (n < 1) {
        throw InvalidWeights("banzhaf: n must be positive");
    }
    const Ratio w(Natural(1), Natural(1) << static_cast<unsigned>(n - 1));
    return WeightingVector(std::vector<Ratio>(static_cast<std::size_t>(n), w));
}

inline WeightingVector shapley_shubik(std::int64_t n)
{
    if (n < 1) {
        throw InvalidWeights("shapley_shubik: n must be positive");
    }
    const auto row = binomial_row(n - 1);
    std::vector<Ratio> weights;
    weights.reserve(static_cast<std::size_t>(n));
    for (const auto& c : row) {
        weights.emplace_back(Natural(1), c * n);
    }
    return WeightingVector(std::move(weights));
}

/// All weight on coalitions of size k.
inline WeightingVector point_mass(std::int64_t n, std::int64_t k)
{
    if (n < 1 || k < 1 || k > n) {
        throw InvalidWeights("point_mass: need 1 <= k <= n, got n=" + std::to_string(n) + " k=" + std::to_string(k));
    }
    std::vector<Ratio> weights(static_cast<std::size_t>(n));
    weights[static_cast<std::size_t>(k - 1)] = Ratio(Natural(1), binomial(n - 1, k - 1));
    return WeightingVector(std::move(weights));
}

/// Parses "p/q", "p" or "-p/q" into a reduced rational.
inline Ratio parse_ratio(std::string_view text)
{
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
            s.remove_prefix(1);
        }
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
            s.remove_suffix(1);
        }
        return s;
    };
    auto parse_int = [](std::string_view s) {
        std::size_t start = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
        if (s.size() == start
            || !std::all_of(s.begin() + static_cast<std::ptrdiff_t>(start), s.end(),
                            [](char c) { return c >= '0' && c <= '9'; })) {
            throw std::invalid_argument("not an exact rational: '" + std::string(s) + "'");
        }
        return Natural(std::string(s[0] == '+' ? s.substr(1) : s));
    };
    text = trim(text);
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return Ratio(parse_int(text));
    }
    const auto den = parse_int(trim(text.substr(slash + 1)));
    if (den == 0) {
        throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    }
    return Ratio(parse_int(trim(text.substr(0, slash))), den);
}

/// sum_k lambda_k c(k).
inline Ratio evaluate(const WeightingVector& w, const CountVector& cv)
{
    if (cv.empty()) {
        return 0;
    }
    if (cv.min_size() < 1 || cv.max_size() > w.player_count()) {
        throw std::invalid_argument("critical vector support [" + std::to_string(cv.min_size()) + ", "
                                    + std::to_string(cv.max_size()) + "] not inside [1, "
                                    + std::to_string(w.player_count()) + "]");
    }
    Ratio total = 0;
    for (const auto& [k, c] : cv.nonzero()) {
        const auto& lambda = w.weight(k);
        if (lambda != 0) {
            total += lambda * c;
        }
    }
    return total;
}

enum class RelationKind { StrictlyAbove, WeaklyAbove, Equal, WeaklyBelow, StrictlyBelow, Incomparable };

inline const char* to_string(RelationKind r)
{
    switch (r) {
    case RelationKind::StrictlyAbove: return "strictly-above";
    case RelationKind::WeaklyAbove: return "weakly-above";
    case RelationKind::Equal: return "equal";
    case RelationKind::WeaklyBelow: return "weakly-below";
    case RelationKind::StrictlyBelow: return "strictly-below";
    case RelationKind::Incomparable: return "incomparable";
    }
    return "?";
}

inline RelationKind converse(RelationKind r)
{
    switch (r) {
    case RelationKind::StrictlyAbove: return RelationKind::StrictlyBelow;
    case RelationKind::WeaklyAbove: return RelationKind::WeaklyBelow;
    case RelationKind::WeaklyBelow: return RelationKind::WeaklyAbove;
    case RelationKind::StrictlyBelow: return RelationKind::StrictlyAbove;
    default: return r;
    }
}

/// Sizes witnessing incomparability: c_i(above) > c_j(above) and
/// c_i(below) < c_j(below).
struct Witness
{
    std::int64_t above = 0;
    std::int64_t below = 0;

    friend bool operator==(const Witness&, const Witness&) = default;
};

struct Relation
{
    RelationKind kind = RelationKind::Equal;
    std::optional<Witness> witness; // present iff kind == Incomparable

    friend bool operator==(const Relation&, const Relation&) = default;
};

/// Weak desirability of i (critical vector ci) against j (critical vector cj).
/// StrictlyAbove: ci(k) > cj(k) wherever the two are not both zero.
/// WeaklyAbove: ci(k) >= cj(k) everywhere, with a tie at some not-both-zero k.
/// The witness uses the smallest sizes in each direction.
inline Relation weak_desirability(const CountVector& ci, const CountVector& cj)
{
    if (ci == cj) {
        return {RelationKind::Equal, std::nullopt};
    }
    std::optional<std::int64_t> first_above, first_below;
    bool tie = false;
    const auto lo = std::min(ci.empty() ? cj.min_size() : ci.min_size(), cj.empty() ? ci.min_size() : cj.min_size());
    const auto hi = std::max(ci.empty() ? cj.max_size() : ci.max_size(), cj.empty() ? ci.max_size() : cj.max_size());
    for (auto k = lo; k <= hi; ++k) {
        const auto a = ci.at(k);
        const auto b = cj.at(k);
        if (a > b) {
            if (!first_above) {
                first_above = k;
            }
        } else if (a < b) {
            if (!first_below) {
                first_below = k;
            }
        } else if (a != 0) {
            tie = true;
        }
    }
    if (first_above && first_below) {
        return {RelationKind::Incomparable, Witness{*first_above, *first_below}};
    }
    if (first_above) {
        return {tie ? RelationKind::WeaklyAbove : RelationKind::StrictlyAbove, std::nullopt};
    }
    return {tie ? RelationKind::WeaklyBelow : RelationKind::StrictlyBelow, std::nullopt};
}

/// Two point-mass indices ranking i strictly above j and strictly below j,
/// when the critical vectors are incomparable.
inline std::optional<std::pair<WeightingVector, WeightingVector>>
distinguishing_indices(const CountVector& ci, const CountVector& cj, std::int64_t n)
{
    const auto rel = weak_desirability(ci, cj);
    if (rel.kind != RelationKind::Incomparable) {
        return std::nullopt;
    }
    auto favour_i = point_mass(n, rel.witness->above);
    auto favour_j = point_mass(n, rel.witness->below);
    if (!(evaluate(favour_i, ci) > evaluate(favour_i, cj)) || !(evaluate(favour_j, ci) < evaluate(favour_j, cj))) {
        throw std::logic_error("distinguishing_indices: point masses fail to separate the players");
    }
    return std::make_pair(std::move(favour_i), std::move(favour_j));
}

template <typename Key>
struct RankEntry
{
    Key key;
    Ratio value;
    bool tied_with_previous = false;
};

/// Orders the players by index value, highest first. Ties keep input order
/// and are flagged.
template <typename Key>
std::vector<RankEntry<Key>> rank_by_index(const std::vector<std::pair<Key, CountVector>>& players,
                                          const WeightingVector& w)
{
    std::vector<RankEntry<Key>> out;
    out.reserve(players.size());
    for (const auto& [key, cv] : players) {
        out.push_back({key, evaluate(w, cv), false});
    }
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.value > b.value; });
    for (std::size_t i = 1; i < out.size(); ++i) {
        out[i].tied_with_previous = out[i].value == out[i - 1].value;
    }
    return out;
}

} // namespace legipower

#endif // LEGIPOWER_SEMIVALUES_HPP
