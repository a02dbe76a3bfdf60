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

#ifndef LEGIPOWER_LEGISLATURE_HPP
#define LEGIPOWER_LEGISLATURE_HPP

#include <legipower/coalition_engine.hpp>
#include <legipower/exact_comb.hpp>
#include <legipower/specs.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace legipower {

/// Critical numbers of one member of the named chamber:
///   c(k) = C(m_j - 1, q_j - 1) * U_{others}(k - q_j)
/// built as the member, q_j - 1 colleagues, and quota-meeting picks from
/// every other chamber.
inline CountVector member_critical_vector(const MulticamSpec& spec, std::string_view chamber)
{
    spec.validate();
    const auto& own = spec.chamber(chamber);
    CoalitionTemplate t;
    t.fixed_count = 1;
    t.pools.push_back({own.size - 1, own.quota - 1, own.quota - 1});
    for (const auto& other : spec.chambers) {
        if (other.name != own.name) {
            t.pools.push_back({other.size, other.quota, other.size});
        }
    }
    return template_counts(t);
}

enum class Dominance { StrictDominance, WeakDominance, Equal, Crossover };
enum class Side { First, Second, Neither };

inline const char* to_string(Dominance d)
{
    switch (d) {
    case Dominance::StrictDominance: return "strict-dominance";
    case Dominance::WeakDominance: return "weak-dominance";
    case Dominance::Equal: return "equal";
    case Dominance::Crossover: return "crossover";
    }
    return "?";
}

struct SizeSign
{
    std::int64_t size = 0;
    int sign = 0; // sign of c_first(size) - c_second(size)

    friend bool operator==(const SizeSign&, const SizeSign&) = default;
};

/// leader is the dominating side, or under Crossover the side ahead at more
/// sizes (ties broken by who is ahead at the largest size). crossover_sizes
/// lists the sizes where the other side is strictly ahead.
struct ComparisonVerdict
{
    Dominance relation = Dominance::Equal;
    Side leader = Side::Neither;
    std::vector<std::int64_t> crossover_sizes;
    std::vector<SizeSign> per_k;
};

/// Verdict over every size where either vector is nonzero.
inline ComparisonVerdict compare_vectors(const CountVector& first, const CountVector& second)
{
    ComparisonVerdict v;
    if (first.empty() && second.empty()) {
        return v;
    }
    const auto lo = std::min(first.empty() ? second.min_size() : first.min_size(),
                             second.empty() ? first.min_size() : second.min_size());
    const auto hi = std::max(first.empty() ? second.max_size() : first.max_size(),
                             second.empty() ? first.max_size() : second.max_size());
    std::vector<std::int64_t> ahead_first, ahead_second;
    bool tie = false;
    for (auto k = lo; k <= hi; ++k) {
        const auto a = first.at(k);
        const auto b = second.at(k);
        if (a == 0 && b == 0) {
            continue;
        }
        const int sign = a > b ? 1 : (a < b ? -1 : 0);
        v.per_k.push_back({k, sign});
        if (sign > 0) {
            ahead_first.push_back(k);
        } else if (sign < 0) {
            ahead_second.push_back(k);
        } else {
            tie = true;
        }
    }
    if (ahead_first.empty() && ahead_second.empty()) {
        return v;
    }
    if (!ahead_first.empty() && !ahead_second.empty()) {
        v.relation = Dominance::Crossover;
        bool first_leads = ahead_first.size() > ahead_second.size()
                           || (ahead_first.size() == ahead_second.size() && ahead_first.back() > ahead_second.back());
        v.leader = first_leads ? Side::First : Side::Second;
        v.crossover_sizes = first_leads ? ahead_second : ahead_first;
        return v;
    }
    v.relation = tie ? Dominance::WeakDominance : Dominance::StrictDominance;
    v.leader = ahead_first.empty() ? Side::Second : Side::First;
    return v;
}

/// Compares a member of chamber a with a member of chamber b by exact
/// evaluation, then checks the evaluation against certify_comparison on the
/// pair's bicameral sub-game; a disagreement throws std::logic_error.
inline ComparisonVerdict compare_members(const MulticamSpec& spec, std::string_view a, std::string_view b)
{
    spec.validate();
    const auto& ca = spec.chamber(a);
    const auto& cb = spec.chamber(b);
    if (ca.name == cb.name) {
        throw SpecError("compare_members needs two different chambers");
    }
    auto verdict = compare_vectors(member_critical_vector(spec, a), member_critical_vector(spec, b));

    const auto sa = ca.shape();
    const auto sb = cb.shape();
    const auto proper = [](const HouseShape& h) { return 1 < h.quota && h.quota < h.size; };
    if (proper(sa) && proper(sb)) {
        for (const auto& [k, cert] : certify_comparison(sa, sb)) {
            if (cert.outcome == CertOutcome::NotCertified) {
                continue;
            }
            int sign = 0;
            if (spec.chambers.size() == 2) {
                auto it = std::find_if(verdict.per_k.begin(), verdict.per_k.end(),
                                       [k](const SizeSign& s) { return s.size == k; });
                sign = it == verdict.per_k.end() ? 0 : it->sign;
            } else {
                auto [lhs, rhs] = pairwise_sides(sa, sb, k);
                sign = lhs > rhs ? 1 : (lhs < rhs ? -1 : 0);
            }
            const int expected = cert.outcome == CertOutcome::CertifiedGreater ? 1 : 0;
            if (sign != expected) {
                throw std::logic_error("certificate for chambers '" + ca.name + "' and '" + cb.name + "' at size "
                                       + std::to_string(k) + " contradicts exact evaluation");
            }
        }
    }
    return verdict;
}

enum class CaseClass {
    BothOdd,
    BothEven,
    SmallEvenLargeOdd,
    SmallOddLargeEven_Wide,
    SmallOddLargeEven_Max,
    SmallOddLargeEven_MinGap,
    SmallOddLargeEven_Middle,
};

inline const char* to_string(CaseClass c)
{
    switch (c) {
    case CaseClass::BothOdd: return "both-odd";
    case CaseClass::BothEven: return "both-even";
    case CaseClass::SmallEvenLargeOdd: return "small-even-large-odd";
    case CaseClass::SmallOddLargeEven_Wide: return "small-odd-large-even-wide";
    case CaseClass::SmallOddLargeEven_Max: return "small-odd-large-even-max-gap";
    case CaseClass::SmallOddLargeEven_MinGap: return "small-odd-large-even-min-gap";
    case CaseClass::SmallOddLargeEven_Middle: return "small-odd-large-even-middle";
    }
    return "?";
}

/// Parity / gap case of a majority-quota bicameral legislature. For
/// m_s = 1, m_r = 2 both gap conditions hold; the maximal-gap case wins.
inline CaseClass classify_bicameral(std::int64_t smaller, std::int64_t larger)
{
    if (smaller < 1 || smaller >= larger) {
        throw SpecError("classify_bicameral needs 1 <= m_s < m_r");
    }
    const bool s_odd = smaller % 2 == 1;
    const bool r_odd = larger % 2 == 1;
    if (s_odd && r_odd) {
        return CaseClass::BothOdd;
    }
    if (!s_odd && !r_odd) {
        return CaseClass::BothEven;
    }
    if (!s_odd) {
        return CaseClass::SmallEvenLargeOdd;
    }
    if (larger > 2 * smaller) {
        return CaseClass::SmallOddLargeEven_Wide;
    }
    if (larger == 2 * smaller) {
        return CaseClass::SmallOddLargeEven_Max;
    }
    if (larger == smaller + 1) {
        return CaseClass::SmallOddLargeEven_MinGap;
    }
    return CaseClass::SmallOddLargeEven_Middle;
}

/// Sizes k where a member of the larger house has the strictly larger
/// critical number, scanning the larger-house member's support
/// [q_s + q_r, q_r + m_s].
inline std::vector<std::int64_t> crossover_sizes(const HouseShape& smaller, const HouseShape& larger)
{
    for (const auto& h : {smaller, larger}) {
        if (!(1 <= h.quota && h.quota <= h.size)) {
            throw SpecError("crossover_sizes: need 1 <= quota <= size");
        }
    }
    std::vector<std::int64_t> out;
    for (auto k = smaller.quota + larger.quota; k <= larger.quota + smaller.size; ++k) {
        auto [c_small, c_large] = pairwise_sides(smaller, larger, k);
        if (c_large > c_small) {
            out.push_back(k);
        }
    }
    return out;
}

} // namespace legipower

#endif // LEGIPOWER_LEGISLATURE_HPP
