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

#ifndef LEGIPOWER_US_MODEL_HPP
#define LEGIPOWER_US_MODEL_HPP

// Closed-form critical vectors for the US-style system.
//
// Whether a coalition passes depends only on four headcounts: president in
// or out, vice president in or out, senators s, representatives r. For a
// fixed (president, vp) pair the coalitions in which a player class is
// critical therefore form a set of cells in the (s, r) grid. That set is cut
// into maximal rectangles, and each rectangle is one CoalitionTemplate:
// the fixed members plus a senator pool and a representative pool with pick
// ranges. Distinct rectangles and distinct (president, vp) pairs describe
// disjoint families, so the class vector is the sum of the template counts.
// For the default spec the rectangles are the familiar rows: president with
// 51-66 senators and 218-435 representatives, and so on.

#include <legipower/coalition_engine.hpp>
#include <legipower/semivalues.hpp>
#include <legipower/specs.hpp>

#include <cstdint>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace legipower {

/// One disjoint family of coalitions in which a class member is critical.
struct ClassTemplate
{
    std::string row;
    bool president = false;
    bool vp = false;
    std::int64_t senators_min = 0, senators_max = 0; // headcounts, including the member
    std::int64_t reps_min = 0, reps_max = 0;
    CoalitionTemplate shape;
};

namespace detail {

struct Rect
{
    std::int64_t s_lo, s_hi, r_lo, r_hi;
};

/// Maximal-in-s rectangles covering {(s, r) : cell(s, r)}: each s row is cut
/// into runs of r, and runs with identical bounds on consecutive rows merge.
inline std::vector<Rect> rectangles(std::int64_t s_max, std::int64_t r_max,
                                    const std::function<bool(std::int64_t, std::int64_t)>& cell)
{
    std::vector<Rect> done;
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> open; // (r_lo, r_hi) -> s_lo
    for (std::int64_t s = 0; s <= s_max + 1; ++s) {
        std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> next;
        if (s <= s_max) {
            std::int64_t r = 0;
            while (r <= r_max) {
                if (!cell(s, r)) {
                    ++r;
                    continue;
                }
                const auto lo = r;
                while (r + 1 <= r_max && cell(s, r + 1)) {
                    ++r;
                }
                const std::pair<std::int64_t, std::int64_t> run{lo, r};
                auto it = open.find(run);
                next[run] = it == open.end() ? s : it->second;
                ++r;
            }
        }
        for (const auto& [run, s_lo] : open) {
            if (!next.contains(run)) {
                done.push_back({s_lo, s - 1, run.first, run.second});
            }
        }
        open = std::move(next);
    }
    return done;
}

inline std::string range_text(std::int64_t lo, std::int64_t hi)
{
    return lo == hi ? std::to_string(lo) : std::to_string(lo) + "-" + std::to_string(hi);
}

} // namespace detail

/// The disjoint coalition families in which a member of class c is critical.
inline std::vector<ClassTemplate> class_templates(const UsSpec& spec, PlayerClass c)
{
    spec.validate();
    if (!spec.has_class(c)) {
        throw SpecError(std::string("spec has no ") + to_string(c));
    }
    const auto ms = spec.senate_size;
    const auto mr = spec.house_size;

    std::vector<ClassTemplate> out;
    for (int p = 0; p <= (spec.has_president ? 1 : 0); ++p) {
        for (int v = 0; v <= (spec.has_vp ? 1 : 0); ++v) {
            const bool president = p == 1, vp = v == 1;
            if ((c == PlayerClass::President && !president) || (c == PlayerClass::VicePresident && !vp)) {
                continue;
            }
            std::function<bool(std::int64_t, std::int64_t)> critical;
            switch (c) {
            case PlayerClass::President:
                critical = [&](auto s, auto r) { return spec.passes(true, vp, s, r) && !spec.passes(false, vp, s, r); };
                break;
            case PlayerClass::VicePresident:
                critical = [&](auto s, auto r) {
                    return spec.passes(president, true, s, r) && !spec.passes(president, false, s, r);
                };
                break;
            case PlayerClass::Senator:
                critical = [&](auto s, auto r) {
                    return s >= 1 && spec.passes(president, vp, s, r) && !spec.passes(president, vp, s - 1, r);
                };
                break;
            case PlayerClass::Representative:
                critical = [&](auto s, auto r) {
                    return r >= 1 && spec.passes(president, vp, s, r) && !spec.passes(president, vp, s, r - 1);
                };
                break;
            }
            for (const auto& rect : detail::rectangles(ms, mr, critical)) {
                ClassTemplate t;
                t.president = president;
                t.vp = vp;
                t.senators_min = rect.s_lo;
                t.senators_max = rect.s_hi;
                t.reps_min = rect.r_lo;
                t.reps_max = rect.r_hi;
                t.shape.fixed_count = p + v;
                // The member itself is one of the counted senators/representatives.
                const std::int64_t own_s = c == PlayerClass::Senator ? 1 : 0;
                const std::int64_t own_r = c == PlayerClass::Representative ? 1 : 0;
                t.shape.fixed_count += own_s + own_r;
                t.shape.pools.push_back({ms - own_s, rect.s_lo - own_s, rect.s_hi - own_s});
                t.shape.pools.push_back({mr - own_r, rect.r_lo - own_r, rect.r_hi - own_r});

                std::ostringstream row;
                row << (president ? "P, " : "") << (vp ? "V, " : "") << detail::range_text(rect.s_lo, rect.s_hi)
                    << " senators, " << detail::range_text(rect.r_lo, rect.r_hi) << " representatives";
                t.row = row.str();
                out.push_back(std::move(t));
            }
        }
    }
    return out;
}

inline CountVector class_critical_vector(const UsSpec& spec, PlayerClass c)
{
    CountVector total;
    for (const auto& t : class_templates(spec, c)) {
        total += template_counts(t.shape);
    }
    return total;
}

/// Phi-power of a class member: sum_k lambda_k c(k).
inline Ratio class_power(const UsSpec& spec, PlayerClass c, const WeightingVector& w)
{
    if (w.player_count() != spec.total_players()) {
        throw std::invalid_argument("weighting vector has " + std::to_string(w.player_count())
                                    + " entries, spec has " + std::to_string(spec.total_players()) + " players");
    }
    return evaluate(w, class_critical_vector(spec, c));
}

inline std::vector<std::pair<PlayerClass, CountVector>> all_class_vectors(const UsSpec& spec)
{
    std::vector<std::pair<PlayerClass, CountVector>> out;
    for (auto c : spec.classes()) {
        out.emplace_back(c, class_critical_vector(spec, c));
    }
    return out;
}

inline std::vector<RankEntry<PlayerClass>> ranking(const UsSpec& spec, const WeightingVector& w)
{
    if (w.player_count() != spec.total_players()) {
        throw std::invalid_argument("weighting vector size does not match the spec player count");
    }
    return rank_by_index(all_class_vectors(spec), w);
}

struct VrSign
{
    std::int64_t size = 0;
    int sign = 0; // sign of c_v(size) - c_r(size)

    friend bool operator==(const VrSign&, const VrSign&) = default;
};

/// Sign of c_v(k) - c_r(k) for every k from the smallest to the largest
/// size where either is nonzero.
inline std::vector<VrSign> vr_comparison(const UsSpec& spec)
{
    if (!spec.has_vp) {
        throw SpecError("vr_comparison needs a vice president");
    }
    const auto cv = class_critical_vector(spec, PlayerClass::VicePresident);
    const auto cr = class_critical_vector(spec, PlayerClass::Representative);
    std::vector<VrSign> out;
    if (cv.empty() && cr.empty()) {
        return out;
    }
    const auto lo = std::min(cv.empty() ? cr.min_size() : cv.min_size(), cr.empty() ? cv.min_size() : cr.min_size());
    const auto hi = std::max(cv.empty() ? cr.max_size() : cv.max_size(), cr.empty() ? cv.max_size() : cr.max_size());
    for (auto k = lo; k <= hi; ++k) {
        const auto a = cv.at(k);
        const auto b = cr.at(k);
        out.push_back({k, a > b ? 1 : (a < b ? -1 : 0)});
    }
    return out;
}

/// spec with the senate sign-track quota replaced; the override quota is
/// raised to the new quota when it would otherwise fall below it.
inline UsSpec with_senate_quota(UsSpec spec, std::int64_t quota)
{
    spec.senate_quota = quota;
    spec.senate_override = std::max(spec.senate_override, quota);
    return spec;
}

inline UsSpec with_house_quota(UsSpec spec, std::int64_t quota)
{
    spec.house_quota = quota;
    spec.house_override = std::max(spec.house_override, quota);
    return spec;
}

struct ScanRow
{
    std::int64_t senate_quota = 0;
    Relation senator_vs_representative;
    Relation president_vs_senator;
};

inline std::vector<ScanRow> supermajority_scan(const UsSpec& spec, const std::vector<std::int64_t>& senate_quotas)
{
    if (!spec.has_president) {
        throw SpecError("supermajority_scan compares the president with a senator; spec has no president");
    }
    std::vector<ScanRow> out;
    for (auto q : senate_quotas) {
        if (q < majority_quota(spec.senate_size) || q > spec.senate_size) {
            throw SpecError("senate quota " + std::to_string(q) + " outside [" + std::to_string(majority_quota(spec.senate_size))
                            + ", " + std::to_string(spec.senate_size) + "]");
        }
        const auto s = with_senate_quota(spec, q);
        const auto cp = class_critical_vector(s, PlayerClass::President);
        const auto cs = class_critical_vector(s, PlayerClass::Senator);
        const auto cr = class_critical_vector(s, PlayerClass::Representative);
        out.push_back({q, weak_desirability(cs, cr), weak_desirability(cp, cs)});
    }
    return out;
}

} // namespace legipower

#endif // LEGIPOWER_US_MODEL_HPP
