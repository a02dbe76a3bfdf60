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

#ifndef LEGIPOWER_SPECS_HPP
#define LEGIPOWER_SPECS_HPP

#include <legipower/exact_comb.hpp>

#include <cstdint>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace legipower {

class SpecError : public std::invalid_argument
{
public:
    using std::invalid_argument::invalid_argument;
};

struct ChamberSpec
{
    std::string name;
    std::int64_t size = 0;
    std::int64_t quota = 0;

    HouseShape shape() const { return {size, quota}; }

    friend bool operator==(const ChamberSpec&, const ChamberSpec&) = default;
};

/// Houses that must each reach their quota for a bill to pass.
struct MulticamSpec
{
    std::vector<ChamberSpec> chambers;

    void validate() const
    {
        if (chambers.empty()) {
            throw SpecError("multicameral spec needs at least one chamber");
        }
        std::set<std::string> seen;
        for (const auto& c : chambers) {
            if (c.name.empty()) {
                throw SpecError("chamber name must not be empty");
            }
            if (!seen.insert(c.name).second) {
                throw SpecError("duplicate chamber name '" + c.name + "'");
            }
            if (c.size < 1) {
                throw SpecError("chamber '" + c.name + "': size must be positive");
            }
            if (c.quota < 1 || c.quota > c.size) {
                throw SpecError("chamber '" + c.name + "': quota " + std::to_string(c.quota)
                                + " outside [1, " + std::to_string(c.size) + "]");
            }
        }
    }

    const ChamberSpec& chamber(std::string_view name) const
    {
        for (const auto& c : chambers) {
            if (c.name == name) {
                return c;
            }
        }
        throw SpecError("unknown chamber '" + std::string(name) + "'");
    }

    std::int64_t total_players() const
    {
        std::int64_t n = 0;
        for (const auto& c : chambers) {
            n += c.size;
        }
        return n;
    }

    friend bool operator==(const MulticamSpec&, const MulticamSpec&) = default;
};

/// ceil((m + 1) / 2)
inline std::int64_t majority_quota(std::int64_t m)
{
    if (m < 1) {
        throw SpecError("majority_quota: chamber size must be positive");
    }
    return m / 2 + 1;
}

inline MulticamSpec majority_spec(std::initializer_list<std::int64_t> sizes)
{
    MulticamSpec spec;
    int index = 1;
    for (auto m : sizes) {
        spec.chambers.push_back({"H" + std::to_string(index++), m, majority_quota(m)});
    }
    return spec;
}

enum class PlayerClass { President, VicePresident, Senator, Representative };

inline const char* to_string(PlayerClass c)
{
    switch (c) {
    case PlayerClass::President: return "president";
    case PlayerClass::VicePresident: return "vice_president";
    case PlayerClass::Senator: return "senator";
    case PlayerClass::Representative: return "representative";
    }
    return "?";
}

/// US-style system: a senate and a house, a president whose signature
/// enables the majority track, a vice president who breaks senate ties on
/// that track, and an override track that needs neither.
struct UsSpec
{
    std::int64_t senate_size = 100;
    std::int64_t house_size = 435;
    std::int64_t senate_quota = 51;
    std::int64_t house_quota = 218;
    std::int64_t senate_override = 67;
    std::int64_t house_override = 290;
    bool has_president = true;
    bool has_vp = true;

    void validate() const
    {
        if (senate_size < 1 || house_size < 1) {
            throw SpecError("US spec: chamber sizes must be positive");
        }
        if (senate_quota < 1 || senate_quota > senate_size) {
            throw SpecError("US spec: senate quota " + std::to_string(senate_quota) + " outside [1, "
                            + std::to_string(senate_size) + "]");
        }
        if (house_quota < 1 || house_quota > house_size) {
            throw SpecError("US spec: house quota " + std::to_string(house_quota) + " outside [1, "
                            + std::to_string(house_size) + "]");
        }
        if (senate_override < senate_quota || senate_override > senate_size) {
            throw SpecError("US spec: senate override " + std::to_string(senate_override) + " outside ["
                            + std::to_string(senate_quota) + ", " + std::to_string(senate_size) + "]");
        }
        if (house_override < house_quota || house_override > house_size) {
            throw SpecError("US spec: house override " + std::to_string(house_override) + " outside ["
                            + std::to_string(house_quota) + ", " + std::to_string(house_size) + "]");
        }
    }

    std::int64_t total_players() const
    {
        return senate_size + house_size + (has_president ? 1 : 0) + (has_vp ? 1 : 0);
    }

    /// The vice president's vote counts only at a genuine senate tie.
    bool vp_breaks_ties() const { return has_vp && senate_quota - 1 == senate_size / 2; }

    /// Passage rule on headcounts: president present, vice president present,
    /// senators, representatives.
    bool passes(bool president, bool vp, std::int64_t senators, std::int64_t reps) const
    {
        const bool signed_track = has_president && president && reps >= house_quota
                                  && (senators >= senate_quota
                                      || (vp && vp_breaks_ties() && senators == senate_quota - 1));
        const bool override_track = senators >= senate_override && reps >= house_override;
        return signed_track || override_track;
    }

    bool has_class(PlayerClass c) const
    {
        switch (c) {
        case PlayerClass::President: return has_president;
        case PlayerClass::VicePresident: return has_vp;
        case PlayerClass::Senator:
        case PlayerClass::Representative: return true;
        }
        return false;
    }

    std::vector<PlayerClass> classes() const
    {
        std::vector<PlayerClass> out;
        for (auto c : {PlayerClass::President, PlayerClass::VicePresident, PlayerClass::Senator,
                       PlayerClass::Representative}) {
            if (has_class(c)) {
                out.push_back(c);
            }
        }
        return out;
    }

    friend bool operator==(const UsSpec&, const UsSpec&) = default;
};

} // namespace legipower

#endif // LEGIPOWER_SPECS_HPP
