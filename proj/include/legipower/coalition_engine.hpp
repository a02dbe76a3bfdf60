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

#ifndef LEGIPOWER_COALITION_ENGINE_HPP
#define LEGIPOWER_COALITION_ENGINE_HPP

#include <legipower/exact_comb.hpp>

#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace legipower {

/// Number of coalitions of each size, held densely over [min_size, max_size].
/// Leading and trailing zeros are always trimmed, so equality is structural.
class CountVector
{
public:
    CountVector() = default;

    CountVector(std::int64_t first_size, std::vector<Natural> counts)
        : first_(first_size), counts_(std::move(counts))
    {
        trim();
    }

    CountVector(std::initializer_list<std::pair<std::int64_t, Natural>> entries)
    {
        for (const auto& [k, c] : entries) {
            add(k, c);
        }
    }

    static CountVector from_map(const std::map<std::int64_t, Natural>& entries)
    {
        CountVector v;
        for (const auto& [k, c] : entries) {
            v.add(k, c);
        }
        return v;
    }

    bool empty() const { return counts_.empty(); }

    /// Smallest size with a nonzero count. Undefined on an empty vector.
    std::int64_t min_size() const { return first_; }
    std::int64_t max_size() const { return first_ + static_cast<std::int64_t>(counts_.size()) - 1; }

    Natural at(std::int64_t k) const
    {
        if (k < first_ || k > max_size()) {
            return 0;
        }
        return counts_[static_cast<std::size_t>(k - first_)];
    }

    std::vector<std::pair<std::int64_t, Natural>> nonzero() const
    {
        std::vector<std::pair<std::int64_t, Natural>> out;
        for (std::size_t i = 0; i < counts_.size(); ++i) {
            if (counts_[i] != 0) {
                out.emplace_back(first_ + static_cast<std::int64_t>(i), counts_[i]);
            }
        }
        return out;
    }

    bool support_is_interval() const
    {
        for (const auto& c : counts_) {
            if (c == 0) {
                return false;
            }
        }
        return true;
    }

    Natural total() const
    {
        Natural sum = 0;
        for (const auto& c : counts_) {
            sum += c;
        }
        return sum;
    }

    void add(std::int64_t k, const Natural& count)
    {
        if (count == 0) {
            return;
        }
        if (counts_.empty()) {
            first_ = k;
            counts_.push_back(count);
            return;
        }
        if (k < first_) {
            counts_.insert(counts_.begin(), static_cast<std::size_t>(first_ - k), Natural(0));
            first_ = k;
        } else if (k > max_size()) {
            counts_.resize(static_cast<std::size_t>(k - first_) + 1);
        }
        counts_[static_cast<std::size_t>(k - first_)] += count;
    }

    CountVector& operator+=(const CountVector& other)
    {
        for (std::size_t i = 0; i < other.counts_.size(); ++i) {
            add(other.first_ + static_cast<std::int64_t>(i), other.counts_[i]);
        }
        return *this;
    }

    friend bool operator==(const CountVector&, const CountVector&) = default;

private:
    void trim()
    {
        std::size_t lead = 0;
        while (lead < counts_.size() && counts_[lead] == 0) {
            ++lead;
        }
        if (lead == counts_.size()) {
            counts_.clear();
            first_ = 0;
            return;
        }
        std::size_t end = counts_.size();
        while (counts_[end - 1] == 0) {
            --end;
        }
        counts_.erase(counts_.begin() + static_cast<std::ptrdiff_t>(end), counts_.end());
        counts_.erase(counts_.begin(), counts_.begin() + static_cast<std::ptrdiff_t>(lead));
        first_ += static_cast<std::int64_t>(lead);
    }

    std::int64_t first_ = 0;
    std::vector<Natural> counts_;
};

/// Pick between min_pick and max_pick members of a pool of pool_size.
struct PoolConstraint
{
    std::int64_t pool_size = 0;
    std::int64_t min_pick = 0;
    std::int64_t max_pick = 0;

    friend bool operator==(const PoolConstraint&, const PoolConstraint&) = default;
};

/// A family of coalitions: fixed_count members always present plus
/// constrained picks from pairwise-disjoint anonymous pools.
struct CoalitionTemplate
{
    std::int64_t fixed_count = 0;
    std::vector<PoolConstraint> pools;

    void validate() const
    {
        if (fixed_count < 0) {
            throw std::invalid_argument("coalition template: negative fixed_count");
        }
        for (const auto& p : pools) {
            if (!(0 <= p.min_pick && p.min_pick <= p.max_pick && p.max_pick <= p.pool_size)) {
                throw std::invalid_argument("coalition template: pool needs 0 <= min_pick <= max_pick <= pool_size, got {"
                                            + std::to_string(p.pool_size) + ", " + std::to_string(p.min_pick) + ", "
                                            + std::to_string(p.max_pick) + "}");
            }
        }
    }
};

namespace detail {

inline std::vector<Natural> convolve(const std::vector<Natural>& a, const std::vector<Natural>& b)
{
    std::vector<Natural> out(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < b.size(); ++j) {
            out[i + j] += a[i] * b[j];
        }
    }
    return out;
}

} // namespace detail

/// Per-size counts of the family described by t: the product of the per-pool
/// generating polynomials sum_a C(pool_size, a) x^a, shifted by fixed_count.
inline CountVector template_counts(const CoalitionTemplate& t)
{
    t.validate();
    std::int64_t offset = t.fixed_count;
    std::vector<Natural> poly{1};
    for (const auto& pool : t.pools) {
        const auto row = binomial_row(pool.pool_size);
        std::vector<Natural> factor(row.begin() + pool.min_pick, row.begin() + pool.max_pick + 1);
        poly = detail::convolve(poly, factor);
        offset += pool.min_pick;
    }
    return CountVector(offset, std::move(poly));
}

/// Counts of coalitions drawn from the given houses that meet every quota.
inline CountVector u_vector(std::span<const HouseShape> chambers)
{
    CoalitionTemplate t;
    for (const auto& h : chambers) {
        if (!(0 < h.quota && h.quota <= h.size)) {
            throw std::invalid_argument("u_count: need 0 < quota <= size for every chamber");
        }
        t.pools.push_back({h.size, h.quota, h.size});
    }
    return template_counts(t);
}

inline Natural u_count(std::span<const HouseShape> chambers, std::int64_t k)
{
    return u_vector(chambers).at(k);
}

/// Pointwise sum. The caller guarantees the summed families are disjoint.
inline CountVector sum_counts(std::span<const CountVector> vs)
{
    CountVector out;
    for (const auto& v : vs) {
        out += v;
    }
    return out;
}

} // namespace legipower

#endif // LEGIPOWER_COALITION_ENGINE_HPP
