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

#ifndef LEGIPOWER_EXACT_COMB_HPP
#define LEGIPOWER_EXACT_COMB_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace legipower {

/// Arbitrary-precision count. Only ever produced by counting, so never negative.
using Natural = boost::multiprecision::cpp_int;

/// Exact rational, always held in lowest terms with a positive denominator.
using Ratio = boost::multiprecision::cpp_rational;

class DomainError : public std::domain_error
{
public:
    using std::domain_error::domain_error;
};

/// C(n, k), with C(n, k) = 0 whenever k < 0 or k > n.
inline Natural binomial(std::int64_t n, std::int64_t k)
{
    if (n < 0) {
        throw DomainError("binomial: n must be non-negative, got " + std::to_string(n));
    }
    if (k < 0 || k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    Natural result = 1;
    // After step i the accumulator is C(n - k + i, i), so each division is exact.
    for (std::int64_t i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

/// The whole row C(n, 0), ..., C(n, n).
inline std::vector<Natural> binomial_row(std::int64_t n)
{
    if (n < 0) {
        throw DomainError("binomial_row: n must be non-negative, got " + std::to_string(n));
    }
    std::vector<Natural> row(static_cast<std::size_t>(n) + 1);
    row[0] = 1;
    for (std::int64_t k = 0; k < n; ++k) {
        row[k + 1] = row[k] * (n - k) / (k + 1);
    }
    return row;
}

/// Size and passage quota of one house, in the position used by the
/// pairwise comparison of two houses.
struct HouseShape
{
    std::int64_t size = 0;
    std::int64_t quota = 0;

    friend bool operator==(const HouseShape&, const HouseShape&) = default;
};

namespace detail {

inline void require_ratio_domain(const char* what, std::int64_t p, std::int64_t u, std::int64_t i)
{
    if (!(0 < u && u < p) || !(0 <= i && i < p - u)) {
        throw DomainError(std::string(what) + ": need 0 < u < p and 0 <= i < p - u, got p="
                          + std::to_string(p) + " u=" + std::to_string(u) + " i=" + std::to_string(i));
    }
}

inline void require_proper_quota(const HouseShape& h)
{
    if (!(1 < h.quota && h.quota < h.size)) {
        throw DomainError("house with size " + std::to_string(h.size) + " and quota "
                          + std::to_string(h.quota) + " violates 1 < quota < size");
    }
}

} // namespace detail

/// C(p, u + i) / C(p - 1, u - 1).
inline Ratio f_ratio(std::int64_t p, std::int64_t u, std::int64_t i)
{
    detail::require_ratio_domain("f_ratio", p, u, i);
    return Ratio(binomial(p, u + i), binomial(p - 1, u - 1));
}

/// (p - u - i) / (u + i + 1), the step factor f(p, u, i + 1) / f(p, u, i).
inline Ratio g_ratio(std::int64_t p, std::int64_t u, std::int64_t i)
{
    detail::require_ratio_domain("g_ratio", p, u, i);
    return Ratio(p - u - i, u + i + 1);
}

/// Both sides of the pairwise inequality at coalition size k:
///   first  = C(m_a - 1, q_a - 1) * C(m_b, k - q_a)
///   second = C(m_b - 1, q_b - 1) * C(m_a, k - q_b)
/// i.e. the critical numbers of a member of house a and of house b in the
/// bicameral game formed by the two houses.
inline std::pair<Natural, Natural> pairwise_sides(const HouseShape& a, const HouseShape& b, std::int64_t k)
{
    return {binomial(a.size - 1, a.quota - 1) * binomial(b.size, k - a.quota),
            binomial(b.size - 1, b.quota - 1) * binomial(a.size, k - b.quota)};
}

/// True iff the first side of pairwise_sides strictly exceeds the second.
inline bool ineq1_holds(const HouseShape& a, const HouseShape& b, std::int64_t k)
{
    detail::require_proper_quota(a);
    detail::require_proper_quota(b);
    auto [first, second] = pairwise_sides(a, b, k);
    return first > second;
}

enum class CertOutcome { CertifiedGreater, CertifiedEqual, NotCertified };
enum class CertBasis { MinimalSize, RatioChain, SingleCrossing, None };

struct CertVerdict
{
    CertOutcome outcome = CertOutcome::NotCertified;
    CertBasis basis = CertBasis::None;

    friend bool operator==(const CertVerdict&, const CertVerdict&) = default;
};

inline const char* to_string(CertOutcome o)
{
    switch (o) {
    case CertOutcome::CertifiedGreater: return "certified-greater";
    case CertOutcome::CertifiedEqual: return "certified-equal";
    case CertOutcome::NotCertified: return "not-certified";
    }
    return "?";
}

inline const char* to_string(CertBasis b)
{
    switch (b) {
    case CertBasis::MinimalSize: return "minimal-size";
    case CertBasis::RatioChain: return "ratio-chain";
    case CertBasis::SingleCrossing: return "single-crossing";
    case CertBasis::None: return "none";
    }
    return "?";
}

/// Decides, for every k in [q_a + q_b, max(q_a + m_b, q_b + m_a)], whether the
/// first side of pairwise_sides is provably greater than (or equal to) the
/// second, using only small-integer conditions on the sizes and quotas.
///
/// With i = k - q_a - q_b the comparison is f(m_b, q_b, i) vs f(m_a, q_a, i)
/// (b's ratio on the left). The walk is:
///   - i = 0: f(p, u, 0) = p / u, so the sign of q_a m_b - q_b m_a decides.
///   - i = 1: f(p, u, 1) = g(p, u, 0) f(p, u, 0), a product of small fractions.
///   - i -> i + 1: if f_b(i) >= f_a(i) with f_b(i) > 0, g_b(i) > 0 and
///     g_b(i) > g_a(i), then f_b(i + 1) > f_a(i + 1).
/// Binomials are never evaluated here; pairwise_sides is the direct route.
inline std::map<std::int64_t, CertVerdict> certify_comparison(const HouseShape& a, const HouseShape& b)
{
    detail::require_proper_quota(a);
    detail::require_proper_quota(b);

    const std::int64_t ma = a.size, qa = a.quota, mb = b.size, qb = b.quota;
    const std::int64_t lo = qa + qb;
    const std::int64_t hi = std::max(qa + mb, qb + ma);

    // g_b(i) > g_a(i), cross-multiplied over positive denominators.
    auto g_dominates = [&](std::int64_t i) {
        return (mb - qb - i) * (qa + i + 1) > (ma - qa - i) * (qb + i + 1);
    };

    std::map<std::int64_t, CertVerdict> verdicts;
    enum class Known { Greater, Equal, Unknown };

    Known state = Known::Unknown;
    CertBasis basis = CertBasis::None;
    const std::int64_t min_case = qa * mb - qb * ma;
    if (min_case > 0) {
        state = Known::Greater;
        basis = CertBasis::MinimalSize;
    } else if (min_case == 0) {
        state = Known::Equal;
        basis = CertBasis::MinimalSize;
    }
    bool chained_from_min_case = state == Known::Greater;

    for (std::int64_t i = 0; lo + i <= hi; ++i) {
        CertVerdict v;
        if (state == Known::Greater) {
            v = {CertOutcome::CertifiedGreater, basis};
        } else if (state == Known::Equal) {
            v = {CertOutcome::CertifiedEqual, basis};
        }
        verdicts.emplace(lo + i, v);

        // f_b(i + 1) > 0 requires i + 1 <= m_b - q_b, which also makes g_b(i) > 0.
        const bool step_ok = i + 1 <= mb - qb && g_dominates(i);
        if ((state == Known::Greater || state == Known::Equal) && step_ok) {
            basis = chained_from_min_case ? CertBasis::RatioChain : CertBasis::SingleCrossing;
            state = Known::Greater;
        } else if (i == 0 && i + 1 <= mb - qb
                   && (mb - qb) * mb * (qa + 1) * qa > (ma - qa) * ma * (qb + 1) * qb) {
            // f_b(1) > f_a(1) decided directly from the product of the two
            // small fractions; single crossing carries it forward.
            state = Known::Greater;
            basis = CertBasis::SingleCrossing;
            chained_from_min_case = false;
        } else {
            state = Known::Unknown;
            basis = CertBasis::None;
            chained_from_min_case = false;
        }
    }
    return verdicts;
}

} // namespace legipower

#endif // LEGIPOWER_EXACT_COMB_HPP
