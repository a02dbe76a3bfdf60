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

// Majority-quota bicameral legislatures with an odd smaller chamber and an
// even larger one: which coalition sizes favour a member of the larger house.

#include <legipower/legislature.hpp>

#include <iostream>

int main()
{
    using namespace legipower;
    for (auto [ms, mr] : {std::pair<std::int64_t, std::int64_t>{3, 4}, {5, 8}, {5, 10}, {101, 150}}) {
        const HouseShape s{ms, majority_quota(ms)}, r{mr, majority_quota(mr)};
        std::cout << "(" << ms << ", " << mr << ") " << to_string(classify_bicameral(ms, mr)) << ": larger ahead at";
        const auto sizes = crossover_sizes(s, r);
        if (sizes.empty()) {
            std::cout << " no size";
        }
        for (auto k : sizes) {
            std::cout << ' ' << k;
        }
        std::cout << '\n';
    }
}
