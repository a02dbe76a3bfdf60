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

// Ranks the four player classes of the default US system under the Banzhaf
// and Shapley-Shubik indices and prints the pairwise dominance relations.

#include <legipower/us_model.hpp>

#include <iostream>

int main()
{
    using namespace legipower;
    const UsSpec spec;
    const auto n = spec.total_players();

    for (const auto& [name, w] : {std::pair{"Banzhaf", banzhaf(n)}, std::pair{"Shapley-Shubik", shapley_shubik(n)}}) {
        std::cout << name << ":";
        for (const auto& e : ranking(spec, w)) {
            std::cout << (e.tied_with_previous ? " = " : " ") << to_string(e.key);
        }
        std::cout << '\n';
    }

    const auto vectors = all_class_vectors(spec);
    for (std::size_t i = 0; i < vectors.size(); ++i) {
        for (std::size_t j = i + 1; j < vectors.size(); ++j) {
            const auto rel = weak_desirability(vectors[i].second, vectors[j].second);
            std::cout << to_string(vectors[i].first) << " vs " << to_string(vectors[j].first) << ": "
                      << to_string(rel.kind);
            if (rel.witness) {
                std::cout << " (ahead at " << rel.witness->above << ", behind at " << rel.witness->below << ")";
            }
            std::cout << '\n';
        }
    }
}
