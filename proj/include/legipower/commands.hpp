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

#ifndef LEGIPOWER_COMMANDS_HPP
#define LEGIPOWER_COMMANDS_HPP

// Report builders behind the legipower subcommands. Exit codes:
// 0 success, 1 oracle mismatch, 2 invalid input, 3 oracle size bound.

#include <legipower/game_oracle.hpp>
#include <legipower/legislature.hpp>
#include <legipower/report.hpp>
#include <legipower/semivalues.hpp>
#include <legipower/spec_file.hpp>
#include <legipower/us_model.hpp>

#include <fstream>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#ifndef LEGIPOWER_VERSION
#define LEGIPOWER_VERSION "unknown"
#endif

namespace legipower {

inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInput = 2;
inline constexpr int kExitBound = 3;

class InputError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

using Subjects = std::vector<std::pair<std::string, CountVector>>;

/// Critical vector of one member of each chamber, or of each US class.
inline Subjects subject_vectors(const AnySpec& spec)
{
    Subjects out;
    if (const auto* m = std::get_if<MulticamSpec>(&spec)) {
        for (const auto& c : m->chambers) {
            out.emplace_back(c.name, member_critical_vector(*m, c.name));
        }
    } else {
        for (const auto& [cls, cv] : all_class_vectors(std::get<UsSpec>(spec))) {
            out.emplace_back(to_string(cls), cv);
        }
    }
    return out;
}

/// Maps a user-supplied class or chamber name to the subject name.
inline std::string resolve_subject(const AnySpec& spec, const std::string& name)
{
    if (const auto* m = std::get_if<MulticamSpec>(&spec)) {
        for (const auto& c : m->chambers) {
            if (c.name == name) {
                return name;
            }
        }
        throw InputError("unknown chamber '" + name + "'");
    }
    const auto& us = std::get<UsSpec>(spec);
    static const std::vector<std::pair<std::vector<std::string>, PlayerClass>> aliases{
        {{"president", "p"}, PlayerClass::President},
        {{"vice_president", "vice-president", "vp", "v"}, PlayerClass::VicePresident},
        {{"senator", "s"}, PlayerClass::Senator},
        {{"representative", "rep", "r"}, PlayerClass::Representative},
    };
    for (const auto& [names, cls] : aliases) {
        if (std::find(names.begin(), names.end(), name) != names.end()) {
            if (!us.has_class(cls)) {
                throw InputError(std::string("spec has no ") + to_string(cls));
            }
            return to_string(cls);
        }
    }
    throw InputError("unknown class '" + name + "' (president, vp, senator, representative)");
}

inline WeightingVector read_weight_file(const std::string& path, std::int64_t n)
{
    std::ifstream in(path);
    if (!in) {
        throw InputError(path + ": cannot open weighting vector file");
    }
    std::vector<Ratio> weights;
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (line.find_first_not_of(" \t\r") == std::string::npos) {
            continue;
        }
        try {
            weights.push_back(parse_ratio(line));
        } catch (const std::invalid_argument& e) {
            throw InputError(path + ":" + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (static_cast<std::int64_t>(weights.size()) != n) {
        throw InputError(path + ": " + std::to_string(weights.size()) + " weights for " + std::to_string(n)
                         + " players");
    }
    try {
        return WeightingVector(std::move(weights));
    } catch (const InvalidWeights& e) {
        throw InputError(path + ": " + e.what());
    }
}

/// banzhaf | shapley | pointmass:<k> | file:<path>
inline WeightingVector parse_index(const std::string& selector, std::int64_t n)
{
    if (selector == "banzhaf") {
        return banzhaf(n);
    }
    if (selector == "shapley" || selector == "shapley-shubik") {
        return shapley_shubik(n);
    }
    if (selector.starts_with("pointmass:")) {
        const auto arg = selector.substr(10);
        std::int64_t k = 0;
        try {
            std::size_t used = 0;
            k = std::stoll(arg, &used);
            if (used != arg.size()) {
                throw std::invalid_argument(arg);
            }
        } catch (const std::exception&) {
            throw InputError("index '" + selector + "': size is not an integer");
        }
        if (k < 1 || k > n) {
            throw InputError("index '" + selector + "': size outside [1, " + std::to_string(n) + "]");
        }
        return point_mass(n, k);
    }
    if (selector.starts_with("file:")) {
        return read_weight_file(selector.substr(5), n);
    }
    throw InputError("unknown index '" + selector + "' (banzhaf, shapley, pointmass:<k>, file:<path>)");
}

inline nlohmann::ordered_json base_meta(const std::string& command, const AnySpec* spec)
{
    nlohmann::ordered_json m;
    m["tool"] = "legipower";
    m["version"] = LEGIPOWER_VERSION;
    m["command"] = command;
    if (spec != nullptr) {
        m["spec"] = spec_to_json(*spec);
    }
    return m;
}

inline std::string support_text(const CountVector& cv)
{
    if (cv.empty()) {
        return "empty";
    }
    if (cv.support_is_interval()) {
        return std::to_string(cv.min_size()) + "-" + std::to_string(cv.max_size());
    }
    std::string out;
    std::int64_t run = -1, prev = -1;
    auto close = [&] {
        if (run >= 0) {
            out += (out.empty() ? "" : ",") + (run == prev ? std::to_string(run) : std::to_string(run) + "-" + std::to_string(prev));
        }
    };
    for (const auto& [k, c] : cv.nonzero()) {
        if (k != prev + 1) {
            close();
            run = k;
        }
        prev = k;
    }
    close();
    return out;
}

/// Index values, ranking and critical vectors for every subject.
inline void add_analysis(Report& r, const Subjects& subjects, const WeightingVector& w, const std::string& index_name,
                         bool approx)
{
    r.body["index"] = {{"name", index_name}, {"players", w.player_count()}};
    auto values = nlohmann::ordered_json::array();
    for (const auto& [name, cv] : subjects) {
        nlohmann::ordered_json row;
        row["class"] = name;
        row["support"] = support_text(cv);
        const auto v = evaluate(w, cv);
        put_rational(row, "value", v, approx);
        values.push_back(row);
        r.csv.push_back({"index", name, "", ratio_text(v)});
    }
    r.body["values"] = values;

    const auto ranked = rank_by_index(subjects, w);
    auto ranking = nlohmann::ordered_json::array();
    std::string order;
    for (std::size_t i = 0; i < ranked.size(); ++i) {
        const auto& e = ranked[i];
        nlohmann::ordered_json row;
        row["rank"] = i + 1;
        row["class"] = e.key;
        put_rational(row, "value", e.value, approx);
        row["tied"] = e.tied_with_previous;
        ranking.push_back(row);
        order += (i == 0 ? "" : (e.tied_with_previous ? " = " : " > ")) + e.key;
        r.csv.push_back({"rank", std::to_string(i + 1), e.key, ratio_text(e.value)});
    }
    r.body["order"] = order;
    r.body["ranking"] = ranking;

    nlohmann::ordered_json vectors = nlohmann::ordered_json::object();
    for (const auto& [name, cv] : subjects) {
        vectors[name] = vector_json(cv);
        add_vector_records(r, name, cv);
    }
    r.body["critical_vectors"] = vectors;
}

inline Report analyze(const AnySpec& spec, const std::string& index, bool approx)
{
    Report r;
    const auto w = parse_index(index, total_players(spec));
    r.meta = base_meta("analyze", &spec);
    add_analysis(r, subject_vectors(spec), w, index, approx);
    return r;
}

/// "a strictly above b", with below-relations restated from b's side.
inline std::string relation_sentence(const std::string& a, const std::string& b, RelationKind k)
{
    switch (k) {
    case RelationKind::StrictlyAbove: return a + " strictly above " + b;
    case RelationKind::WeaklyAbove: return a + " weakly above " + b;
    case RelationKind::Equal: return a + " equal to " + b;
    case RelationKind::WeaklyBelow: return b + " weakly above " + a;
    case RelationKind::StrictlyBelow: return b + " strictly above " + a;
    case RelationKind::Incomparable: return a + " and " + b + " incomparable";
    }
    return "?";
}

inline const CountVector& subject_vector(const Subjects& subjects, const std::string& name)
{
    for (const auto& [n, cv] : subjects) {
        if (n == name) {
            return cv;
        }
    }
    throw InputError("unknown subject '" + name + "'");
}

inline Report compare(const AnySpec& spec, const std::string& first, const std::string& second, bool approx)
{
    const auto a = resolve_subject(spec, first);
    const auto b = resolve_subject(spec, second);
    if (a == b) {
        throw InputError("compare needs two different classes, got '" + a + "' twice");
    }
    const auto subjects = subject_vectors(spec);
    const auto& ca = subject_vector(subjects, a);
    const auto& cb = subject_vector(subjects, b);
    const auto rel = weak_desirability(ca, cb);

    Report r;
    r.meta = base_meta("compare", &spec);
    r.body["first"] = a;
    r.body["second"] = b;
    r.body["relation"] = to_string(rel.kind);
    r.body["verdict"] = relation_sentence(a, b, rel.kind);
    r.csv.push_back({"relation", a + " vs " + b, "", to_string(rel.kind)});
    if (rel.witness) {
        r.body["witness"] = {{"first_ahead_at", rel.witness->above}, {"second_ahead_at", rel.witness->below}};
        r.csv.push_back({"witness", a, std::to_string(rel.witness->above), "ahead"});
        r.csv.push_back({"witness", b, std::to_string(rel.witness->below), "ahead"});
    }
    const auto n = total_players(spec);
    auto indices = nlohmann::ordered_json::array();
    if (auto pair = distinguishing_indices(ca, cb, n)) {
        const std::pair<std::string, const WeightingVector*> entries[] = {
            {a, &pair->first}, {b, &pair->second}};
        const std::int64_t sizes[] = {rel.witness->above, rel.witness->below};
        for (std::size_t i = 0; i < 2; ++i) {
            nlohmann::ordered_json row;
            row["index"] = "pointmass:" + std::to_string(sizes[i]);
            row["favours"] = entries[i].first;
            put_rational(row, "first_value", evaluate(*entries[i].second, ca), approx);
            put_rational(row, "second_value", evaluate(*entries[i].second, cb), approx);
            indices.push_back(row);
            r.csv.push_back({"distinguishing_index", entries[i].first, std::to_string(sizes[i]),
                             "pointmass:" + std::to_string(sizes[i])});
        }
    }
    r.body["distinguishing_indices"] = indices;

    auto per_k = nlohmann::ordered_json::array();
    for (const auto& s : compare_vectors(ca, cb).per_k) {
        per_k.push_back({{"k", s.size},
                         {"first_count", ca.at(s.size).str()},
                         {"second_count", cb.at(s.size).str()},
                         {"sign", s.sign > 0 ? "+" : (s.sign < 0 ? "-" : "0")}});
        r.csv.push_back({"sign", a + " vs " + b, std::to_string(s.size), s.sign > 0 ? "+" : (s.sign < 0 ? "-" : "0")});
    }
    r.body["per_size"] = per_k;
    return r;
}

/// Enumerates the game exhaustively and diffs every subject's critical vector.
inline Report run_oracle(const AnySpec& spec)
{
    Report r;
    r.meta = base_meta("oracle", &spec);
    const auto game = std::visit([](const auto& s) { return oracle::from_spec(s); }, spec);
    r.body["players"] = game.size();
    r.body["coalitions"] = std::to_string(std::uint64_t{1} << game.size());
    r.body["game"] = "valid simple game";

    auto rows = nlohmann::ordered_json::array();
    nlohmann::ordered_json first_mismatch;
    bool all_match = true;
    for (const auto& [name, closed] : subject_vectors(spec)) {
        const auto brute = oracle::critical_vector(game, game.first_of(name));
        const bool ok = closed == brute;
        rows.push_back({{"class", name}, {"status", ok ? "match" : "mismatch"}, {"support", support_text(brute)}});
        r.csv.push_back({"oracle", name, "", ok ? "match" : "mismatch"});
        if (!ok && all_match) {
            all_match = false;
            const auto lo = std::min(closed.empty() ? brute.min_size() : closed.min_size(),
                                     brute.empty() ? closed.min_size() : brute.min_size());
            for (auto k = lo;; ++k) {
                if (closed.at(k) != brute.at(k)) {
                    first_mismatch = {{"class", name},
                                      {"k", k},
                                      {"closed_form", closed.at(k).str()},
                                      {"oracle", brute.at(k).str()}};
                    r.csv.push_back({"mismatch", name, std::to_string(k),
                                     closed.at(k).str() + " vs " + brute.at(k).str()});
                    break;
                }
            }
        }
    }
    r.body["classes"] = rows;
    r.body["result"] = all_match ? "match" : "mismatch";
    if (!all_match) {
        r.body["first_mismatch"] = first_mismatch;
        r.exit_code = kExitMismatch;
    }
    return r;
}

struct UsOptions
{
    std::optional<std::int64_t> senate_quota, house_quota, senate_override, house_override;
};

/// Default US system with quota overrides. A sign-track quota above its
/// override quota raises the override quota to match unless one was given.
inline UsSpec us_spec_from(const UsOptions& o)
{
    UsSpec spec;
    if (o.senate_override) {
        spec.senate_override = *o.senate_override;
    }
    if (o.house_override) {
        spec.house_override = *o.house_override;
    }
    if (o.senate_quota) {
        spec.senate_quota = *o.senate_quota;
        if (!o.senate_override) {
            spec = with_senate_quota(spec, *o.senate_quota);
        }
    }
    if (o.house_quota) {
        spec.house_quota = *o.house_quota;
        if (!o.house_override) {
            spec = with_house_quota(spec, *o.house_quota);
        }
    }
    try {
        spec.validate();
    } catch (const SpecError& e) {
        throw InputError(e.what());
    }
    return spec;
}

inline Report us_report(const UsSpec& spec, const std::string& index, bool approx)
{
    const AnySpec any = spec;
    Report r;
    const auto w = parse_index(index, spec.total_players());
    r.meta = base_meta("us", &any);
    const auto subjects = subject_vectors(any);
    add_analysis(r, subjects, w, index, approx);

    auto relations = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < subjects.size(); ++i) {
        for (std::size_t j = i + 1; j < subjects.size(); ++j) {
            const auto& [a, ca] = subjects[i];
            const auto& [b, cb] = subjects[j];
            const auto rel = weak_desirability(ca, cb);
            nlohmann::ordered_json row{{"first", a}, {"second", b}, {"relation", to_string(rel.kind)},
                                       {"verdict", relation_sentence(a, b, rel.kind)}};
            relations.push_back(row);
            r.csv.push_back({"relation", a + " vs " + b, "", to_string(rel.kind)});
        }
    }
    r.body["relations"] = relations;

    if (spec.has_vp) {
        auto runs = nlohmann::ordered_json::array();
        const auto signs = vr_comparison(spec);
        for (std::size_t i = 0; i < signs.size();) {
            std::size_t j = i;
            while (j + 1 < signs.size() && signs[j + 1].sign == signs[i].sign) {
                ++j;
            }
            const char* who = signs[i].sign > 0 ? "vice_president" : (signs[i].sign < 0 ? "representative" : "tie");
            runs.push_back({{"from", signs[i].size}, {"to", signs[j].size}, {"ahead", who}});
            r.csv.push_back({"vr", std::to_string(signs[i].size) + "-" + std::to_string(signs[j].size), "", who});
            i = j + 1;
        }
        r.body["vice_president_vs_representative"] = runs;
    }
    return r;
}

inline Report crossover_report(std::int64_t ms, std::int64_t mr, std::optional<std::int64_t> qs,
                               std::optional<std::int64_t> qr)
{
    if (ms < 1 || mr <= ms) {
        throw InputError("crossover needs 1 <= ms < mr");
    }
    const HouseShape small{ms, qs.value_or(majority_quota(ms))};
    const HouseShape large{mr, qr.value_or(majority_quota(mr))};
    if (small.quota < 1 || small.quota > ms || large.quota < 1 || large.quota > mr) {
        throw InputError("crossover: quotas must satisfy 1 <= q <= m");
    }
    const MulticamSpec spec{{{"smaller", small.size, small.quota}, {"larger", large.size, large.quota}}};
    const AnySpec any = spec;
    Report r;
    r.meta = base_meta("crossover", &any);
    if (!qs && !qr) {
        r.body["case"] = to_string(classify_bicameral(ms, mr));
    }
    const auto cross = crossover_sizes(small, large);
    r.body["crossover_sizes"] = cross;
    for (auto k : cross) {
        r.csv.push_back({"crossover", "larger", std::to_string(k), "ahead"});
    }
    const auto v = compare_members(spec, "smaller", "larger");
    const std::string leader = v.leader == Side::First ? "smaller" : (v.leader == Side::Second ? "larger" : "none");
    r.body["relation"] = to_string(v.relation);
    r.body["leader"] = leader;
    r.csv.push_back({"relation", "smaller vs larger", "", to_string(v.relation)});
    r.csv.push_back({"leader", leader, "", ""});
    auto per_k = nlohmann::ordered_json::array();
    for (const auto& s : v.per_k) {
        auto [c_small, c_large] = pairwise_sides(small, large, s.size);
        per_k.push_back({{"k", s.size},
                         {"smaller_count", c_small.str()},
                         {"larger_count", c_large.str()},
                         {"sign", s.sign > 0 ? "+" : (s.sign < 0 ? "-" : "0")}});
    }
    r.body["per_size"] = per_k;
    return r;
}

} // namespace legipower

#endif // LEGIPOWER_COMMANDS_HPP
