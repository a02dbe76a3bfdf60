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

#ifndef LEGIPOWER_SPEC_FILE_HPP
#define LEGIPOWER_SPEC_FILE_HPP

// Spec files are JSON documents:
//
//   {
//     "chambers": [ {"name": "senate", "size": 100, "quota": 51},
//                   {"name": "house",  "size": 435, "quota": 218} ],
//     "executive": { "president": true, "vice_president": true,
//                    "override": {"senate": 67, "house": 290} }
//   }
//
// Without "executive" the document is a multicameral spec. With it, exactly
// two chambers are required and the first one listed is the senate.

#include <legipower/specs.hpp>

#include <nlohmann/json.hpp>

#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <variant>

namespace legipower {

using AnySpec = std::variant<MulticamSpec, UsSpec>;

/// Input problem, reported with the offending field path or source line.
class SpecFileError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

namespace detail {

inline void reject_unknown_keys(const nlohmann::json& obj, const std::string& path,
                                std::initializer_list<const char*> allowed)
{
    const std::set<std::string> ok(allowed.begin(), allowed.end());
    for (const auto& [key, value] : obj.items()) {
        if (!ok.contains(key)) {
            throw SpecFileError(path + ": unknown key '" + key + "'");
        }
    }
}

inline const nlohmann::json& require(const nlohmann::json& obj, const std::string& path, const char* key)
{
    if (!obj.contains(key)) {
        throw SpecFileError(path + ": missing key '" + key + "'");
    }
    return obj.at(key);
}

inline std::int64_t require_int(const nlohmann::json& v, const std::string& path)
{
    if (!v.is_number_integer()) {
        throw SpecFileError(path + ": expected an integer, got " + std::string(v.type_name()));
    }
    return v.get<std::int64_t>();
}

inline bool require_bool(const nlohmann::json& v, const std::string& path)
{
    if (!v.is_boolean()) {
        throw SpecFileError(path + ": expected true or false, got " + std::string(v.type_name()));
    }
    return v.get<bool>();
}

inline std::string line_col(const std::string& text, std::size_t byte)
{
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i + 1 < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

} // namespace detail

inline AnySpec spec_from_json(const nlohmann::json& doc)
{
    using namespace detail;
    if (!doc.is_object()) {
        throw SpecFileError("spec: top level must be an object");
    }
    reject_unknown_keys(doc, "spec", {"chambers", "executive"});
    const auto& chambers = require(doc, "spec", "chambers");
    if (!chambers.is_array() || chambers.empty()) {
        throw SpecFileError("chambers: expected a non-empty array");
    }
    MulticamSpec multi;
    for (std::size_t i = 0; i < chambers.size(); ++i) {
        const std::string path = "chambers[" + std::to_string(i) + "]";
        const auto& c = chambers[i];
        if (!c.is_object()) {
            throw SpecFileError(path + ": expected an object");
        }
        reject_unknown_keys(c, path, {"name", "size", "quota"});
        const auto& name = require(c, path, "name");
        if (!name.is_string() || name.get<std::string>().empty()) {
            throw SpecFileError(path + ".name: expected a non-empty string");
        }
        ChamberSpec chamber{name.get<std::string>(), require_int(require(c, path, "size"), path + ".size"),
                            require_int(require(c, path, "quota"), path + ".quota")};
        const std::string label = path + " ('" + chamber.name + "')";
        if (chamber.size < 1) {
            throw SpecFileError(label + ".size: must be positive, got " + std::to_string(chamber.size));
        }
        if (chamber.quota < 1 || chamber.quota > chamber.size) {
            throw SpecFileError(label + ".quota: " + std::to_string(chamber.quota) + " outside [1, "
                                + std::to_string(chamber.size) + "]");
        }
        multi.chambers.push_back(std::move(chamber));
    }
    try {
        multi.validate();
    } catch (const SpecError& e) {
        throw SpecFileError(std::string("chambers: ") + e.what());
    }
    if (!doc.contains("executive")) {
        return multi;
    }

    const auto& exec = doc.at("executive");
    if (!exec.is_object()) {
        throw SpecFileError("executive: expected an object");
    }
    reject_unknown_keys(exec, "executive", {"president", "vice_president", "override"});
    if (multi.chambers.size() != 2) {
        throw SpecFileError("executive: needs exactly two chambers (senate first), got "
                            + std::to_string(multi.chambers.size()));
    }
    const auto& senate = multi.chambers[0];
    const auto& house = multi.chambers[1];
    const auto& ov = require(exec, "executive", "override");
    if (!ov.is_object()) {
        throw SpecFileError("executive.override: expected an object keyed by chamber name");
    }
    for (const auto& [key, value] : ov.items()) {
        if (key != senate.name && key != house.name) {
            throw SpecFileError("executive.override: unknown chamber '" + key + "'");
        }
    }
    UsSpec us;
    us.senate_size = senate.size;
    us.house_size = house.size;
    us.senate_quota = senate.quota;
    us.house_quota = house.quota;
    us.senate_override = require_int(require(ov, "executive.override", senate.name.c_str()),
                                     "executive.override." + senate.name);
    us.house_override = require_int(require(ov, "executive.override", house.name.c_str()),
                                    "executive.override." + house.name);
    us.has_president = require_bool(require(exec, "executive", "president"), "executive.president");
    us.has_vp = require_bool(require(exec, "executive", "vice_president"), "executive.vice_president");
    try {
        us.validate();
    } catch (const SpecError& e) {
        throw SpecFileError(std::string("executive: ") + e.what());
    }
    return us;
}

inline AnySpec parse_spec_text(const std::string& text)
{
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw SpecFileError("syntax error at " + detail::line_col(text, e.byte) + ": " + e.what());
    }
    return spec_from_json(doc);
}

inline AnySpec load_spec_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw SpecFileError(path + ": cannot open");
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    try {
        return parse_spec_text(buf.str());
    } catch (const SpecFileError& e) {
        throw SpecFileError(path + ": " + e.what());
    }
}

inline nlohmann::ordered_json spec_to_json(const AnySpec& spec)
{
    nlohmann::ordered_json out;
    if (const auto* m = std::get_if<MulticamSpec>(&spec)) {
        out["chambers"] = nlohmann::ordered_json::array();
        for (const auto& c : m->chambers) {
            out["chambers"].push_back({{"name", c.name}, {"size", c.size}, {"quota", c.quota}});
        }
        return out;
    }
    const auto& us = std::get<UsSpec>(spec);
    out["chambers"] = {{{"name", "senate"}, {"size", us.senate_size}, {"quota", us.senate_quota}},
                       {{"name", "house"}, {"size", us.house_size}, {"quota", us.house_quota}}};
    out["executive"] = {{"president", us.has_president},
                        {"vice_president", us.has_vp},
                        {"override", {{"senate", us.senate_override}, {"house", us.house_override}}}};
    return out;
}

inline std::int64_t total_players(const AnySpec& spec)
{
    return std::visit([](const auto& s) { return s.total_players(); }, spec);
}

} // namespace legipower

#endif // LEGIPOWER_SPEC_FILE_HPP
