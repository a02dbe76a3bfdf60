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

#ifndef LEGIPOWER_REPORT_HPP
#define LEGIPOWER_REPORT_HPP

// Reports are built once as an ordered JSON tree plus a list of CSV records,
// then rendered as json, csv or a plain-text table. Every number is an exact
// integer or "p/q" string.
//
// CSV layout, header "record,subject,key,value":
//   meta,<field>,,<value>
//   vector,<class>,<k>,<count>        one row per class and size
//   index,<class>,,<value>            one row per class
//   rank,<position>,<class>,<value>
//   other command-specific records (relation, witness, crossover, ...)

#include <legipower/coalition_engine.hpp>
#include <legipower/exact_comb.hpp>

#include <boost/multiprecision/cpp_dec_float.hpp>
#include <nlohmann/json.hpp>

#include <algorithm>
#include <array>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace legipower {

enum class Format { Table, Csv, Json };

struct RenderOptions
{
    Format format = Format::Table;
    bool full = false; // no elision of long counts in table/csv
    bool meta = true;
};

inline constexpr std::size_t kElideDigits = 120;

/// "123456...789 (N digits)" for integers longer than the threshold.
inline std::string elide_digits(const std::string& digits, std::size_t limit = kElideDigits)
{
    if (digits.size() <= limit) {
        return digits;
    }
    return digits.substr(0, 20) + "..." + digits.substr(digits.size() - 20) + " (" + std::to_string(digits.size())
           + " digits)";
}

inline std::string ratio_text(const Ratio& r)
{
    return r.str();
}

/// Decimal rendering with 12 significant digits, prefixed by "~".
inline std::string approx_text(const Ratio& r)
{
    using Dec = boost::multiprecision::cpp_dec_float_50;
    const Dec value = Dec(boost::multiprecision::numerator(r)) / Dec(boost::multiprecision::denominator(r));
    return "~" + value.str(12, std::ios::scientific);
}

using CsvRecord = std::array<std::string, 4>;

struct Report
{
    nlohmann::ordered_json meta = nlohmann::ordered_json::object();
    nlohmann::ordered_json body = nlohmann::ordered_json::object();
    std::vector<CsvRecord> csv;
    int exit_code = 0;
};

/// Sets obj[key] to the exact value and, when asked, obj[key_approx].
inline void put_rational(nlohmann::ordered_json& obj, const std::string& key, const Ratio& value, bool approx)
{
    obj[key] = ratio_text(value);
    if (approx) {
        obj[key + "_approx"] = approx_text(value);
    }
}

/// [{"k": k, "count": "..."}] for every nonzero size.
inline nlohmann::ordered_json vector_json(const CountVector& cv)
{
    auto out = nlohmann::ordered_json::array();
    for (const auto& [k, c] : cv.nonzero()) {
        out.push_back({{"k", k}, {"count", c.str()}});
    }
    return out;
}

inline void add_vector_records(Report& r, const std::string& subject, const CountVector& cv)
{
    for (const auto& [k, c] : cv.nonzero()) {
        r.csv.push_back({"vector", subject, std::to_string(k), c.str()});
    }
}

namespace detail {

inline std::string scalar_text(const nlohmann::ordered_json& v)
{
    if (v.is_string()) {
        return v.get<std::string>();
    }
    if (v.is_null()) {
        return "-";
    }
    return v.dump();
}

inline bool is_flat_object(const nlohmann::ordered_json& v)
{
    return v.is_object()
           && std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_primitive(); });
}

inline std::string cell_text(const std::string& key, const nlohmann::ordered_json& v, const RenderOptions& opt)
{
    auto s = scalar_text(v);
    if (!opt.full && key.ends_with("count")) {
        s = elide_digits(s);
    }
    return s;
}

inline void render_table_rows(std::ostream& out, const nlohmann::ordered_json& rows, const std::string& indent,
                              const RenderOptions& opt)
{
    std::vector<std::string> columns;
    for (const auto& row : rows) {
        for (const auto& [k, v] : row.items()) {
            if (std::find(columns.begin(), columns.end(), k) == columns.end()) {
                columns.push_back(k);
            }
        }
    }
    std::vector<std::vector<std::string>> cells;
    std::vector<std::size_t> width(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        width[c] = columns[c].size();
    }
    for (const auto& row : rows) {
        std::vector<std::string> line;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            line.push_back(row.contains(columns[c]) ? cell_text(columns[c], row.at(columns[c]), opt) : "");
            width[c] = std::max(width[c], line.back().size());
        }
        cells.push_back(std::move(line));
    }
    auto emit = [&](const std::vector<std::string>& line) {
        std::string text = indent;
        for (std::size_t c = 0; c < line.size(); ++c) {
            text += line[c];
            if (c + 1 < line.size()) {
                text += std::string(width[c] - line[c].size() + 2, ' ');
            }
        }
        out << text << '\n';
    };
    emit(columns);
    for (const auto& line : cells) {
        emit(line);
    }
}

inline void render_table(std::ostream& out, const nlohmann::ordered_json& obj, const std::string& indent,
                         const RenderOptions& opt)
{
    for (const auto& [key, v] : obj.items()) {
        if (v.is_primitive()) {
            out << indent << key << ": " << cell_text(key, v, opt) << '\n';
        } else if (v.is_array() && v.empty()) {
            out << indent << key << ": (none)\n";
        } else if (v.is_array() && std::all_of(v.begin(), v.end(), [](const auto& x) { return x.is_primitive(); })) {
            std::string joined;
            for (const auto& x : v) {
                joined += (joined.empty() ? "" : ", ") + scalar_text(x);
            }
            out << indent << key << ": " << joined << '\n';
        } else if (v.is_array() && std::all_of(v.begin(), v.end(), is_flat_object)) {
            out << indent << key << ":\n";
            render_table_rows(out, v, indent + "  ", opt);
        } else if (v.is_array()) {
            out << indent << key << ":\n";
            for (const auto& item : v) {
                if (item.is_object()) {
                    out << indent << "  -\n";
                    render_table(out, item, indent + "    ", opt);
                } else {
                    out << indent << "  - " << scalar_text(item) << '\n';
                }
            }
        } else {
            out << indent << key << ":\n";
            render_table(out, v, indent + "  ", opt);
        }
    }
}

inline std::string csv_field(const std::string& s)
{
    if (s.find_first_of(",\"\n") == std::string::npos) {
        return s;
    }
    std::string q = "\"";
    for (char c : s) {
        q += c == '"' ? std::string("\"\"") : std::string(1, c);
    }
    return q + "\"";
}

} // namespace detail

inline void render(std::ostream& out, const Report& r, const RenderOptions& opt)
{
    switch (opt.format) {
    case Format::Json: {
        nlohmann::ordered_json doc = nlohmann::ordered_json::object();
        if (opt.meta) {
            doc["meta"] = r.meta;
        }
        for (const auto& [k, v] : r.body.items()) {
            doc[k] = v;
        }
        out << doc.dump(2) << '\n';
        break;
    }
    case Format::Table:
        if (opt.meta) {
            nlohmann::ordered_json m;
            m["meta"] = r.meta;
            detail::render_table(out, m, "", opt);
        }
        detail::render_table(out, r.body, "", opt);
        break;
    case Format::Csv:
        out << "record,subject,key,value\n";
        if (opt.meta) {
            for (const auto& [k, v] : r.meta.items()) {
                out << "meta," << detail::csv_field(k) << ",," << detail::csv_field(v.is_primitive() ? detail::scalar_text(v) : v.dump()) << '\n';
            }
        }
        for (const auto& rec : r.csv) {
            auto value = rec[3];
            if (!opt.full && rec[0] == "vector") {
                value = elide_digits(value);
            }
            out << detail::csv_field(rec[0]) << ',' << detail::csv_field(rec[1]) << ',' << detail::csv_field(rec[2])
                << ',' << detail::csv_field(value) << '\n';
        }
        break;
    }
}

} // namespace legipower

#endif // LEGIPOWER_REPORT_HPP
