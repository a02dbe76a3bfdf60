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

#include <legipower/commands.hpp>

#include <CLI11.hpp>

#include <iostream>
#include <map>
#include <sstream>

using namespace legipower;

int main(int argc, char** argv)
{
    CLI::App app{"Exact voting-power analysis of legislatures"};
    app.set_version_flag("--version", std::string(LEGIPOWER_VERSION));
    app.require_subcommand(1);
    app.fallthrough();

    RenderOptions render_opt;
    bool approx = false;
    bool no_meta = false;
    const std::map<std::string, Format> formats{{"table", Format::Table}, {"csv", Format::Csv}, {"json", Format::Json}};
    app.add_option("--format", render_opt.format, "Output format: table, csv or json")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_flag("--full", render_opt.full, "Print counts longer than 120 digits in full");
    app.add_flag("--no-meta", no_meta, "Omit the metadata block");
    app.add_flag("--approx", approx, "Add decimal approximations (marked with ~) next to exact values");

    std::string spec_path, index = "banzhaf", first, second;

    auto* analyze_cmd = app.add_subcommand("analyze", "Critical vectors, index values and ranking for a spec file");
    analyze_cmd->add_option("spec", spec_path, "Spec file (JSON)")->required();
    analyze_cmd->add_option("--index", index, "banzhaf, shapley, pointmass:<k> or file:<path>");

    auto* compare_cmd = app.add_subcommand("compare", "Weak-desirability verdict between two classes or chambers");
    compare_cmd->add_option("spec", spec_path, "Spec file (JSON)")->required();
    compare_cmd->add_option("first", first, "Class or chamber name")->required();
    compare_cmd->add_option("second", second, "Class or chamber name")->required();

    auto* oracle_cmd = app.add_subcommand("oracle", "Cross-check closed forms against exhaustive enumeration");
    oracle_cmd->add_option("spec", spec_path, "Spec file (JSON)")->required();

    UsOptions us_opt;
    auto* us_cmd = app.add_subcommand("us", "US-style system (100 senators, 435 representatives) with quota overrides");
    us_cmd->add_option("--qs", us_opt.senate_quota, "Senate quota with the president's signature");
    us_cmd->add_option("--qr", us_opt.house_quota, "House quota with the president's signature");
    us_cmd->add_option("--os", us_opt.senate_override, "Senate override quota");
    us_cmd->add_option("--or", us_opt.house_override, "House override quota");
    us_cmd->add_option("--index", index, "banzhaf, shapley, pointmass:<k> or file:<path>");

    std::int64_t ms = 0, mr = 0;
    std::optional<std::int64_t> qs, qr;
    auto* cross_cmd = app.add_subcommand("crossover", "Sizes where the larger chamber's member has more swings");
    cross_cmd->add_option("--ms", ms, "Smaller chamber size")->required();
    cross_cmd->add_option("--mr", mr, "Larger chamber size")->required();
    cross_cmd->add_option("--qs", qs, "Smaller chamber quota (default: majority)");
    cross_cmd->add_option("--qr", qr, "Larger chamber quota (default: majority)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitInput;
    }
    render_opt.meta = !no_meta;

    try {
        Report report;
        if (*analyze_cmd) {
            report = analyze(load_spec_file(spec_path), index, approx);
        } else if (*compare_cmd) {
            report = compare(load_spec_file(spec_path), first, second, approx);
        } else if (*oracle_cmd) {
            report = run_oracle(load_spec_file(spec_path));
        } else if (*us_cmd) {
            report = us_report(us_spec_from(us_opt), index, approx);
        } else {
            report = crossover_report(ms, mr, qs, qr);
        }
        std::ostringstream out;
        render(out, report, render_opt);
        std::cout << out.str() << std::flush;
        return report.exit_code;
    } catch (const SpecFileError& e) {
        std::cerr << "legipower: " << e.what() << '\n';
        return kExitInput;
    } catch (const InputError& e) {
        std::cerr << "legipower: " << e.what() << '\n';
        return kExitInput;
    } catch (const oracle::CapacityError& e) {
        std::cerr << "legipower: " << e.what() << '\n';
        return kExitBound;
    } catch (const std::invalid_argument& e) {
        std::cerr << "legipower: " << e.what() << '\n';
        return kExitInput;
    }
}
