// SPDX-License-Identifier: Apache-2.0
//
// uavplace - simultaneous placement of multiple UAV base stations
// Copyright (C) 2026 The uavplace authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

// Command-line front end: gen | solve | sweep | export
// Exit codes: 0 feasible, 2 infeasible but reported, 1 error.

#include <uavplace/uavplace.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <string>

namespace fs = std::filesystem;
using namespace uavplace;

namespace
{

std::string output_dir(const std::string &flag)
{
    std::string dir = flag;
    if (dir.empty())
        if (const char *env = std::getenv("UAVPLACE_OUT_DIR"); env && *env)
            dir = env;
    if (dir.empty())
        dir = "uavplace_out";
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec)
        throw Error(ErrorKind::IoError, "cannot create output directory " + dir + ": " + ec.message());
    return dir;
}

ScenarioConfig config_from(const std::string &path)
{
    return path.empty() ? ScenarioConfig{} : load_config(path);
}

Method method_from(const std::string &s) { return s == "brute" ? Method::Brute : Method::Lp; }

void print_placement(const PlacementResult &r)
{
    std::printf("combination %zu  (%s)%s%s\n", r.combination, r.feasible ? "feasible" : "INFEASIBLE",
                r.relaxation_gap ? "  [relaxation gap: LP rounding replaced by max-min combination]" : "",
                r.lp_infeasible ? "  [LP relaxation infeasible]" : "");
    for (std::size_t j = 0; j < r.positions.size(); ++j)
        std::printf("  UAV %zu at (%.3f, %.3f, %.3f)\n", j, r.positions[j].x, r.positions[j].y, r.positions[j].z);
    std::printf("  min SINR %.4f dB, threshold %.4f dB, %zu feasible combinations\n", r.min_sinr_db,
                r.threshold_db, r.feasible_count);
}

void write_run(const RunArtifacts &a, const std::string &dir)
{
    write_text_file((fs::path(dir) / "run.json").string(), to_json(a).dump(2) + "\n");
}

int cmd_gen(const std::string &config, const std::string &out)
{
    const auto cfg = config_from(config);
    const auto sc = build_scenario(cfg);
    nlohmann::ordered_json j;
    j["seed"] = cfg.seed;
    j["config_hash"] = hex64(config_hash(cfg));
    j["prng"] = prng_name;
    j["config"] = to_text(cfg);
    j["combinations"] = sc.space.count();
    j["regions"] = nlohmann::ordered_json::array();
    for (std::size_t r = 0; r < sc.regions.size(); ++r)
    {
        nlohmann::ordered_json jr;
        const auto &reg = sc.regions[r];
        jr["bounds"] = {reg.x_min, reg.x_max, reg.y_min, reg.y_max};
        jr["users"] = nlohmann::ordered_json::array();
        for (std::size_t k = 0; k < sc.radio.users.size(); ++k)
            if (sc.radio.owner[k] == r)
                jr["users"].push_back({{"user_index", k},
                                       {"x", sc.radio.users[k].x},
                                       {"y", sc.radio.users[k].y},
                                       {"gain_re", sc.radio.gains[k].real()},
                                       {"gain_im", sc.radio.gains[k].imag()}});
        jr["candidates"] = nlohmann::ordered_json::array();
        for (std::size_t i = 0; i < sc.grids[r].size(); ++i)
        {
            const auto &p = sc.grids[r].points[i];
            jr["candidates"].push_back({{"lattice_index", sc.grids[r].source_index[i]}, {"x", p.x}, {"y", p.y}, {"z", p.z}});
        }
        jr["lattice_size"] = sc.lattice[r].size();
        j["regions"].push_back(std::move(jr));
    }
    const auto dir = output_dir(out);
    write_text_file((fs::path(dir) / "scenario.json").string(), j.dump(2) + "\n");
    std::printf("%zu regions, %zu users, %zu combinations -> %s\n", sc.regions.size(), sc.radio.users.size(),
                sc.space.count(), (fs::path(dir) / "scenario.json").c_str());
    return 0;
}

int cmd_solve(const std::string &config, const std::string &method, const std::optional<double> &threshold,
              const std::string &out)
{
    auto cfg = config_from(config);
    if (threshold)
        cfg.gamma_th_db = *threshold;
    const auto a = run_solve(cfg, method_from(method));
    const auto dir = output_dir(out);
    write_run(a, dir);
    write_text_file((fs::path(dir) / "placement.csv").string(),
                    render_export(a, ExportFormat::Csv, ExportWhat::Placement));
    write_text_file((fs::path(dir) / "sinr.csv").string(), render_export(a, ExportFormat::Csv, ExportWhat::Sinr));
    print_placement(*a.placement);
    std::printf("timing: precompute %.3f s, S build %.3f s, solve %.3f s\n", a.timing.precompute_s,
                a.timing.sinr_build_s, a.timing.solve_s);
    return a.exit_code();
}

int cmd_sweep(const std::string &config, const std::string &method, double from_db, double to_db, std::size_t steps,
              std::size_t seeds, std::uint64_t first_seed, const std::string &out)
{
    const auto cfg = config_from(config);
    RunArtifacts a;
    ExportWhat what;
    if (seeds > 0)
    {
        std::vector<std::uint64_t> list(seeds);
        std::iota(list.begin(), list.end(), first_seed);
        a = run_seed_sweep(cfg, list, method_from(method));
        what = ExportWhat::Scatter;
    }
    else
    {
        a = run_sweep(cfg, linspace(from_db, to_db, steps), method_from(method));
        what = ExportWhat::Sweep;
    }
    const auto dir = output_dir(out);
    write_run(a, dir);
    const std::string file = std::string(to_string(what)) + ".csv";
    write_text_file((fs::path(dir) / file).string(), render_export(a, ExportFormat::Csv, what));
    std::size_t feasible = 0;
    for (const auto &r : a.sweep)
        feasible += r.result.feasible ? 1 : 0;
    std::printf("%zu runs, %zu feasible -> %s\n", a.sweep.size(), feasible, (fs::path(dir) / file).c_str());
    return a.exit_code();
}

int cmd_export(const std::string &run, const std::string &format, const std::string &what, const std::string &output)
{
    const auto a = load_artifacts(run);
    const auto text = render_export(a, format == "json" ? ExportFormat::Json : ExportFormat::Csv,
                                    parse_export_what(what));
    if (output.empty())
        std::cout << text;
    else
        write_text_file(output, text);
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Simultaneous placement of multiple UAV base stations on candidate grids"};
    app.require_subcommand(1);

    std::string config, out, method = "lp";

    auto *gen = app.add_subcommand("gen", "Generate the scenario (users, candidate grids) and write scenario.json");
    gen->add_option("-c,--config", config, "Config file (key = value)")->check(CLI::ExistingFile);
    gen->add_option("-o,--out", out, "Output directory (default: $UAVPLACE_OUT_DIR or ./uavplace_out)");

    std::optional<double> threshold;
    auto *solve = app.add_subcommand("solve", "Select a placement at one SINR threshold");
    solve->add_option("-c,--config", config, "Config file (key = value)")->check(CLI::ExistingFile);
    solve->add_option("-m,--method", method, "lp or brute")->check(CLI::IsMember({"lp", "brute"}));
    solve->add_option("-t,--threshold-db", threshold, "Override gamma_th_db");
    solve->add_option("-o,--out", out, "Output directory (default: $UAVPLACE_OUT_DIR or ./uavplace_out)");

    double from_db = -6.38, to_db = -10.0;
    std::size_t steps = 50, seeds = 0;
    std::uint64_t first_seed = 1;
    auto *sweep = app.add_subcommand("sweep", "Threshold sweep on one scenario, or a seed sweep with --seeds");
    sweep->add_option("-c,--config", config, "Config file (key = value)")->check(CLI::ExistingFile);
    sweep->add_option("-m,--method", method, "lp or brute")->check(CLI::IsMember({"lp", "brute"}));
    sweep->add_option("--from-db", from_db, "First threshold (dB)");
    sweep->add_option("--to-db", to_db, "Last threshold (dB)");
    sweep->add_option("--steps", steps, "Number of thresholds")->check(CLI::PositiveNumber);
    sweep->add_option("--seeds", seeds, "Vary the user drop over this many seeds at the config threshold");
    sweep->add_option("--first-seed", first_seed, "First seed of a seed sweep");
    sweep->add_option("-o,--out", out, "Output directory (default: $UAVPLACE_OUT_DIR or ./uavplace_out)");

    std::string run, format = "csv", what = "placement", output;
    auto *exp = app.add_subcommand("export", "Render a table from a run.json record");
    exp->add_option("-r,--run", run, "run.json written by solve or sweep")->required()->check(CLI::ExistingFile);
    exp->add_option("-f,--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
    exp->add_option("-w,--what", what, "placement, sinr, sweep or scatter")
        ->check(CLI::IsMember({"placement", "sinr", "sweep", "scatter"}));
    exp->add_option("-o,--output", output, "Output file (default: stdout)");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : 1;
    }

    try
    {
        if (*gen)
            return cmd_gen(config, out);
        if (*solve)
            return cmd_solve(config, method, threshold, out);
        if (*sweep)
            return cmd_sweep(config, method, from_db, to_db, steps, seeds, first_seed, out);
        if (*exp)
            return cmd_export(run, format, what, output);
    }
    catch (const std::exception &e)
    {
        std::cerr << "uavplace: " << e.what() << "\n";
        return 1;
    }
    return 1;
}
