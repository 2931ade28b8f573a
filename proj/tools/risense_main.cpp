// SPDX-License-Identifier: Apache-2.0
//
// risense - programmable-surface respiration sensing simulator
// Copyright (C) 2026 the risense authors
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
//
// Command line front end:
//   risense simulate --scenario <file> --out <dir> [--seed <n>]
//   risense preset <fig7|fig4> --out <dir> [--seed <n>]
//   risense validate --scenario <file>
//
// Exit code 0 on success; on failure the message names the stage that
// failed ([load], [run] or [export]).

#include "risense/runner.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <optional>
#include <string>

namespace {

using namespace risense;

void print_summary(const RunResult &res, const std::vector<ManifestEntry> &manifest,
                   const std::string &out_dir) {
    std::printf("scenario: %s (seed %llu)\n", res.scenario.name.c_str(),
                static_cast<unsigned long long>(res.scenario.seed));
    for (const auto &tr : res.targets) {
        if (tr.estimated_rate_bpm)
            std::printf("target %zu: true %.2f bpm, estimated %.2f bpm (|err| %.2f), channel %.0f Hz%s\n",
                        tr.target_index, tr.true_rate_bpm, *tr.estimated_rate_bpm,
                        *tr.abs_error_bpm, tr.channel_offset_hz,
                        tr.crosstalk_db ? (", crosstalk " + std::to_string(*tr.crosstalk_db) + " dB").c_str()
                                        : "");
        else
            std::printf("target %zu: true %.2f bpm, no estimate (fewer than two breaths found)\n",
                        tr.target_index, tr.true_rate_bpm);
    }
    if (res.gain) {
        std::printf("focusing gain at chest: %.2f dB vs absent, %.2f dB vs unprogrammed board\n",
                    res.gain->focus_vs_absent_db, res.gain->focus_vs_zeros_db);
        std::printf("band power ratio: %.4f focused vs %.4f absent\n",
                    res.gain->band_power_ratio_focus, res.gain->band_power_ratio_absent);
    }
    std::printf("wrote %zu files to %s (%.2f s compute)\n", manifest.size() + 1, out_dir.c_str(),
                res.wall_s);
}

int run_and_export(const Scenario &scenario, const std::string &out_dir) {
    RunResult res;
    try {
        res = run_experiment(scenario);
    } catch (const std::exception &e) {
        std::fprintf(stderr, "[run] %s\n", e.what());
        return 1;
    }
    std::vector<ManifestEntry> manifest;
    try {
        manifest = export_results(res, out_dir);
    } catch (const std::exception &e) {
        std::fprintf(stderr, "[export] %s\n", e.what());
        return 1;
    }
    print_summary(res, manifest, out_dir);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"programmable-surface respiration sensing simulator"};
    app.require_subcommand(1);

    std::string scenario_path, out_dir, preset_name;
    std::optional<std::uint64_t> seed;

    auto *simulate = app.add_subcommand("simulate", "run a scenario file and export artifacts");
    simulate->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    simulate->add_option("--out", out_dir, "output directory")->required();
    simulate->add_option("--seed", seed, "override the scenario noise seed");

    auto *preset = app.add_subcommand("preset", "run a canned scenario and export artifacts");
    preset->add_option("name", preset_name, "preset name (fig7 or fig4)")->required();
    preset->add_option("--out", out_dir, "output directory")->required();
    preset->add_option("--seed", seed, "override the preset noise seed");

    auto *validate = app.add_subcommand("validate", "parse and validate a scenario file");
    validate->add_option("--scenario", scenario_path, "scenario JSON file")->required();

    CLI11_PARSE(app, argc, argv);

    if (simulate->parsed()) {
        Scenario s;
        try {
            s = load_scenario(scenario_path);
        } catch (const std::exception &e) {
            std::fprintf(stderr, "[load] %s\n", e.what());
            return 1;
        }
        if (seed)
            s.seed = *seed;
        return run_and_export(s, out_dir);
    }

    if (preset->parsed()) {
        Scenario s;
        try {
            s = make_preset(preset_name);
        } catch (const std::exception &e) {
            std::fprintf(stderr, "[load] %s\n", e.what());
            return 1;
        }
        if (seed)
            s.seed = *seed;
        return run_and_export(s, out_dir);
    }

    // validate
    try {
        Scenario s = load_scenario(scenario_path);
        std::printf("scenario OK: %s (%zu targets)\n", s.name.c_str(), s.scene.targets.size());
        return 0;
    } catch (const std::exception &e) {
        std::fprintf(stderr, "[load] %s\n", e.what());
        return 1;
    }
}
