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

#pragma once

#include "risense/io.hpp"
#include "risense/scenario.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace risense {

/// What the receiver concluded about one person.
struct TargetReport {
    std::size_t target_index = 0;
    double channel_offset_hz = 0.0; // which demux channel sensed this person
    double true_rate_bpm = 0.0;
    std::optional<double> estimated_rate_bpm;
    std::optional<double> abs_error_bpm;
    double band_power_ratio = 0.0;
    std::size_t peak_count = 0;
    /// Other-person breathing line relative to this person's own line in the
    /// channel envelope, dB; only for two-person switched runs.
    std::optional<double> crosstalk_db;
};

/// Paired board-present / board-absent comparison (compare_absent runs).
struct GainReport {
    double focus_vs_absent_db = 0.0; // illumination power gain at the chest
    double focus_vs_zeros_db = 0.0;  // same, against the unprogrammed board
    double band_power_ratio_focus = 0.0;
    double band_power_ratio_absent = 0.0;
    std::optional<double> absent_rate_bpm;
};

struct RunResult {
    Scenario scenario; // fully populated copy
    std::vector<TargetReport> targets;
    std::optional<GainReport> gain;

    BasebandSignal baseband; // primary scene, noise included
    std::vector<std::pair<std::string, RealSignal>> envelopes;
    std::vector<std::pair<std::string, Spectrogram>> spectrograms;

    double wall_s = 0.0; // not exported (reports stay byte-deterministic)
};

/// Synthesizes the scene, runs the receiver chain and fills the report
/// structures. Throws on invalid scenarios; never writes files.
RunResult run_experiment(const Scenario &scenario);

struct ManifestEntry {
    std::string path; // relative to the export directory
    std::uint64_t bytes = 0;
    std::uint32_t crc32 = 0;
};

/// Writes the selected artifact groups plus scenario.json, report.json,
/// report.txt and manifest.json into out_dir (created if needed). Every
/// byte written is a pure function of the scenario, so re-exporting the
/// same run yields identical files. Returns the manifest, which lists
/// every written file except manifest.json itself.
std::vector<ManifestEntry> export_results(const RunResult &result,
                                          const std::filesystem::path &out_dir);

} // namespace risense
