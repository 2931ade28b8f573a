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

#include "risense/dsp.hpp"
#include "risense/scene.hpp"

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

namespace risense {

/// A complete, runnable experiment description: the physical scene, the
/// receiver configuration, the noise seed and the artifact selection.
struct Scenario {
    std::string name = "custom";
    std::uint64_t seed = 1;
    Scene scene;
    DspConfig dsp;

    /// Artifact groups to export: any of "baseband", "envelopes",
    /// "spectrograms", "plots". Reports and the manifest are always written.
    std::vector<std::string> outputs{"envelopes"};

    /// When set, the same scene is additionally run with the board removed,
    /// at the same absolute noise power, and the report carries the paired
    /// gain figures.
    bool compare_absent = false;
};

/// Parses a scenario from JSON text. Shorthand drive descriptions
/// ("focus_target_index", "two_beam") are expanded to explicit patterns or
/// schedules, defaults fill every omitted field, and the result is
/// validated. Errors carry the offending field path. A file containing only
/// {"preset": "fig7"} expands to that preset; alongside "preset" only
/// "seed" and "outputs" may be overridden.
Scenario scenario_from_json(const std::string &text);

/// Serializes the fully populated scenario (every default made explicit,
/// drives in explicit form). scenario_from_json is its exact inverse.
std::string scenario_to_json(const Scenario &s);

Scenario load_scenario(const std::filesystem::path &path);
void save_scenario(const Scenario &s, const std::filesystem::path &path);

/// Canned demonstration scenarios:
///   fig7: one breathing person, board focused on them, paired run against
///         the board-absent case (near-field route, 16x16 at 3.5 GHz).
///   fig4: two people at +-45 degrees, two-beam switching schedule at
///         455 Hz harmonic spacing, per-person demultiplexing.
Scenario make_preset(const std::string &name);
std::vector<std::string> preset_names();

} // namespace risense
