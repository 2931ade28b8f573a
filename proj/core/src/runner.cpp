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

#include "risense/runner.hpp"

#include <nlohmann/json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>

namespace risense {

namespace {

using nlohmann::json;

bool wants(const Scenario &s, const char *group) {
    return std::find(s.outputs.begin(), s.outputs.end(), group) != s.outputs.end();
}

// Absolute per-sample noise power for a paired comparison, referenced to the
// weaker (board-absent) record so both variants share one noise floor.
double matched_noise_power(const Scene &scene, const BasebandSignal &absent_clean) {
    if (!scene.snr_db || std::isinf(*scene.snr_db))
        return 0.0;
    return absent_clean.mean_power() / std::pow(10.0, *scene.snr_db / 10.0);
}

std::optional<double> channel_crosstalk_db(const RealSignal &envelope, double own_rate_hz,
                                           double other_rate_hz) {
    if (envelope.samples.size() < 2)
        return std::nullopt;
    double mean = 0.0;
    for (double v : envelope.samples)
        mean += v;
    mean /= double(envelope.samples.size());
    std::vector<double> ac(envelope.samples.size());
    for (std::size_t i = 0; i < ac.size(); ++i)
        ac[i] = envelope.samples[i] - mean;

    double own = tone_amplitude(ac, envelope.sample_rate_hz, own_rate_hz);
    double other = tone_amplitude(ac, envelope.sample_rate_hz, other_rate_hz);
    if (own <= 0.0)
        return std::nullopt;
    return db20(other / own);
}

TargetReport make_target_report(std::size_t index, const BreathingTarget &target,
                                const ChannelResult &ch, const DspConfig &cfg) {
    TargetReport tr;
    tr.target_index = index;
    tr.channel_offset_hz = ch.tone_offset_hz;
    tr.true_rate_bpm = target.rate_bpm;
    tr.band_power_ratio = envelope_band_power_ratio(ch.envelope, cfg);
    if (ch.estimate) {
        tr.estimated_rate_bpm = ch.estimate->rate_bpm;
        tr.abs_error_bpm = std::abs(ch.estimate->rate_bpm - target.rate_bpm);
        tr.peak_count = ch.estimate->peak_times_s.size();
    }
    return tr;
}

} // namespace

RunResult run_experiment(const Scenario &scenario) {
    const auto t0 = std::chrono::steady_clock::now();

    RunResult res;
    res.scenario = scenario;
    const Scene &scene = res.scenario.scene;
    const DspConfig &cfg = res.scenario.dsp;
    scene.validate();

    BasebandSignal clean = synthesize_received(scene);

    if (res.scenario.compare_absent) {
        if (!scene.has_static_pattern())
            throw std::invalid_argument("run_experiment: compare_absent needs a static-pattern "
                                        "drive (the gain figures compare focused vs absent)");
        if (scene.targets.empty())
            throw std::invalid_argument("run_experiment: compare_absent needs at least one target");

        Scene absent_scene = scene;
        absent_scene.drive = std::monostate{};
        BasebandSignal absent_clean = synthesize_received(absent_scene);

        // One absolute noise floor for both variants, and the same seed, so
        // the only difference between the records is the board.
        const double npow = matched_noise_power(scene, absent_clean);
        res.baseband = add_noise_power(clean, npow, res.scenario.seed);
        BasebandSignal absent_noisy = add_noise_power(absent_clean, npow, res.scenario.seed);

        ChannelResult focus_ch = process_channel(res.baseband, scene.tone_offset_hz, cfg);
        ChannelResult absent_ch = process_channel(absent_noisy, scene.tone_offset_hz, cfg);

        const auto &pattern = std::get<CodingPattern>(scene.drive);
        const Vec3 &chest = scene.targets[0].position_m;
        auto zeros = CodingPattern::all_zeros(scene.array.rows(), scene.array.cols());

        double f_focus = std::abs(illumination_gain(scene, pattern, chest));
        double f_absent = std::abs(illumination_gain(scene, std::nullopt, chest));
        double f_zeros = std::abs(illumination_gain(scene, zeros, chest));

        GainReport gain;
        gain.focus_vs_absent_db = db20(f_focus / f_absent);
        gain.focus_vs_zeros_db = db20(f_focus / f_zeros);
        gain.band_power_ratio_focus = envelope_band_power_ratio(focus_ch.envelope, cfg);
        gain.band_power_ratio_absent = envelope_band_power_ratio(absent_ch.envelope, cfg);
        if (absent_ch.estimate)
            gain.absent_rate_bpm = absent_ch.estimate->rate_bpm;
        res.gain = gain;

        res.targets.push_back(make_target_report(0, scene.targets[0], focus_ch, cfg));
        res.envelopes.emplace_back("envelope_focus", std::move(focus_ch.envelope));
        res.envelopes.emplace_back("envelope_absent", std::move(absent_ch.envelope));
    } else {
        res.baseband = scene.snr_db ? add_awgn(clean, *scene.snr_db, res.scenario.seed)
                                    : std::move(clean);

        if (scene.has_space_time_code()) {
            auto channels = demux_channels(res.baseband, cfg);
            // Channel i senses person i: the preset and config conventions
            // keep channel_offsets_hz ordered like the target list.
            for (std::size_t i = 0; i < channels.size(); ++i) {
                if (i < scene.targets.size()) {
                    auto tr = make_target_report(i, scene.targets[i], channels[i], cfg);
                    if (scene.targets.size() == 2 && channels.size() >= 2) {
                        std::size_t other = 1 - i;
                        tr.crosstalk_db =
                            channel_crosstalk_db(channels[i].envelope, scene.targets[i].rate_hz(),
                                                 scene.targets[other].rate_hz());
                    }
                    res.targets.push_back(std::move(tr));
                }
                res.envelopes.emplace_back("envelope_ch" + std::to_string(i + 1),
                                           std::move(channels[i].envelope));
            }
        } else {
            // Static pattern or bare room: a single channel at the probe
            // tone, which senses the (first) person.
            ChannelResult ch = process_channel(res.baseband, scene.tone_offset_hz, cfg);
            if (!scene.targets.empty())
                res.targets.push_back(make_target_report(0, scene.targets[0], ch, cfg));
            res.envelopes.emplace_back("envelope", std::move(ch.envelope));
        }
    }

    if (wants(res.scenario, "spectrograms")) {
        for (const auto &[name, env] : res.envelopes) {
            const auto window = std::size_t(std::llround(cfg.stft_window_s * env.sample_rate_hz));
            const auto hop = std::size_t(std::llround(cfg.stft_hop_s * env.sample_rate_hz));
            if (window >= 2 && hop >= 1 && window <= env.samples.size()) {
                std::string sg_name = "spectrogram" + name.substr(std::string("envelope").size());
                res.spectrograms.emplace_back(sg_name, stft(env, window, hop));
            }
        }
    }

    res.wall_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return res;
}

namespace {

json target_to_json(const TargetReport &tr) {
    json j;
    j["target_index"] = tr.target_index;
    j["channel_offset_hz"] = tr.channel_offset_hz;
    j["true_rate_bpm"] = tr.true_rate_bpm;
    j["estimated_rate_bpm"] = tr.estimated_rate_bpm ? json(*tr.estimated_rate_bpm) : json(nullptr);
    j["abs_error_bpm"] = tr.abs_error_bpm ? json(*tr.abs_error_bpm) : json(nullptr);
    j["band_power_ratio"] = tr.band_power_ratio;
    j["peak_count"] = tr.peak_count;
    j["crosstalk_db"] = tr.crosstalk_db ? json(*tr.crosstalk_db) : json(nullptr);
    return j;
}

std::string report_text(const RunResult &res) {
    std::string out;
    out += "run: " + res.scenario.name + " (seed " + std::to_string(res.scenario.seed) + ")\n";
    for (const auto &tr : res.targets) {
        out += "target " + std::to_string(tr.target_index) + ": true " +
               format_double(tr.true_rate_bpm) + " bpm, estimated ";
        out += tr.estimated_rate_bpm ? format_double(*tr.estimated_rate_bpm) + " bpm" : "none";
        if (tr.abs_error_bpm)
            out += " (error " + format_double(*tr.abs_error_bpm) + " bpm)";
        out += ", channel " + format_double(tr.channel_offset_hz) + " Hz";
        out += ", peaks " + std::to_string(tr.peak_count);
        out += ", band power ratio " + format_double(tr.band_power_ratio);
        if (tr.crosstalk_db)
            out += ", crosstalk " + format_double(*tr.crosstalk_db) + " dB";
        out += "\n";
    }
    if (res.gain) {
        out += "gain at chest: focus vs absent " + format_double(res.gain->focus_vs_absent_db) +
               " dB, focus vs unprogrammed " + format_double(res.gain->focus_vs_zeros_db) + " dB\n";
        out += "band power ratio: focus " + format_double(res.gain->band_power_ratio_focus) +
               ", absent " + format_double(res.gain->band_power_ratio_absent) + "\n";
    }
    return out;
}

void write_text(const std::filesystem::path &path, const std::string &text) {
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open for writing: " + path.string());
    f << text;
    if (!f.flush())
        throw std::runtime_error("write failed: " + path.string());
}

} // namespace

std::vector<ManifestEntry> export_results(const RunResult &res, const std::filesystem::path &out_dir) {
    std::filesystem::create_directories(out_dir);
    std::vector<std::string> files;

    save_scenario(res.scenario, out_dir / "scenario.json");
    files.push_back("scenario.json");

    if (wants(res.scenario, "baseband")) {
        write_csv(out_dir / "baseband.csv", res.baseband);
        files.push_back("baseband.csv");
    }
    if (wants(res.scenario, "envelopes")) {
        for (const auto &[name, env] : res.envelopes) {
            write_csv(out_dir / (name + ".csv"), env, "envelope");
            files.push_back(name + ".csv");
        }
    }
    if (wants(res.scenario, "spectrograms")) {
        for (const auto &[name, sg] : res.spectrograms) {
            write_csv(out_dir / (name + ".csv"), sg);
            files.push_back(name + ".csv");
        }
    }
    if (wants(res.scenario, "plots")) {
        for (const auto &[name, env] : res.envelopes) {
            write_svg(out_dir / (name + ".svg"), env, name);
            files.push_back(name + ".svg");
        }
        for (const auto &[name, sg] : res.spectrograms) {
            write_svg(out_dir / (name + ".svg"), sg, name);
            files.push_back(name + ".svg");
        }
    }

    json report;
    report["scenario"] = json::parse(scenario_to_json(res.scenario));
    json targets = json::array();
    for (const auto &tr : res.targets)
        targets.push_back(target_to_json(tr));
    report["targets"] = targets;
    if (res.gain) {
        json g;
        g["focus_vs_absent_db"] = res.gain->focus_vs_absent_db;
        g["focus_vs_zeros_db"] = res.gain->focus_vs_zeros_db;
        g["band_power_ratio_focus"] = res.gain->band_power_ratio_focus;
        g["band_power_ratio_absent"] = res.gain->band_power_ratio_absent;
        g["absent_rate_bpm"] = res.gain->absent_rate_bpm ? json(*res.gain->absent_rate_bpm)
                                                         : json(nullptr);
        report["gain"] = g;
    } else {
        report["gain"] = nullptr;
    }
    write_text(out_dir / "report.json", report.dump(2) + "\n");
    files.push_back("report.json");

    write_text(out_dir / "report.txt", report_text(res));
    files.push_back("report.txt");

    std::vector<ManifestEntry> manifest;
    json mj = json::array();
    for (const auto &f : files) {
        ManifestEntry e;
        e.path = f;
        e.bytes = std::uint64_t(std::filesystem::file_size(out_dir / f));
        e.crc32 = crc32_file(out_dir / f);
        char hex[16];
        std::snprintf(hex, sizeof hex, "%08x", e.crc32);
        mj.push_back({{"path", e.path}, {"bytes", e.bytes}, {"crc32", std::string(hex)}});
        manifest.push_back(std::move(e));
    }
    write_text(out_dir / "manifest.json", json{{"files", mj}}.dump(2) + "\n");
    return manifest;
}

} // namespace risense
