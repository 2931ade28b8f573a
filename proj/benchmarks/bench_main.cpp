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

#include "risense/dsp.hpp"
#include "risense/scenario.hpp"
#include "risense/scene.hpp"
#include "risense/stc.hpp"

#include <benchmark/benchmark.h>

#include <cmath>

using namespace risense;

namespace {

Scene demo_scene() {
    Scenario s = make_preset("fig7");
    return s.scene;
}

void BM_ArrayFactor16x16(benchmark::State &state) {
    Scene scene = demo_scene();
    const auto &pattern = std::get<CodingPattern>(scene.drive);
    Vec3 inc = normalized(scene.array.center() - scene.tx_pos_m);
    Vec3 obs = normalized(scene.targets[0].position_m - scene.array.center());
    for (auto _ : state)
        benchmark::DoNotOptimize(
            array_factor(scene.array, pattern, scene.carrier_hz, inc, obs, scene.profile));
}
BENCHMARK(BM_ArrayFactor16x16);

void BM_FocusSynthesis16x16(benchmark::State &state) {
    Scene scene = demo_scene();
    for (auto _ : state)
        benchmark::DoNotOptimize(synthesize_focus_pattern(
            scene.array, scene.carrier_hz, scene.tx_pos_m, scene.targets[0].position_m,
            scene.profile));
}
BENCHMARK(BM_FocusSynthesis16x16);

void BM_TwoBeamDesign(benchmark::State &state) {
    Scene scene = demo_scene();
    const double slot = 1.0 / (455.0 * 16.0);
    for (auto _ : state)
        benchmark::DoNotOptimize(
            design_two_beam_code(scene.array, scene.carrier_hz, 45.0, -45.0, 16, slot));
}
BENCHMARK(BM_TwoBeamDesign);

void BM_HarmonicCoefficients(benchmark::State &state) {
    std::vector<std::complex<double>> seq(16);
    for (std::size_t l = 0; l < seq.size(); ++l)
        seq[l] = l < 8 ? 1.0 : -1.0;
    for (auto _ : state)
        benchmark::DoNotOptimize(harmonic_coefficients(seq, -5, 5));
}
BENCHMARK(BM_HarmonicCoefficients);

void BM_SynthesizeOneSecond(benchmark::State &state) {
    Scene scene = demo_scene();
    scene.duration_s = 20.0; // shortest record the validators accept
    for (auto _ : state)
        benchmark::DoNotOptimize(synthesize_received(scene));
}
BENCHMARK(BM_SynthesizeOneSecond)->Unit(benchmark::kMillisecond);

void BM_EnvelopeChain(benchmark::State &state) {
    Scene scene = demo_scene();
    scene.duration_s = 20.0;
    BasebandSignal x = synthesize_received(scene);
    DspConfig cfg;
    for (auto _ : state)
        benchmark::DoNotOptimize(process_channel(x, scene.tone_offset_hz, cfg));
}
BENCHMARK(BM_EnvelopeChain)->Unit(benchmark::kMillisecond);

void BM_Stft(benchmark::State &state) {
    RealSignal x;
    x.sample_rate_hz = 200.0;
    x.samples.resize(200 * 60);
    for (std::size_t i = 0; i < x.samples.size(); ++i)
        x.samples[i] = std::sin(2.0 * kPi * 0.25 * double(i) / x.sample_rate_hz);
    for (auto _ : state)
        benchmark::DoNotOptimize(stft(x, 6000, 200));
}
BENCHMARK(BM_Stft)->Unit(benchmark::kMillisecond);

void BM_DetectPeaks(benchmark::State &state) {
    RealSignal x;
    x.sample_rate_hz = 10.0;
    x.samples.resize(600);
    for (std::size_t i = 0; i < x.samples.size(); ++i)
        x.samples[i] = std::sin(2.0 * kPi * 0.25 * double(i) / x.sample_rate_hz);
    for (auto _ : state)
        benchmark::DoNotOptimize(detect_peaks(x, 2.0, 0.1));
}
BENCHMARK(BM_DetectPeaks);

} // namespace

BENCHMARK_MAIN();
