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

#include "risense/signal.hpp"

#include <optional>
#include <span>
#include <vector>

namespace risense {

/// Knobs of the receiver chain. The defaults implement the reference chain:
/// 200 Hz envelope bandwidth, decimation to 200 Hz, 1 Hz respiration
/// low-pass, 30 s / 1 s sliding spectra, and two demux channels at
/// 1455 / 545 Hz (the probe tone plus/minus the first switching harmonic).
struct DspConfig {
    double envelope_bandwidth_hz = 200.0;
    double decimate_to_hz = 200.0;
    double lowpass_cutoff_hz = 1.0;
    std::vector<double> channel_offsets_hz{1455.0, 545.0};
    double stft_window_s = 30.0;
    double stft_hop_s = 1.0;
    double peak_min_spacing_s = 2.0;
    double peak_prominence = 0.1; // fraction of the signal range
    double band_low_hz = 0.1;     // respiration band used by band_power_ratio
    double band_high_hz = 0.5;
};

/// Magnitude envelope of the narrowband content around tone_hz: the record
/// is mixed down by tone_hz, low-passed to bandwidth_hz / 2 with a
/// zero-phase FIR, and the magnitude is taken. Requires the band
/// [tone_hz +- bandwidth_hz / 2] to fit inside (-fs/2, fs/2).
RealSignal extract_tone_envelope(const BasebandSignal &x, double tone_hz, double bandwidth_hz);

/// Integer-factor decimation with a zero-phase anti-alias low-pass at
/// 0.4 * target (stop-band reached by 0.5 * target). Throws when the ratio
/// fs / target_hz is not an integer.
RealSignal decimate(const RealSignal &x, double target_hz);

/// Zero-phase FIR low-pass; passband gain 1, DC gain exactly 1.
RealSignal lowpass(const RealSignal &x, double cutoff_hz);

/// Sliding-window magnitude spectra with a Hann window; one-sided bins.
/// Frames start every hop_samples; the last partial frame is dropped.
Spectrogram stft(const RealSignal &x, std::size_t window_samples, std::size_t hop_samples);

/// Topographic-prominence peak picking.
///
/// Local maxima (plateaus count once, at their first sample) qualify when
/// their prominence reaches min_prominence_frac times the signal range;
/// survivors are thinned tallest-first so accepted peaks are at least
/// min_spacing_s apart, with ties resolved toward the earlier sample.
/// Returns peak times in seconds, ascending. A constant signal has no peaks.
std::vector<double> detect_peaks(const RealSignal &x, double min_spacing_s,
                                 double min_prominence_frac);

struct RateEstimate {
    double rate_bpm = 0.0;
    double band_power_ratio = 0.0;   // respiration-band fraction of AC power
    std::vector<double> peak_times_s; // breath instants used for the rate
};

/// Fraction of the record's AC power that falls inside the respiration band
/// [band_low_hz, band_high_hz]. The mean (DC) is excluded from numerator
/// and denominator; an envelope's baseline would otherwise swamp the metric.
double envelope_band_power_ratio(const RealSignal &x, const DspConfig &cfg = DspConfig{});

/// Breaths-per-minute from peak intervals: with n detected peaks spanning
/// [t_first, t_last], rate = 60 (n - 1) / (t_last - t_first). Internally
/// decimates to a low analysis rate, band-passes to the respiration band,
/// then runs detect_peaks. Returns nullopt when fewer than two breaths are
/// found. Requires at least 15 s of signal (3 cycles of the slowest
/// plausible rate); shorter records throw.
std::optional<RateEstimate> estimate_respiration_rate(const RealSignal &x,
                                                      const DspConfig &cfg = DspConfig{});

/// Independent spectral rate reading: the dominant DFT peak of the
/// de-meaned record inside the respiration band, refined by parabolic
/// interpolation. Used to sanity-check the interval-based estimate.
std::optional<double> spectral_rate_bpm(const RealSignal &x, const DspConfig &cfg = DspConfig{});

/// One demultiplexed receive channel and what was estimated from it.
struct ChannelResult {
    double tone_offset_hz = 0.0;
    RealSignal envelope; // decimated and respiration-low-passed
    std::optional<RateEstimate> estimate;
};

/// Full single-channel receiver chain: envelope, decimate, low-pass, rate.
ChannelResult process_channel(const BasebandSignal &x, double tone_offset_hz, const DspConfig &cfg);

/// Per-person demultiplexing: process_channel at every configured offset.
/// Offsets must be pairwise separated by at least 2x the envelope bandwidth
/// or the channels would overlap; violations throw.
std::vector<ChannelResult> demux_channels(const BasebandSignal &x, const DspConfig &cfg);

/// Amplitude of a sinusoid at freq_hz in a real record, via a Hann-windowed
/// projection (leakage floor around -60 dB, enough to read lines 30 dB
/// apart without bias from the stronger one).
double tone_amplitude(std::span<const double> x, double sample_rate_hz, double freq_hz);

} // namespace risense
