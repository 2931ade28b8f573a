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

#include "risense/fft.hpp"
#include "risense/fir.hpp"
#include "risense/geom.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace risense {

RealSignal extract_tone_envelope(const BasebandSignal &x, double tone_hz, double bandwidth_hz) {
    if (!(x.sample_rate_hz > 0.0))
        throw std::invalid_argument("extract_tone_envelope: sample rate must be positive");
    if (!(bandwidth_hz > 0.0))
        throw std::invalid_argument("extract_tone_envelope: bandwidth must be positive");
    if (std::abs(tone_hz) + bandwidth_hz / 2.0 >= x.sample_rate_hz / 2.0)
        throw std::invalid_argument("extract_tone_envelope: band does not fit below Nyquist");
    if (x.samples.empty())
        throw std::invalid_argument("extract_tone_envelope: empty input");

    // Mix the tone to DC, confine to the channel, take the magnitude.
    std::vector<std::complex<double>> mixed(x.samples.size());
    for (std::size_t i = 0; i < mixed.size(); ++i) {
        double ph = -2.0 * kPi * tone_hz * double(i) / x.sample_rate_hz;
        mixed[i] = x.samples[i] * std::polar(1.0, ph);
    }
    auto taps = design_lowpass(x.sample_rate_hz, bandwidth_hz / 2.0, bandwidth_hz / 2.0);
    auto filtered = filtfilt(taps, std::span<const std::complex<double>>(mixed));

    RealSignal out;
    out.sample_rate_hz = x.sample_rate_hz;
    out.samples.resize(filtered.size());
    for (std::size_t i = 0; i < filtered.size(); ++i)
        out.samples[i] = std::abs(filtered[i]);
    return out;
}

RealSignal decimate(const RealSignal &x, double target_hz) {
    if (!(x.sample_rate_hz > 0.0) || !(target_hz > 0.0))
        throw std::invalid_argument("decimate: rates must be positive");
    const double ratio = x.sample_rate_hz / target_hz;
    const auto factor = std::size_t(std::llround(ratio));
    if (factor == 0 || std::abs(ratio - double(factor)) > 1e-9 * ratio)
        throw std::invalid_argument("decimate: fs / target must be a positive integer, got " +
                                    std::to_string(ratio));
    if (factor == 1)
        return x;

    auto taps = design_lowpass(x.sample_rate_hz, 0.4 * target_hz, 0.2 * target_hz);
    auto filtered = filtfilt(taps, std::span<const double>(x.samples));

    RealSignal out;
    out.sample_rate_hz = x.sample_rate_hz / double(factor);
    out.samples.reserve((x.samples.size() + factor - 1) / factor);
    for (std::size_t i = 0; i < filtered.size(); i += factor)
        out.samples.push_back(filtered[i]);
    return out;
}

RealSignal lowpass(const RealSignal &x, double cutoff_hz) {
    if (!(x.sample_rate_hz > 0.0))
        throw std::invalid_argument("lowpass: sample rate must be positive");
    if (!(cutoff_hz > 0.0) || cutoff_hz >= x.sample_rate_hz / 2.0)
        throw std::invalid_argument("lowpass: cutoff outside (0, fs/2)");

    double transition = std::min(cutoff_hz, x.sample_rate_hz / 2.0 - cutoff_hz);
    auto taps = design_lowpass(x.sample_rate_hz, cutoff_hz, transition);

    RealSignal out;
    out.sample_rate_hz = x.sample_rate_hz;
    out.samples = filtfilt(taps, std::span<const double>(x.samples));
    return out;
}

Spectrogram stft(const RealSignal &x, std::size_t window_samples, std::size_t hop_samples) {
    if (window_samples < 2)
        throw std::invalid_argument("stft: window must span at least 2 samples");
    if (hop_samples == 0)
        throw std::invalid_argument("stft: hop must be at least 1 sample");
    if (x.samples.size() < window_samples)
        throw std::invalid_argument("stft: record shorter than one window");
    if (!(x.sample_rate_hz > 0.0))
        throw std::invalid_argument("stft: sample rate must be positive");

    std::vector<double> window(window_samples);
    for (std::size_t n = 0; n < window_samples; ++n)
        window[n] = 0.5 - 0.5 * std::cos(2.0 * kPi * double(n) / double(window_samples - 1));

    const std::size_t bins = window_samples / 2 + 1;
    Spectrogram sg;
    sg.bin_freqs_hz.resize(bins);
    for (std::size_t k = 0; k < bins; ++k)
        sg.bin_freqs_hz[k] = double(k) * x.sample_rate_hz / double(window_samples);

    std::vector<double> frame(window_samples);
    for (std::size_t start = 0; start + window_samples <= x.samples.size(); start += hop_samples) {
        for (std::size_t n = 0; n < window_samples; ++n)
            frame[n] = x.samples[start + n] * window[n];
        auto spec = fft_real(frame);
        for (std::size_t k = 0; k < bins; ++k)
            sg.values.push_back(std::abs(spec[k]));
        sg.frame_times_s.push_back((double(start) + double(window_samples - 1) / 2.0) / x.sample_rate_hz);
    }
    return sg;
}

std::vector<double> detect_peaks(const RealSignal &x, double min_spacing_s,
                                 double min_prominence_frac) {
    if (!(x.sample_rate_hz > 0.0))
        throw std::invalid_argument("detect_peaks: sample rate must be positive");
    if (min_spacing_s < 0.0)
        throw std::invalid_argument("detect_peaks: spacing must be non-negative");
    if (min_prominence_frac < 0.0 || min_prominence_frac > 1.0)
        throw std::invalid_argument("detect_peaks: prominence fraction outside [0, 1]");

    const auto &s = x.samples;
    const std::size_t n = s.size();
    if (n < 3)
        return {};

    auto [mn_it, mx_it] = std::minmax_element(s.begin(), s.end());
    const double range = *mx_it - *mn_it;
    if (range == 0.0)
        return {};
    const double min_prom = min_prominence_frac * range;

    // Local maxima; a flat top counts once, at its first sample.
    std::vector<std::size_t> cands;
    for (std::size_t i = 1; i + 1 < n;) {
        if (s[i] > s[i - 1]) {
            std::size_t j = i;
            while (j + 1 < n && s[j + 1] == s[i])
                ++j;
            if (j + 1 < n && s[j + 1] < s[i])
                cands.push_back(i);
            i = j + 1;
        } else {
            ++i;
        }
    }

    // Topographic prominence: descend on both sides until terrain rises
    // above the candidate; the higher of the two valley floors is the base.
    std::vector<std::pair<std::size_t, double>> prominent; // (index, height)
    for (std::size_t p : cands) {
        double left_min = s[p];
        for (std::size_t i = p; i-- > 0;) {
            if (s[i] > s[p])
                break;
            left_min = std::min(left_min, s[i]);
        }
        double right_min = s[p];
        for (std::size_t i = p + 1; i < n; ++i) {
            if (s[i] > s[p])
                break;
            right_min = std::min(right_min, s[i]);
        }
        double prom = s[p] - std::max(left_min, right_min);
        if (prom >= min_prom)
            prominent.emplace_back(p, s[p]);
    }

    // Enforce spacing, keeping the tallest peaks; equal heights keep the
    // earlier sample.
    std::stable_sort(prominent.begin(), prominent.end(),
                     [](const auto &a, const auto &b) { return a.second > b.second; });
    std::vector<std::size_t> accepted;
    for (const auto &[idx, height] : prominent) {
        bool clear = true;
        for (std::size_t a : accepted) {
            double dt = std::abs(double(idx) - double(a)) / x.sample_rate_hz;
            if (dt < min_spacing_s) {
                clear = false;
                break;
            }
        }
        if (clear)
            accepted.push_back(idx);
    }
    std::sort(accepted.begin(), accepted.end());

    std::vector<double> times(accepted.size());
    for (std::size_t i = 0; i < accepted.size(); ++i)
        times[i] = double(accepted[i]) / x.sample_rate_hz;
    return times;
}

double envelope_band_power_ratio(const RealSignal &x, const DspConfig &cfg) {
    const std::size_t n = x.samples.size();
    if (n < 2)
        return 0.0;
    double mean = std::accumulate(x.samples.begin(), x.samples.end(), 0.0) / double(n);
    std::vector<double> centered(n);
    for (std::size_t i = 0; i < n; ++i)
        centered[i] = x.samples[i] - mean;

    auto spec = fft_real(centered);
    double total = 0.0, band = 0.0;
    for (std::size_t k = 1; k < n; ++k) {
        double f = double(k) * x.sample_rate_hz / double(n);
        if (f > x.sample_rate_hz / 2.0)
            f = x.sample_rate_hz - f; // mirror of the negative-frequency half
        double p = std::norm(spec[k]);
        total += p;
        if (f >= cfg.band_low_hz && f <= cfg.band_high_hz)
            band += p;
    }
    return total > 0.0 ? band / total : 0.0;
}

namespace {

// Largest integer decimation factor that keeps the analysis rate at or
// above 8 Hz; peak walking on a few-hertz grid is cheap and the 1 Hz
// respiration band is far below the reduced Nyquist.
std::size_t analysis_decimation(double fs) {
    auto factor = std::size_t(std::floor(fs / 8.0));
    return std::max<std::size_t>(factor, 1);
}

} // namespace

std::optional<RateEstimate> estimate_respiration_rate(const RealSignal &x, const DspConfig &cfg) {
    if (!(x.sample_rate_hz > 0.0))
        throw std::invalid_argument("estimate_respiration_rate: sample rate must be positive");
    if (x.duration_s() < 15.0)
        throw std::invalid_argument("estimate_respiration_rate: need at least 15 s of envelope "
                                    "(3 cycles at the slowest plausible rate)");

    RateEstimate est;
    est.band_power_ratio = envelope_band_power_ratio(x, cfg);

    RealSignal work = x;
    const std::size_t factor = analysis_decimation(work.sample_rate_hz);
    if (factor > 1)
        work = decimate(work, work.sample_rate_hz / double(factor));

    auto taps = design_bandpass(work.sample_rate_hz, cfg.band_low_hz, cfg.band_high_hz, 0.15);
    RealSignal banded;
    banded.sample_rate_hz = work.sample_rate_hz;
    banded.samples = filtfilt(taps, std::span<const double>(work.samples));

    // A near-constant envelope leaves only rounding residue after the
    // band-pass; its ripples would otherwise still clear the relative
    // prominence bar. No swing, no breaths.
    double lo = banded.samples[0], hi = banded.samples[0], scale = 0.0;
    for (std::size_t i = 0; i < banded.samples.size(); ++i) {
        lo = std::min(lo, banded.samples[i]);
        hi = std::max(hi, banded.samples[i]);
        scale = std::max(scale, std::abs(work.samples[i]));
    }
    if (hi - lo <= 1e-9 * std::max(scale, 1e-300))
        return std::nullopt;

    est.peak_times_s = detect_peaks(banded, cfg.peak_min_spacing_s, cfg.peak_prominence);
    if (est.peak_times_s.size() < 2)
        return std::nullopt;

    double span = est.peak_times_s.back() - est.peak_times_s.front();
    if (span <= 0.0)
        return std::nullopt;
    est.rate_bpm = 60.0 * double(est.peak_times_s.size() - 1) / span;
    return est;
}

std::optional<double> spectral_rate_bpm(const RealSignal &x, const DspConfig &cfg) {
    const std::size_t n = x.samples.size();
    if (n < 16 || !(x.sample_rate_hz > 0.0))
        return std::nullopt;

    double mean = std::accumulate(x.samples.begin(), x.samples.end(), 0.0) / double(n);
    // Zero-pad 8x for a finer grid before the parabolic refinement.
    std::vector<double> padded(8 * n, 0.0);
    for (std::size_t i = 0; i < n; ++i)
        padded[i] = x.samples[i] - mean;
    auto spec = fft_real(padded);

    const double df = x.sample_rate_hz / double(padded.size());
    std::size_t best = 0;
    double best_mag = 0.0;
    for (std::size_t k = 1; k < padded.size() / 2; ++k) {
        double f = double(k) * df;
        if (f < cfg.band_low_hz || f > cfg.band_high_hz)
            continue;
        double m = std::abs(spec[k]);
        if (m > best_mag) {
            best_mag = m;
            best = k;
        }
    }
    if (best == 0 || best_mag == 0.0)
        return std::nullopt;

    double refined = double(best);
    if (best > 0 && best + 1 < padded.size() / 2) {
        double a = std::abs(spec[best - 1]), b = best_mag, c = std::abs(spec[best + 1]);
        double denom = a - 2.0 * b + c;
        if (std::abs(denom) > 1e-30)
            refined += 0.5 * (a - c) / denom;
    }
    return 60.0 * refined * df;
}

ChannelResult process_channel(const BasebandSignal &x, double tone_offset_hz, const DspConfig &cfg) {
    ChannelResult res;
    res.tone_offset_hz = tone_offset_hz;

    RealSignal env = extract_tone_envelope(x, tone_offset_hz, cfg.envelope_bandwidth_hz);
    if (cfg.decimate_to_hz > 0.0 && env.sample_rate_hz > cfg.decimate_to_hz)
        env = decimate(env, cfg.decimate_to_hz);
    env = lowpass(env, cfg.lowpass_cutoff_hz);

    res.envelope = std::move(env);
    res.estimate = estimate_respiration_rate(res.envelope, cfg);
    return res;
}

std::vector<ChannelResult> demux_channels(const BasebandSignal &x, const DspConfig &cfg) {
    if (cfg.channel_offsets_hz.empty())
        throw std::invalid_argument("demux_channels: no channel offsets configured");
    for (std::size_t i = 0; i < cfg.channel_offsets_hz.size(); ++i)
        for (std::size_t j = i + 1; j < cfg.channel_offsets_hz.size(); ++j)
            if (std::abs(cfg.channel_offsets_hz[i] - cfg.channel_offsets_hz[j]) <
                2.0 * cfg.envelope_bandwidth_hz)
                throw std::invalid_argument("demux_channels: channel offsets closer than twice the "
                                            "envelope bandwidth would overlap");

    std::vector<ChannelResult> out;
    out.reserve(cfg.channel_offsets_hz.size());
    for (double f : cfg.channel_offsets_hz)
        out.push_back(process_channel(x, f, cfg));
    return out;
}

double tone_amplitude(std::span<const double> x, double sample_rate_hz, double freq_hz) {
    if (x.size() < 2 || !(sample_rate_hz > 0.0))
        throw std::invalid_argument("tone_amplitude: need at least 2 samples and a positive rate");

    std::complex<double> acc{0.0, 0.0};
    double wsum = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        double w = 0.5 - 0.5 * std::cos(2.0 * kPi * double(i) / double(x.size() - 1));
        double ph = -2.0 * kPi * freq_hz * double(i) / sample_rate_hz;
        acc += x[i] * w * std::polar(1.0, ph);
        wsum += w;
    }
    return 2.0 * std::abs(acc) / wsum;
}

} // namespace risense
