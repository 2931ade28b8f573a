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

#include "risense/scene.hpp"

#include <cmath>
#include <stdexcept>

namespace risense {

double BreathingTarget::reflectivity(double t) const {
    return baseline + mod_depth * std::sin(2.0 * kPi * rate_hz() * t + phase_rad);
}

double BreathingTarget::excursion(double t) const {
    return displacement_m * std::sin(2.0 * kPi * rate_hz() * t + phase_rad);
}

namespace {

[[noreturn]] void fail(const std::string &field, const std::string &why) {
    throw std::invalid_argument("scene." + field + ": " + why);
}

} // namespace

void Scene::validate() const {
    if (!(carrier_hz > 0.0))
        fail("carrier_hz", "must be positive");
    if (!(tone_offset_hz > 0.0))
        fail("tone_offset_hz", "must be positive");
    if (!(amplitude > 0.0))
        fail("amplitude", "must be positive");
    if (!(sample_rate_hz > 0.0))
        fail("sample_rate_hz", "must be positive");
    if (!(duration_s > 0.0))
        fail("duration_s", "must be positive");
    if (harmonic_order < 0 || harmonic_order > 50)
        fail("harmonic_order", "must lie in [0, 50]");
    if (snr_db && std::isnan(*snr_db))
        fail("snr_db", "is NaN");

    double max_abs_freq = tone_offset_hz;
    if (has_space_time_code()) {
        const auto &code = std::get<SpaceTimeCode>(drive);
        if (code.rows() != array.rows() || code.cols() != array.cols())
            fail("drive", "space-time code dimensions do not match the array");
        double span = double(harmonic_order) * code.harmonic_spacing_hz();
        max_abs_freq = std::max(tone_offset_hz + span, std::abs(tone_offset_hz - span));
    }
    if (has_static_pattern()) {
        const auto &pat = std::get<CodingPattern>(drive);
        if (pat.rows() != array.rows() || pat.cols() != array.cols())
            fail("drive", "coding pattern dimensions do not match the array");
    }
    // 10% headroom above Nyquist keeps the probe tones away from the fold.
    if (sample_rate_hz < 2.2 * max_abs_freq)
        fail("sample_rate_hz", "below 2.2x the highest synthesized tone (" +
                                   std::to_string(max_abs_freq) + " Hz); raise the rate or lower "
                                   "tone_offset_hz / harmonic_order");

    if (distance(tx_pos_m, rx_pos_m) < 1e-9)
        fail("rx_pos_m", "coincides with tx_pos_m");
    for (std::size_t i = 0; i < targets.size(); ++i) {
        const auto &tgt = targets[i];
        const std::string name = "targets[" + std::to_string(i) + "]";
        if (!(tgt.rate_bpm > 0.0) || tgt.rate_bpm >= 300.0)
            fail(name + ".rate_bpm", "must lie in (0, 300) breaths per minute");
        if (tgt.baseline < 0.0)
            fail(name + ".baseline", "must be non-negative");
        if (tgt.mod_depth < 0.0 || tgt.mod_depth > tgt.baseline)
            fail(name + ".mod_depth", "must lie in [0, baseline] so reflectivity stays non-negative");
        if (tgt.displacement_m < 0.0)
            fail(name + ".displacement_m", "must be non-negative");
        if (duration_s * tgt.rate_hz() < 3.0)
            fail("duration_s", "covers fewer than 3 breathing cycles of " + name);
        if (distance(tgt.position_m, tx_pos_m) < 1e-6 || distance(tgt.position_m, rx_pos_m) < 1e-6)
            fail(name + ".position_m", "coincides with a radio endpoint");
        if (distance(tgt.position_m, array.center()) < 1e-6)
            fail(name + ".position_m", "coincides with the board center");
    }
}

std::complex<double> path_gain(const Vec3 &a, const Vec3 &b, double freq_hz) {
    if (!(freq_hz > 0.0))
        throw std::invalid_argument("path_gain: frequency must be positive");
    double r = distance(a, b);
    if (r < 1e-9)
        throw std::invalid_argument("path_gain: endpoints coincide, free-space gain is undefined");
    double lambda = kSpeedOfLight / freq_hz;
    double ph = -2.0 * kPi * freq_hz * r / kSpeedOfLight;
    return std::polar(lambda / (4.0 * kPi * r), ph);
}

std::complex<double> ris_route_gain(const Scene &scene, const CodingPattern &pattern, const Vec3 &target) {
    const auto &arr = scene.array;
    if (pattern.rows() != arr.rows() || pattern.cols() != arr.cols())
        throw std::invalid_argument("ris_route_gain: pattern dimensions do not match the array");

    if (scene.route == RouteModel::FarField) {
        Vec3 inc = normalized(arr.center() - scene.tx_pos_m);
        Vec3 obs = normalized(target - arr.center());
        auto af = array_factor(arr, pattern, scene.carrier_hz, inc, obs, scene.profile);
        return path_gain(scene.tx_pos_m, arr.center(), scene.carrier_hz) * af *
               path_gain(arr.center(), target, scene.carrier_hz);
    }

    std::complex<double> acc{0.0, 0.0};
    for (std::size_t m = 0; m < arr.rows(); ++m) {
        for (std::size_t n = 0; n < arr.cols(); ++n) {
            Vec3 p = arr.element_position(m, n);
            acc += path_gain(scene.tx_pos_m, p, scene.carrier_hz) *
                   scene.profile.reflection(pattern.at(m, n)) * path_gain(p, target, scene.carrier_hz);
        }
    }
    return acc;
}

std::complex<double> ris_route_gain_harmonic(const Scene &scene, const SpaceTimeCode &code, int q,
                                             const Vec3 &target) {
    const auto &arr = scene.array;
    if (code.rows() != arr.rows() || code.cols() != arr.cols())
        throw std::invalid_argument("ris_route_gain_harmonic: code dimensions do not match the array");

    if (scene.route == RouteModel::FarField) {
        Vec3 inc = normalized(arr.center() - scene.tx_pos_m);
        Vec3 obs = normalized(target - arr.center());
        auto haf = harmonic_array_factor(arr, code, q, scene.carrier_hz, inc, obs, scene.profile);
        return path_gain(scene.tx_pos_m, arr.center(), scene.carrier_hz) * haf *
               path_gain(arr.center(), target, scene.carrier_hz);
    }

    std::complex<double> acc{0.0, 0.0};
    for (std::size_t m = 0; m < arr.rows(); ++m) {
        for (std::size_t n = 0; n < arr.cols(); ++n) {
            auto seq = code.realized_sequence(m, n, scene.profile);
            auto cq = harmonic_coefficients(seq, q, q).at(q);
            Vec3 p = arr.element_position(m, n);
            acc += path_gain(scene.tx_pos_m, p, scene.carrier_hz) * cq *
                   path_gain(p, target, scene.carrier_hz);
        }
    }
    return acc;
}

std::complex<double> illumination_gain(const Scene &scene, const std::optional<CodingPattern> &pattern,
                                       const Vec3 &probe) {
    auto field = path_gain(scene.tx_pos_m, probe, scene.carrier_hz);
    if (pattern)
        field += ris_route_gain(scene, *pattern, probe);
    return field;
}

BasebandSignal synthesize_received(const Scene &scene) {
    scene.validate();

    // Static route gain of every tone each target modulates. The per-sample
    // loop then only has to rotate phasors and scale by m_i(t).
    struct Tone {
        double freq_hz;
        std::complex<double> gain;
    };
    struct TargetTerms {
        const BreathingTarget *target;
        std::vector<Tone> tones;
    };

    std::vector<TargetTerms> terms;
    terms.reserve(scene.targets.size());
    for (const auto &tgt : scene.targets) {
        TargetTerms tt{&tgt, {}};
        if (scene.body_echo) {
            auto g = scene.amplitude * path_gain(scene.tx_pos_m, tgt.position_m, scene.carrier_hz) *
                     path_gain(tgt.position_m, scene.rx_pos_m, scene.carrier_hz);
            tt.tones.push_back({scene.tone_offset_hz, g});
        }
        if (scene.has_static_pattern()) {
            const auto &pat = std::get<CodingPattern>(scene.drive);
            auto g = scene.amplitude * ris_route_gain(scene, pat, tgt.position_m) *
                     path_gain(tgt.position_m, scene.rx_pos_m, scene.carrier_hz);
            tt.tones.push_back({scene.tone_offset_hz, g});
        } else if (scene.has_space_time_code()) {
            const auto &code = std::get<SpaceTimeCode>(scene.drive);
            const double df = code.harmonic_spacing_hz();
            for (int q = -scene.harmonic_order; q <= scene.harmonic_order; ++q) {
                auto g = scene.amplitude * ris_route_gain_harmonic(scene, code, q, tgt.position_m) *
                         path_gain(tgt.position_m, scene.rx_pos_m, scene.carrier_hz);
                tt.tones.push_back({scene.tone_offset_hz + double(q) * df, g});
            }
        }
        terms.push_back(std::move(tt));
    }

    std::complex<double> direct{0.0, 0.0};
    if (scene.direct_path)
        direct = scene.amplitude * path_gain(scene.tx_pos_m, scene.rx_pos_m, scene.carrier_hz);

    const auto n = std::size_t(std::llround(scene.duration_s * scene.sample_rate_hz));
    const double k = 2.0 * kPi * scene.carrier_hz / kSpeedOfLight;

    BasebandSignal out;
    out.sample_rate_hz = scene.sample_rate_hz;
    out.samples.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double t = double(i) / scene.sample_rate_hz;
        std::complex<double> acc{0.0, 0.0};
        for (const auto &tt : terms) {
            const double m = tt.target->reflectivity(t);
            // Chest excursion wobbles the round-trip phase of this target's
            // routes; the radial round trip (2x the excursion) bounds the
            // path change, which is what matters for envelope robustness.
            std::complex<double> wobble{1.0, 0.0};
            if (scene.phase_modulation)
                wobble = std::polar(1.0, 2.0 * k * tt.target->excursion(t));
            for (const auto &tone : tt.tones)
                acc += tone.gain * m * wobble * std::polar(1.0, 2.0 * kPi * tone.freq_hz * t);
        }
        if (scene.direct_path)
            acc += direct * std::polar(1.0, 2.0 * kPi * scene.tone_offset_hz * t);
        out.samples[i] = acc;
    }
    return out;
}

BasebandSignal add_noise_power(const BasebandSignal &x, double noise_power, std::uint64_t seed) {
    if (std::isnan(noise_power) || noise_power < 0.0)
        throw std::invalid_argument("add_noise_power: noise power must be non-negative");
    BasebandSignal out = x;
    if (noise_power == 0.0)
        return out;
    Rng rng(seed);
    const double scale = std::sqrt(noise_power);
    for (auto &s : out.samples)
        s += scale * rng.complex_gaussian();
    return out;
}

BasebandSignal add_awgn(const BasebandSignal &x, double snr_db, std::uint64_t seed) {
    if (std::isnan(snr_db))
        throw std::invalid_argument("add_awgn: SNR is NaN");
    if (std::isinf(snr_db) && snr_db > 0.0)
        return x;
    if (std::isinf(snr_db))
        throw std::invalid_argument("add_awgn: SNR of -inf requests infinite noise");
    double p = x.mean_power();
    if (p <= 0.0)
        throw std::invalid_argument("add_awgn: zero-power input, SNR reference undefined");
    return add_noise_power(x, p / std::pow(10.0, snr_db / 10.0), seed);
}

} // namespace risense
