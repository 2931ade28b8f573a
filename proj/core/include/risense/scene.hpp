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

#include "risense/rng.hpp"
#include "risense/signal.hpp"
#include "risense/stc.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace risense {

/// One breathing person, reduced to a point scatterer at chest height whose
/// reflectivity and position are modulated by respiration.
struct BreathingTarget {
    Vec3 position_m;              // rest position of the chest
    double rate_bpm = 15.0;       // breaths per minute (stored in the human unit)
    double phase_rad = 0.0;       // breathing phase at t = 0
    double baseline = 1.0;        // static reflectivity mu0
    double mod_depth = 0.2;       // reflectivity swing mu1
    double displacement_m = 0.005; // chest excursion amplitude

    double rate_hz() const { return rate_bpm / 60.0; }

    /// Reflectivity waveform mu0 + mu1 sin(2 pi f t + phi).
    double reflectivity(double t) const;

    /// Chest displacement along the line of sight at time t (meters).
    double excursion(double t) const;
};

/// How the RIS route tx -> board -> target is evaluated.
///   FarField: path gain to the board center times the array factor, the
///             plane-wave factorization (the default model).
///   NearField: exact per-element spherical path sum; required when targets
///              sit inside the board's Fraunhofer distance.
enum class RouteModel { FarField, NearField };

/// How the RIS is driven in a scene: not present at all, a static coding
/// pattern (single-person focusing), or a space-time code (multi-person).
using RisDrive = std::variant<std::monostate, CodingPattern, SpaceTimeCode>;

struct Scene {
    double carrier_hz = 3.5e9;
    double tone_offset_hz = 1000.0; // baseband offset of the probe tone
    double amplitude = 1.0;         // transmit amplitude A
    double sample_rate_hz = 10000.0;
    double duration_s = 40.0;

    Vec3 tx_pos_m{0.2, 0.15, 0.0};
    Vec3 rx_pos_m{0.2, -0.15, 0.0};

    RisArray array{16, 16, 0.5 * kSpeedOfLight / 3.5e9, Vec3{0, 0, 0}, Vec3{1, 0, 0}};
    MetaAtomProfile profile = MetaAtomProfile::ideal();
    RisDrive drive;                 // monostate = board absent

    std::vector<BreathingTarget> targets;

    RouteModel route = RouteModel::FarField;
    int harmonic_order = 5;         // synthesize harmonics |q| <= this (space-time drive)
    bool body_echo = true;          // direct tx -> chest -> rx bounce, present in every mode
    bool direct_path = false;       // static tx -> rx leakage tone
    bool phase_modulation = false;  // apply chest-excursion path-phase wobble

    std::optional<double> snr_db;   // additive noise level; empty = noiseless

    double wavelength_m() const { return kSpeedOfLight / carrier_hz; }
    bool has_static_pattern() const { return std::holds_alternative<CodingPattern>(drive); }
    bool has_space_time_code() const { return std::holds_alternative<SpaceTimeCode>(drive); }

    /// Throws std::invalid_argument naming the violated field when the scene
    /// is not simulatable (Nyquist headroom, degenerate geometry, dimension
    /// mismatches, non-positive durations and so on).
    void validate() const;
};

/// Free-space amplitude gain of one hop including propagation phase:
/// (lambda / 4 pi R) exp(-j 2 pi f R / c). Throws for coincident endpoints.
std::complex<double> path_gain(const Vec3 &a, const Vec3 &b, double freq_hz);

/// Complex field-amplitude factor at a probe point: the direct tx route plus
/// (when a pattern is given) the per-element board route. |A * result|^2 is
/// the illumination power used by the focusing-gain figure.
std::complex<double> illumination_gain(const Scene &scene, const std::optional<CodingPattern> &pattern,
                                       const Vec3 &probe);

/// Complex route gain tx -> board -> target for a static pattern under the
/// scene's route model.
std::complex<double> ris_route_gain(const Scene &scene, const CodingPattern &pattern, const Vec3 &target);

/// Same for harmonic q of a space-time code.
std::complex<double> ris_route_gain_harmonic(const Scene &scene, const SpaceTimeCode &code, int q,
                                             const Vec3 &target);

/// Renders the received complex baseband record for the scene, noiseless.
/// Terms synthesized per target i with modulation m_i(t):
///   - body echo (when enabled):  A m_i(t) PG(tx,chest) PG(chest,rx) e^{j 2 pi f0 t}
///   - static pattern:            A m_i(t) G_i e^{j 2 pi f0 t}
///   - space-time code:           A m_i(t) sum_{|q|<=Q} G_{i,q} e^{j 2 pi (f0 + q df) t}
/// plus, when enabled, the static direct tx -> rx tone. With
/// phase_modulation on, the chest excursion additionally wobbles each
/// route's phase by its round-trip path-length change.
BasebandSignal synthesize_received(const Scene &scene);

/// Adds circularly symmetric white Gaussian noise at the given SNR relative
/// to the mean power of x. Infinite SNR returns x unchanged; zero-power
/// input throws (the SNR reference is undefined).
BasebandSignal add_awgn(const BasebandSignal &x, double snr_db, std::uint64_t seed);

/// Adds noise of a fixed per-sample power instead of a relative level, for
/// comparisons that must hold the absolute noise floor constant across
/// scenes of different signal strength.
BasebandSignal add_noise_power(const BasebandSignal &x, double noise_power, std::uint64_t seed);

} // namespace risense
