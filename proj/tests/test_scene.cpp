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

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

using namespace risense;
using Catch::Matchers::ContainsSubstring;

namespace {

/// Amplitude of the complex exponential at `freq_hz` in x, rectangular
/// window. Exact for tones with an integer number of cycles in the record.
std::complex<double> tone_projection(const BasebandSignal &x, double freq_hz) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t i = 0; i < x.samples.size(); ++i) {
        double t = double(i) / x.sample_rate_hz;
        acc += x.samples[i] * std::polar(1.0, -2.0 * kPi * freq_hz * t);
    }
    return acc / double(x.samples.size());
}

Scene default_scene_with_target() {
    Scene scene;
    scene.targets.push_back({Vec3{2.0, 1.0, 0.0}, 15.0, 0.0, 1.0, 0.2, 0.005});
    return scene;
}

} // namespace

TEST_CASE("free-space hop gain", "[scene]") {
    // One-meter wavelength makes the values hand-checkable: at R = 2 the
    // propagation phase is a whole number of turns, at R = 0.5 half a turn.
    const double f = kSpeedOfLight; // lambda = 1 m
    auto g2 = path_gain(Vec3{0, 0, 0}, Vec3{2, 0, 0}, f);
    CHECK(std::abs(g2) == Catch::Approx(0.039788735772973836).margin(1e-15)); // 1 / (8 pi)
    CHECK(g2.real() == Catch::Approx(0.039788735772973836).margin(1e-15));
    CHECK(std::abs(g2.imag()) < 1e-15);

    auto gh = path_gain(Vec3{0, 0, 0}, Vec3{0.5, 0, 0}, f);
    CHECK(gh.real() == Catch::Approx(-0.15915494309189535).margin(1e-15)); // -1 / (2 pi)
    CHECK(std::abs(gh.imag()) < 1e-15);

    // Reciprocity is exact, not approximate.
    auto fwd = path_gain(Vec3{0.3, -1.2, 0.4}, Vec3{2.0, 0.7, -0.1}, 3.5e9);
    auto rev = path_gain(Vec3{2.0, 0.7, -0.1}, Vec3{0.3, -1.2, 0.4}, 3.5e9);
    CHECK(fwd.real() == rev.real());
    CHECK(fwd.imag() == rev.imag());

    CHECK_THROWS_AS(path_gain(Vec3{1, 1, 1}, Vec3{1, 1, 1}, 3.5e9), std::invalid_argument);
    CHECK_THROWS_AS(path_gain(Vec3{0, 0, 0}, Vec3{1, 0, 0}, 0.0), std::invalid_argument);
}

TEST_CASE("breathing waveforms", "[scene]") {
    BreathingTarget tgt{Vec3{2, 0, 0}, 15.0, kPi / 2.0, 1.0, 0.2, 0.005};
    CHECK(tgt.rate_hz() == Catch::Approx(0.25));
    CHECK(tgt.reflectivity(0.0) == Catch::Approx(1.2));
    CHECK(tgt.excursion(0.0) == Catch::Approx(0.005));

    // One breath at 15 per minute takes 4 seconds.
    tgt.phase_rad = 0.7;
    for (double t : {0.0, 0.9, 2.3})
        CHECK(tgt.reflectivity(t) == Catch::Approx(tgt.reflectivity(t + 4.0)).margin(1e-12));
    CHECK(tgt.reflectivity(2.0) <= 1.2);
    CHECK(tgt.reflectivity(2.0) >= 0.8);
}

TEST_CASE("scene validation names the offending field", "[scene]") {
    CHECK_NOTHROW(default_scene_with_target().validate());

    {
        Scene s = default_scene_with_target();
        s.sample_rate_hz = 1500.0; // tone at 1 kHz needs 2.2 kHz
        REQUIRE_THROWS_WITH(s.validate(), ContainsSubstring("sample_rate_hz"));
    }
    {
        Scene s = default_scene_with_target();
        s.duration_s = 5.0; // 15 bpm -> 1.25 cycles
        REQUIRE_THROWS_WITH(s.validate(), ContainsSubstring("duration_s"));
    }
    {
        Scene s = default_scene_with_target();
        s.targets[0].rate_bpm = 0.0;
        REQUIRE_THROWS_WITH(s.validate(), ContainsSubstring("targets[0].rate_bpm"));
    }
    {
        Scene s = default_scene_with_target();
        s.targets[0].rate_bpm = 300.0;
        REQUIRE_THROWS_WITH(s.validate(), ContainsSubstring("rate_bpm"));
    }
    {
        Scene s = default_scene_with_target();
        s.targets[0].mod_depth = 1.5; // deeper than the baseline: negative reflectivity
        REQUIRE_THROWS_WITH(s.validate(), ContainsSubstring("mod_depth"));
    }
    {
        Scene s = default_scene_with_target();
        s.drive = CodingPattern(8, 8); // board is 16 x 16
        REQUIRE_THROWS_WITH(s.validate(), ContainsSubstring("drive"));
    }
    {
        Scene s = default_scene_with_target();
        s.rx_pos_m = s.tx_pos_m;
        REQUIRE_THROWS_WITH(s.validate(), ContainsSubstring("rx_pos_m"));
    }
    {
        // Space-time harmonics widen the occupied band; the Nyquist check
        // must account for the outermost line, not just the probe tone.
        Scene s = default_scene_with_target();
        s.drive = SpaceTimeCode(16, 16, 16, 1.0 / (455.0 * 16.0));
        s.harmonic_order = 5;
        s.sample_rate_hz = 6000.0; // outermost line at 1000 + 5 * 455 = 3275 Hz
        REQUIRE_THROWS_WITH(s.validate(), ContainsSubstring("sample_rate_hz"));
        s.sample_rate_hz = 10000.0;
        CHECK_NOTHROW(s.validate());
    }
}

TEST_CASE("far-field route converges to the exact sum at long range", "[scene]") {
    // Both hops far outside the Fraunhofer distance (about 22 m for this
    // board): the plane-wave factorization and the exact per-element sum
    // must agree. The unprogrammed pattern keeps the sum coherent, so the
    // comparison is numerically stable.
    Scene scene;
    scene.tx_pos_m = Vec3{100.0, 0.0, 0.0};
    Vec3 far_target{150.0, 0.0, 0.0};

    CodingPattern pat = CodingPattern::all_zeros(16, 16);

    scene.route = RouteModel::FarField;
    auto far = ris_route_gain(scene, pat, far_target);
    scene.route = RouteModel::NearField;
    auto near = ris_route_gain(scene, pat, far_target);

    CHECK(std::abs(far) == Catch::Approx(std::abs(near)).epsilon(0.05));
    CHECK(std::abs(wrap_phase(std::arg(far) - std::arg(near))) < 0.2);

    CodingPattern wrong(8, 8);
    CHECK_THROWS_AS(ris_route_gain(scene, wrong, far_target), std::invalid_argument);
}

TEST_CASE("focused board illuminates its target", "[scene]") {
    Scene scene;
    scene.route = RouteModel::NearField;
    // Close-in feed, as in the single-person preset: the unprogrammed board
    // acts as a flat mirror, and only a nearby feed lets the focused route
    // clear that reflection by a full order of magnitude.
    scene.tx_pos_m = {0.10, 0.15, 0.0};
    Vec3 chest{2.2 * std::cos(deg2rad(40.0)), 2.2 * std::sin(deg2rad(40.0)), 0.0};

    auto focus = synthesize_focus_pattern(scene.array, scene.carrier_hz, scene.tx_pos_m, chest);

    // Power at the chest with the focused board versus board absent.
    double with_board = std::norm(illumination_gain(scene, focus, chest));
    double absent = std::norm(illumination_gain(scene, std::nullopt, chest));
    CHECK(db10(with_board / absent) > 10.0);

    // And versus the unprogrammed (all-zeros) board.
    double zeros = std::norm(illumination_gain(scene, CodingPattern::all_zeros(16, 16), chest));
    CHECK(db10(with_board / zeros) > 10.0);

    // The focused route itself dwarfs the unprogrammed route.
    double focused_route = std::abs(ris_route_gain(scene, focus, chest));
    double zeros_route = std::abs(ris_route_gain(scene, CodingPattern::all_zeros(16, 16), chest));
    CHECK(focused_route > 3.0 * zeros_route);
}

TEST_CASE("synthesized record is an exact tone stack", "[scene]") {
    // Body echo only, one target: x(t) = g m(t) e^{j 2 pi f0 t} with
    // m(t) = 1 + 0.2 sin(2 pi 0.25 t). Over 20 s every involved tone spans a
    // whole number of cycles, so rectangular projections separate them
    // exactly: the carrier line carries |g|, each sideband 0.1 |g|.
    Scene scene = default_scene_with_target();
    scene.sample_rate_hz = 4000.0;
    scene.duration_s = 20.0;

    auto x = synthesize_received(scene);
    REQUIRE(x.samples.size() == 80000);
    CHECK(x.sample_rate_hz == Catch::Approx(4000.0));

    auto g = path_gain(scene.tx_pos_m, scene.targets[0].position_m, scene.carrier_hz) *
             path_gain(scene.targets[0].position_m, scene.rx_pos_m, scene.carrier_hz);

    CHECK(std::abs(tone_projection(x, 1000.0)) == Catch::Approx(std::abs(g)).epsilon(1e-9));
    CHECK(std::abs(tone_projection(x, 1000.25)) == Catch::Approx(0.1 * std::abs(g)).epsilon(1e-9));
    CHECK(std::abs(tone_projection(x, 999.75)) == Catch::Approx(0.1 * std::abs(g)).epsilon(1e-9));
    CHECK(std::abs(tone_projection(x, 700.0)) < 1e-12);

    // Repeat synthesis is bit-identical (no hidden randomness).
    auto y = synthesize_received(scene);
    REQUIRE(y.samples.size() == x.samples.size());
    bool identical = true;
    for (std::size_t i = 0; i < x.samples.size(); ++i)
        identical = identical && x.samples[i] == y.samples[i];
    CHECK(identical);
}

TEST_CASE("static pattern factors out of the envelope", "[scene]") {
    // With a single probe tone and no phase wobble, |x(t)| = |sum of route
    // gains| * m(t) exactly, so the envelope-to-modulation ratio is constant.
    Scene scene = default_scene_with_target();
    scene.sample_rate_hz = 4000.0;
    scene.duration_s = 20.0;
    scene.targets[0].position_m = Vec3{2.2 * std::cos(deg2rad(40.0)), 2.2 * std::sin(deg2rad(40.0)), 0.0};
    scene.route = RouteModel::NearField;
    scene.drive = synthesize_focus_pattern(scene.array, scene.carrier_hz, scene.tx_pos_m,
                                           scene.targets[0].position_m);

    auto x = synthesize_received(scene);
    const auto &tgt = scene.targets[0];
    double ref = std::abs(x.samples[0]) / tgt.reflectivity(0.0);
    for (std::size_t i = 0; i < x.samples.size(); i += 997) {
        double t = double(i) / x.sample_rate_hz;
        CHECK(std::abs(x.samples[i]) / tgt.reflectivity(t) == Catch::Approx(ref).epsilon(1e-9));
    }

    // Turning on the phase wobble changes the samples but not the envelope
    // (the wobble is unit-modulus and common to the target's single tone).
    scene.phase_modulation = true;
    auto xp = synthesize_received(scene);
    CHECK(std::abs(xp.samples[1234]) == Catch::Approx(std::abs(x.samples[1234])).epsilon(1e-12));
    CHECK(xp.samples[1234] != x.samples[1234]);
}

TEST_CASE("space-time drive moves energy onto harmonic lines", "[scene]") {
    Scene scene;
    scene.body_echo = false; // isolate the board route
    scene.sample_rate_hz = 6000.0;
    scene.duration_s = 20.0;
    scene.harmonic_order = 1;
    scene.targets.push_back(
        {Vec3{2.0 * std::cos(deg2rad(45.0)), 2.0 * std::sin(deg2rad(45.0)), 0.0}, 12.0, 0.0, 1.0, 0.2, 0.005});

    scene.drive = design_two_beam_code(scene.array, scene.carrier_hz, 45.0, -45.0, 16,
                                       1.0 / (455.0 * 16.0));
    auto x = synthesize_received(scene);

    // The balanced schedule nulls the q = 0 line, so with the body echo off
    // there is nothing at the probe tone itself; the first harmonics carry
    // the beams. 455 Hz * 20 s and 1000 Hz * 20 s are integers, so the
    // projections are leakage-free.
    double at_probe = std::abs(tone_projection(x, 1000.0));
    double upper = std::abs(tone_projection(x, 1455.0));
    double lower = std::abs(tone_projection(x, 545.0));
    CHECK(upper > 50.0 * at_probe);
    CHECK(lower > 50.0 * at_probe);
    CHECK(upper > 0.0);
}

TEST_CASE("noise injection", "[scene]") {
    Scene scene = default_scene_with_target();
    scene.sample_rate_hz = 4000.0;
    scene.duration_s = 25.0;
    auto x = synthesize_received(scene);

    SECTION("awgn hits the requested snr") {
        auto y = add_awgn(x, 10.0, 42);
        REQUIRE(y.samples.size() == x.samples.size());
        double noise_power = 0.0;
        for (std::size_t i = 0; i < x.samples.size(); ++i)
            noise_power += std::norm(y.samples[i] - x.samples[i]);
        noise_power /= double(x.samples.size());
        CHECK(noise_power == Catch::Approx(x.mean_power() / 10.0).epsilon(0.05));
    }

    SECTION("seeding is reproducible") {
        auto a = add_awgn(x, 10.0, 7);
        auto b = add_awgn(x, 10.0, 7);
        auto c = add_awgn(x, 10.0, 8);
        bool same = true, differs = false;
        for (std::size_t i = 0; i < x.samples.size(); ++i) {
            same = same && a.samples[i] == b.samples[i];
            differs = differs || a.samples[i] != c.samples[i];
        }
        CHECK(same);
        CHECK(differs);
    }

    SECTION("edge levels") {
        auto clean = add_awgn(x, std::numeric_limits<double>::infinity(), 1);
        bool same = true;
        for (std::size_t i = 0; i < x.samples.size(); ++i)
            same = same && clean.samples[i] == x.samples[i];
        CHECK(same);

        CHECK_THROWS_AS(add_awgn(x, -std::numeric_limits<double>::infinity(), 1), std::invalid_argument);
        CHECK_THROWS_AS(add_awgn(x, std::numeric_limits<double>::quiet_NaN(), 1), std::invalid_argument);

        BasebandSignal silent;
        silent.sample_rate_hz = 4000.0;
        silent.samples.assign(100, {0.0, 0.0});
        CHECK_THROWS_AS(add_awgn(silent, 10.0, 1), std::invalid_argument);
    }

    SECTION("absolute noise floor") {
        auto y = add_noise_power(x, 2.0, 11);
        double noise_power = 0.0;
        for (std::size_t i = 0; i < x.samples.size(); ++i)
            noise_power += std::norm(y.samples[i] - x.samples[i]);
        noise_power /= double(x.samples.size());
        CHECK(noise_power == Catch::Approx(2.0).epsilon(0.05));

        auto z = add_noise_power(x, 0.0, 11);
        bool same = true;
        for (std::size_t i = 0; i < x.samples.size(); ++i)
            same = same && z.samples[i] == x.samples[i];
        CHECK(same);

        CHECK_THROWS_AS(add_noise_power(x, -1.0, 11), std::invalid_argument);
    }
}

TEST_CASE("random draws have the declared moments", "[scene]") {
    Rng rng(12345);
    const int n = 200000;
    double mean = 0.0, var = 0.0, cmean = 0.0;
    double umin = 1.0, umax = 0.0;
    for (int i = 0; i < n; ++i) {
        double u = rng.uniform();
        umin = std::min(umin, u);
        umax = std::max(umax, u);
        double g = rng.gaussian();
        mean += g;
        var += g * g;
        cmean += std::norm(rng.complex_gaussian());
    }
    mean /= n;
    var /= n;
    cmean /= n;
    CHECK(umin >= 0.0);
    CHECK(umax < 1.0);
    CHECK(umin < 0.001); // the draws actually cover the interval
    CHECK(umax > 0.999);
    CHECK(std::abs(mean) < 0.02);
    CHECK(var == Catch::Approx(1.0).epsilon(0.03));
    CHECK(cmean == Catch::Approx(1.0).epsilon(0.03));
}
