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
// Acceptance gate: one verdict line per criterion, nonzero exit if any
// fails. Tolerances are pinned here, next to the check they guard.

#include "risense/fir.hpp"
#include "risense/runner.hpp"

#include <cmath>
#include <complex>
#include <cstdio>
#include <filesystem>
#include <random>
#include <vector>

using namespace risense;
namespace fs = std::filesystem;

namespace {

int g_failures = 0;

void verdict(int index, const char *label, bool ok, const std::string &detail) {
    std::printf("[%d/8] %-44s %s  (%s)\n", index, label, ok ? "pass" : "FAIL", detail.c_str());
    if (!ok)
        ++g_failures;
}

std::string fmt(const char *pattern, double a, double b = 0.0, double c = 0.0) {
    char buf[160];
    std::snprintf(buf, sizeof buf, pattern, a, b, c);
    return buf;
}

// --- 1: focusing gain over the desk-scale coverage grid -------------------

void check_focus_gain() {
    Scene scene;
    scene.route = RouteModel::NearField;
    scene.tx_pos_m = {0.10, 0.15, 0.0}; // the close-in feed of the presets

    double worst_vs_absent = 1e9;
    double worst_vs_zeros = 1e9;
    auto zeros = CodingPattern::all_zeros(16, 16);
    for (double deg : {30.0, 40.0, 50.0, 60.0}) {
        for (double range_m : {2.0, 2.25, 2.5}) {
            Vec3 chest{range_m * std::cos(deg2rad(deg)), range_m * std::sin(deg2rad(deg)), 0.0};
            auto focus =
                synthesize_focus_pattern(scene.array, scene.carrier_hz, scene.tx_pos_m, chest);
            double g_focus = std::abs(illumination_gain(scene, focus, chest));
            double g_absent = std::abs(illumination_gain(scene, std::nullopt, chest));
            double g_zeros = std::abs(illumination_gain(scene, zeros, chest));
            worst_vs_absent = std::min(worst_vs_absent, 20.0 * std::log10(g_focus / g_absent));
            worst_vs_zeros = std::min(worst_vs_zeros, 20.0 * std::log10(g_focus / g_zeros));
        }
    }

    // The full pipeline must report the same conclusion for the canonical
    // single-person scenario, not just the field probe.
    auto res = run_experiment(make_preset("fig7"));
    double run_vs_absent = res.gain ? res.gain->focus_vs_absent_db : -1e9;
    double run_vs_zeros = res.gain ? res.gain->focus_vs_zeros_db : -1e9;

    bool ok = worst_vs_absent >= 10.0 && worst_vs_zeros >= 10.0 && run_vs_absent >= 10.0 &&
              run_vs_zeros >= 10.0;
    verdict(1, "focusing gain on a 30-60 deg, 2.0-2.5 m grid", ok,
            fmt("min %.1f dB vs absent, %.1f dB vs zeros, >= 10 dB", worst_vs_absent,
                worst_vs_zeros));
}

// --- 2: single-person rate recovery under noise ----------------------------

void check_rate_recovery() {
    std::size_t runs = 0, hits = 0;
    for (double rate : {12.0, 15.0, 20.0}) {
        for (std::uint64_t seed = 1; seed <= 34; ++seed) {
            Scenario s = make_preset("fig7");
            s.compare_absent = false; // rate accuracy only, no paired record
            s.scene.targets[0].rate_bpm = rate;
            s.scene.snr_db = 10.0;
            s.seed = seed;
            auto res = run_experiment(s);
            ++runs;
            const auto &est = res.targets.at(0).estimated_rate_bpm;
            if (est && std::abs(*est - rate) <= 0.5)
                ++hits;
        }
    }
    double frac = double(hits) / double(runs);
    verdict(2, "rate within 0.5 bpm at 10 dB snr", frac >= 0.95,
            fmt("%.0f of %.0f runs, need >= 95%%", double(hits), double(runs)));
}

// --- 3: focused envelope beats the board-absent one ------------------------

void check_band_power_gain() {
    std::size_t wins = 0;
    const std::size_t runs = 50;
    for (std::uint64_t seed = 1; seed <= runs; ++seed) {
        Scenario s = make_preset("fig7");
        s.seed = seed;
        auto res = run_experiment(s);
        if (res.gain && res.gain->band_power_ratio_focus > res.gain->band_power_ratio_absent)
            ++wins;
    }
    verdict(3, "breathing-band ratio, focus vs absent", double(wins) / double(runs) >= 0.95,
            fmt("%.0f of %.0f seeded runs, need >= 95%%", double(wins), double(runs)));
}

// --- 4: two-person harmonic channels stay apart -----------------------------

void check_two_person() {
    auto res = run_experiment(make_preset("fig4"));
    bool ok = res.targets.size() == 2;
    double worst_err = 0.0, worst_xt = -1e9;
    for (const auto &t : res.targets) {
        if (!t.estimated_rate_bpm || !t.crosstalk_db) {
            ok = false;
            continue;
        }
        worst_err = std::max(worst_err, std::abs(*t.estimated_rate_bpm - t.true_rate_bpm));
        worst_xt = std::max(worst_xt, *t.crosstalk_db);
    }
    ok = ok && worst_err <= 0.5 && worst_xt <= -15.0;
    verdict(4, "12/18 bpm pair, mirrored-beam channels", ok,
            fmt("max rate error %.2f bpm, worst crosstalk %.1f dB", worst_err, worst_xt));
}

// --- 5: closed-form harmonics vs per-slot integration -----------------------

// Independent route: integrate Gamma_l exp(-j 2 pi q t) over each slot in
// closed form and sum, instead of the library's product formula.
std::complex<double> slotwise_integral(const std::vector<std::complex<double>> &seq, int q) {
    const auto L = double(seq.size());
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t l = 0; l < seq.size(); ++l) {
        double a = double(l) / L, b = double(l + 1) / L;
        if (q == 0) {
            acc += seq[l] * (b - a);
        } else {
            auto ea = std::polar(1.0, -2.0 * kPi * q * a);
            auto eb = std::polar(1.0, -2.0 * kPi * q * b);
            acc += seq[l] * (ea - eb) / std::complex<double>{0.0, 2.0 * kPi * q};
        }
    }
    return acc;
}

void check_harmonic_equivalence() {
    std::mt19937_64 rng(2026);
    std::uniform_real_distribution<double> uni(-1.0, 1.0);
    const std::size_t lengths[] = {2, 4, 8, 16, 32};

    double worst = 0.0;
    for (int trial = 0; trial < 1000; ++trial) {
        std::size_t L = lengths[std::size_t(trial) % 5];
        std::vector<std::complex<double>> seq(L);
        for (auto &v : seq)
            v = {uni(rng), uni(rng)};
        auto spec = harmonic_coefficients(seq, -8, 8);
        for (int q = -8; q <= 8; ++q) {
            auto ref = slotwise_integral(seq, q);
            double rel = std::abs(spec.at(q) - ref) / std::max(std::abs(ref), 1e-9);
            worst = std::max(worst, rel);
        }
    }

    // The balanced square wave carries the textbook first-harmonic weight.
    std::vector<std::complex<double>> square(16);
    for (std::size_t l = 0; l < 16; ++l)
        square[l] = l < 8 ? 1.0 : -1.0;
    auto sq = harmonic_coefficients(square, -1, 1);
    double c1_err = std::abs(std::abs(sq.at(1)) - 2.0 / kPi);
    double cm1_err = std::abs(std::abs(sq.at(-1)) - 2.0 / kPi);
    double c0 = std::abs(sq.at(0));

    bool ok = worst <= 1e-9 && c1_err <= 1e-9 && cm1_err <= 1e-9 && c0 <= 1e-12;
    verdict(5, "harmonic closed form vs integral oracle", ok,
            fmt("worst rel %.1e over 17000 coefficients, |c0| %.1e", worst, c0));
}

// --- 6: two-beam schedule points where it was asked to ----------------------

void check_beam_pointing() {
    Scene scene;
    auto code = design_two_beam_code(scene.array, scene.carrier_hz, 45.0, -45.0, 16,
                                     1.0 / (455.0 * 16.0));
    Vec3 inc{-1.0, 0.0, 0.0};

    // 0.1 degree scan over the front half-space, with the mirrored pair
    // evaluated from exactly mirrored geometry.
    double peak_plus = -1.0, peak_minus = -1.0;
    double deg_plus = 0.0, deg_minus = 0.0;
    double worst_asym = 0.0, scan_max = 0.0;
    for (int i = -800; i <= 800; ++i) {
        double deg = double(i) * 0.1;
        double c = std::cos(deg2rad(std::abs(deg)));
        double s = std::sin(deg2rad(std::abs(deg)));
        double sy = deg < 0.0 ? -s : s;
        Vec3 obs{c, sy, 0.0};
        Vec3 obs_mirror{c, -sy, 0.0};
        double plus = std::abs(harmonic_array_factor(scene.array, code, +1, scene.carrier_hz, inc, obs));
        double minus =
            std::abs(harmonic_array_factor(scene.array, code, -1, scene.carrier_hz, inc, obs_mirror));
        if (plus > peak_plus) {
            peak_plus = plus;
            deg_plus = deg;
        }
        if (minus > peak_minus) {
            peak_minus = minus;
            deg_minus = -deg;
        }
        worst_asym = std::max(worst_asym, std::abs(plus - minus));
        scan_max = std::max(scan_max, plus);
    }

    bool ok = std::abs(deg_plus - 45.0) <= 2.0 && std::abs(deg_minus + 45.0) <= 2.0 &&
              worst_asym <= 1e-9 * scan_max;
    verdict(6, "mirrored beam pair at +/-45 deg", ok,
            fmt("peaks %.1f / %.1f deg, asymmetry %.1e of peak", deg_plus, deg_minus,
                worst_asym / scan_max));
}

// --- 7: array factor vs the direct double sum -------------------------------

void check_array_factor_oracle() {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<std::size_t> dim(1, 8);
    std::uniform_int_distribution<int> bit(0, 1);
    std::normal_distribution<double> gauss;

    auto unit = [&] {
        Vec3 v{gauss(rng), gauss(rng), gauss(rng)};
        return normalized(v);
    };

    const double fc = 3.5e9;
    const double d = 0.5 * kSpeedOfLight / fc;
    const double k = 2.0 * kPi * fc / kSpeedOfLight;

    double worst = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
        RisArray arr(dim(rng), dim(rng), d, Vec3{0, 0, 0}, Vec3{1, 0, 0});
        CodingPattern pat(arr.rows(), arr.cols());
        for (std::size_t r = 0; r < arr.rows(); ++r)
            for (std::size_t c = 0; c < arr.cols(); ++c)
                pat.set(r, c, std::uint8_t(bit(rng)));
        Vec3 inc = unit(), obs = unit();

        auto fast = array_factor(arr, pat, fc, inc, obs);

        std::complex<double> slow{0.0, 0.0};
        for (std::size_t r = 0; r < arr.rows(); ++r)
            for (std::size_t c = 0; c < arr.cols(); ++c) {
                Vec3 p = arr.element_position(r, c);
                double phase = k * (dot(p, inc) + dot(p, obs));
                double gamma = pat.at(r, c) ? -1.0 : 1.0;
                slow += gamma * std::polar(1.0, phase);
            }

        double denom = std::max(std::abs(slow), 1.0);
        worst = std::max(worst, std::abs(fast - slow) / denom);
    }
    verdict(7, "array factor vs brute-force double sum", worst <= 1e-12,
            fmt("worst relative error %.1e over 100 boards", worst));
}

// --- 8: receiver DSP property bundle ----------------------------------------

bool check_decimation() {
    RealSignal x;
    x.sample_rate_hz = 200.0;
    x.samples.resize(12000);
    for (std::size_t i = 0; i < x.samples.size(); ++i)
        x.samples[i] = std::sin(2.0 * kPi * 0.3 * double(i) / 200.0);
    auto y = decimate(x, 8.0);
    double worst = 0.0;
    for (std::size_t i = 40; i + 40 < y.samples.size(); ++i)
        worst = std::max(worst,
                         std::abs(y.samples[i] - std::sin(2.0 * kPi * 0.3 * double(i) / 8.0)));
    return worst <= 0.01;
}

bool check_stopband() {
    auto taps = design_lowpass(200.0, 20.0, 10.0);
    double stop_edge = 20.0 + 10.0 / 2.0;
    double worst = 0.0;
    for (double f = stop_edge; f <= 100.0; f += 0.05)
        worst = std::max(worst, std::abs(fir_response(taps, 200.0, f)));
    return 20.0 * std::log10(1.0 / worst) >= 60.0;
}

bool check_stft_parseval() {
    RealSignal x;
    x.sample_rate_hz = 200.0;
    x.samples.resize(4096);
    std::mt19937_64 rng(11);
    std::normal_distribution<double> gauss;
    for (auto &v : x.samples)
        v = gauss(rng);

    const std::size_t win = 512, hop = 256;
    auto sg = stft(x, win, hop);

    std::vector<double> w(win);
    for (std::size_t n = 0; n < win; ++n)
        w[n] = 0.5 - 0.5 * std::cos(2.0 * kPi * double(n) / double(win - 1));

    for (std::size_t fr = 0; fr < sg.frames(); ++fr) {
        double lhs = 0.0;
        for (std::size_t n = 0; n < win; ++n) {
            double v = w[n] * x.samples[fr * hop + n];
            lhs += v * v;
        }
        // Real-input transform: bins 1 .. N/2-1 stand for conjugate pairs.
        double rhs = 0.0;
        for (std::size_t k = 0; k < sg.bins(); ++k) {
            double m = sg.values[fr * sg.bins() + k];
            rhs += (k == 0 || k == win / 2) ? m * m : 2.0 * m * m;
        }
        rhs /= double(win);
        if (std::abs(lhs - rhs) > 1e-9 * lhs)
            return false;
    }
    return true;
}

bool check_peak_counts() {
    RealSignal env;
    env.sample_rate_hz = 8.0;
    env.samples.resize(480);
    for (std::size_t i = 0; i < env.samples.size(); ++i)
        env.samples[i] = std::sin(2.0 * kPi * 0.25 * double(i) / 8.0);
    return detect_peaks(env, 2.0, 0.3).size() == 15;
}

bool check_export_determinism() {
    Scenario s;
    s.name = "acceptance-determinism";
    s.seed = 7;
    s.scene.tone_offset_hz = 500.0;
    s.scene.sample_rate_hz = 4000.0;
    s.scene.duration_s = 16.0;
    s.scene.snr_db = 15.0;
    s.scene.drive = CodingPattern::all_zeros(16, 16);
    s.scene.targets.push_back({Vec3{2.0, 1.0, 0.0}, 15.0, 0.0, 1.0, 0.2, 0.005});
    s.outputs = {"baseband", "envelopes"};

    fs::path dir_a = fs::temp_directory_path() / "risense_accept_a";
    fs::path dir_b = fs::temp_directory_path() / "risense_accept_b";
    fs::remove_all(dir_a);
    fs::remove_all(dir_b);

    auto ma = export_results(run_experiment(s), dir_a);
    auto mb = export_results(run_experiment(s), dir_b);

    bool ok = ma.size() == mb.size();
    for (std::size_t i = 0; ok && i < ma.size(); ++i)
        ok = ma[i].path == mb[i].path && ma[i].bytes == mb[i].bytes && ma[i].crc32 == mb[i].crc32 &&
             crc32_file(dir_a / ma[i].path) == ma[i].crc32;

    fs::remove_all(dir_a);
    fs::remove_all(dir_b);
    return ok;
}

void check_dsp_bundle() {
    bool dec = check_decimation();
    bool stop = check_stopband();
    bool pars = check_stft_parseval();
    bool peaks = check_peak_counts();
    bool det = check_export_determinism();
    bool ok = dec && stop && pars && peaks && det;
    char detail[160];
    std::snprintf(detail, sizeof detail,
                  "decimate %s, stopband %s, parseval %s, peaks %s, determinism %s",
                  dec ? "ok" : "bad", stop ? "ok" : "bad", pars ? "ok" : "bad",
                  peaks ? "ok" : "bad", det ? "ok" : "bad");
    verdict(8, "receiver dsp property bundle", ok, detail);
}

} // namespace

int main() {
    std::printf("risense acceptance suite\n");
    check_focus_gain();
    check_rate_recovery();
    check_band_power_gain();
    check_two_person();
    check_harmonic_equivalence();
    check_beam_pointing();
    check_array_factor_oracle();
    check_dsp_bundle();

    if (g_failures == 0) {
        std::printf("all 8 criteria hold\n");
        return 0;
    }
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
}
