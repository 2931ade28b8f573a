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

#include "risense/stc.hpp"

#include <cmath>
#include <stdexcept>

namespace risense {

SpaceTimeCode::SpaceTimeCode(std::size_t rows, std::size_t cols, std::size_t length, double slot_s)
    : rows_(rows), cols_(cols), length_(length), slot_s_(slot_s), bits_(rows * cols * length, 0) {
    if (rows_ == 0 || cols_ == 0)
        throw std::invalid_argument("SpaceTimeCode: grid needs at least one row and one column");
    if (length_ == 0)
        throw std::invalid_argument("SpaceTimeCode: schedule needs at least one slot");
    if (!(slot_s_ > 0.0))
        throw std::invalid_argument("SpaceTimeCode: slot duration must be positive");
}

std::size_t SpaceTimeCode::index(std::size_t row, std::size_t col, std::size_t slot) const {
    if (row >= rows_ || col >= cols_)
        throw std::out_of_range("SpaceTimeCode: element index outside the grid");
    if (slot >= length_)
        throw std::out_of_range("SpaceTimeCode: slot index outside the schedule");
    return (row * cols_ + col) * length_ + slot;
}

std::uint8_t SpaceTimeCode::at(std::size_t row, std::size_t col, std::size_t slot) const {
    return bits_[index(row, col, slot)];
}

void SpaceTimeCode::set(std::size_t row, std::size_t col, std::size_t slot, std::uint8_t state) {
    if (state > 1)
        throw std::invalid_argument("SpaceTimeCode: binary cells only know states 0 and 1");
    bits_[index(row, col, slot)] = state;
}

CodingPattern SpaceTimeCode::slice(std::size_t slot) const {
    CodingPattern p(rows_, cols_);
    for (std::size_t m = 0; m < rows_; ++m)
        for (std::size_t n = 0; n < cols_; ++n)
            p.set(m, n, at(m, n, slot));
    return p;
}

std::vector<std::complex<double>> SpaceTimeCode::realized_sequence(std::size_t row, std::size_t col,
                                                                   const MetaAtomProfile &profile) const {
    std::vector<std::complex<double>> seq(length_);
    for (std::size_t l = 0; l < length_; ++l)
        seq[l] = profile.reflection(at(row, col, l));
    return seq;
}

HarmonicSpectrum::HarmonicSpectrum(int q_min, std::vector<std::complex<double>> coeffs)
    : q_min_(q_min), coeffs_(std::move(coeffs)) {
    if (coeffs_.empty())
        throw std::invalid_argument("HarmonicSpectrum: empty coefficient range");
}

std::complex<double> HarmonicSpectrum::at(int q) const {
    if (q < q_min_ || q > q_max())
        throw std::out_of_range("HarmonicSpectrum: harmonic index outside stored range");
    return coeffs_[std::size_t(q - q_min_)];
}

namespace {

// Single closed-form coefficient; shared by harmonic_coefficients and the
// per-element evaluation in harmonic_array_factor.
std::complex<double> coeff_closed_form(std::span<const std::complex<double>> seq, int q) {
    const auto L = double(seq.size());
    if (q == 0) {
        std::complex<double> mean{0.0, 0.0};
        for (const auto &s : seq)
            mean += s;
        return mean / L;
    }
    const double win = sinc(kPi * double(q) / L);
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t l = 0; l < seq.size(); ++l) {
        double ph = -kPi * double(q) * (2.0 * double(l) + 1.0) / L; // slot centers at (l + 1/2)/L
        acc += seq[l] * std::complex<double>{std::cos(ph), std::sin(ph)};
    }
    return acc * (win / L);
}

} // namespace

HarmonicSpectrum harmonic_coefficients(std::span<const std::complex<double>> seq, int q_min, int q_max) {
    if (seq.empty())
        throw std::invalid_argument("harmonic_coefficients: empty sequence");
    if (q_min > q_max)
        throw std::invalid_argument("harmonic_coefficients: q_min exceeds q_max");
    std::vector<std::complex<double>> coeffs;
    coeffs.reserve(std::size_t(q_max - q_min + 1));
    for (int q = q_min; q <= q_max; ++q)
        coeffs.push_back(coeff_closed_form(seq, q));
    return {q_min, std::move(coeffs)};
}

HarmonicSpectrum harmonic_coefficients_oracle(std::span<const std::complex<double>> seq, int q_min,
                                              int q_max, std::size_t oversample) {
    if (seq.empty())
        throw std::invalid_argument("harmonic_coefficients_oracle: empty sequence");
    if (q_min > q_max)
        throw std::invalid_argument("harmonic_coefficients_oracle: q_min exceeds q_max");
    const std::size_t L = seq.size();
    if (oversample == 0 || oversample % L != 0)
        throw std::invalid_argument("harmonic_coefficients_oracle: oversample must be a multiple of the sequence length");
    const std::size_t qabs = std::size_t(std::max({std::abs(q_min), std::abs(q_max), 1}));
    if (oversample < 8 * qabs * L)
        throw std::invalid_argument("harmonic_coefficients_oracle: oversample below 8 * max|q| * length");

    // Period normalized to 1. Subinterval i covers [i, i+1] / oversample and
    // carries the constant value seq[i / (oversample / L)]. The projection
    // integral of exp(-j 2 pi q t) over each subinterval is evaluated in
    // closed form, so the only error left is rounding.
    const std::size_t per_slot = oversample / L;
    std::vector<std::complex<double>> coeffs;
    coeffs.reserve(std::size_t(q_max - q_min + 1));
    const std::complex<double> j{0.0, 1.0};
    for (int q = q_min; q <= q_max; ++q) {
        std::complex<double> acc{0.0, 0.0};
        for (std::size_t i = 0; i < oversample; ++i) {
            const std::complex<double> value = seq[i / per_slot];
            if (q == 0) {
                acc += value / double(oversample);
            } else {
                double a = double(i) / double(oversample);
                double b = double(i + 1) / double(oversample);
                auto ea = std::exp(-j * (2.0 * kPi * double(q) * a));
                auto eb = std::exp(-j * (2.0 * kPi * double(q) * b));
                acc += value * (eb - ea) / (-j * (2.0 * kPi * double(q)));
            }
        }
        coeffs.push_back(acc);
    }
    return {q_min, std::move(coeffs)};
}

void apply_time_shift(SpaceTimeCode &code, std::size_t row, std::size_t col, long shift_slots) {
    const long L = long(code.length());
    const long s = ((shift_slots % L) + L) % L;
    if (s == 0)
        return;
    std::vector<std::uint8_t> rotated(static_cast<std::size_t>(L), 0);
    for (long l = 0; l < L; ++l)
        rotated[std::size_t(l)] = code.at(row, col, std::size_t((l - s + L) % L));
    for (long l = 0; l < L; ++l)
        code.set(row, col, std::size_t(l), rotated[std::size_t(l)]);
}

std::complex<double> harmonic_array_factor(const RisArray &array, const SpaceTimeCode &code, int q,
                                           double carrier_hz, const Vec3 &incidence,
                                           const Vec3 &observation, const MetaAtomProfile &profile) {
    if (code.rows() != array.rows() || code.cols() != array.cols())
        throw std::invalid_argument("harmonic_array_factor: code dimensions do not match the array");
    if (!(carrier_hz > 0.0))
        throw std::invalid_argument("harmonic_array_factor: carrier frequency must be positive");

    const double k = 2.0 * kPi * carrier_hz / kSpeedOfLight;
    const Vec3 s = incidence + observation;

    std::complex<double> acc{0.0, 0.0};
    for (std::size_t m = 0; m < array.rows(); ++m) {
        for (std::size_t n = 0; n < array.cols(); ++n) {
            auto seq = code.realized_sequence(m, n, profile);
            auto cq = coeff_closed_form(seq, q);
            double ph = k * dot(array.element_offset(m, n), s);
            acc += cq * std::complex<double>{std::cos(ph), std::sin(ph)};
        }
    }
    return acc;
}

std::vector<std::size_t> two_beam_column_shifts(const RisArray &array, double carrier_hz,
                                                double angle_plus_deg, std::size_t length) {
    const double k = 2.0 * kPi * carrier_hz / kSpeedOfLight;
    const double ramp = k * array.spacing_m() * std::sin(deg2rad(angle_plus_deg));
    std::vector<std::size_t> shifts(array.cols());
    for (std::size_t n = 0; n < array.cols(); ++n) {
        double ideal = double(length) * ramp * double(n) / (2.0 * kPi);
        long rounded = std::lround(ideal);
        shifts[n] = std::size_t(((rounded % long(length)) + long(length)) % long(length));
    }
    return shifts;
}

SpaceTimeCode design_two_beam_code(const RisArray &array, double carrier_hz, double angle_plus_deg,
                                   double angle_minus_deg, std::size_t length, double slot_s) {
    if (!(carrier_hz > 0.0))
        throw std::invalid_argument("design_two_beam_code: carrier frequency must be positive");
    if (std::abs(angle_minus_deg + angle_plus_deg) > 1e-9)
        throw std::invalid_argument("design_two_beam_code: only mirror-symmetric beam pairs are "
                                    "realizable; angle_minus must equal -angle_plus");
    if (!(angle_plus_deg > 0.0) || angle_plus_deg >= 90.0)
        throw std::invalid_argument("design_two_beam_code: angle_plus must lie in (0, 90) degrees");
    if (length < 8)
        throw std::invalid_argument("design_two_beam_code: need at least 8 slots to resolve the "
                                    "column phase ramp");
    if (length % 2 != 0)
        throw std::invalid_argument("design_two_beam_code: slot count must be even for a balanced "
                                    "square wave (zero carrier leakage)");

    SpaceTimeCode code(array.rows(), array.cols(), length, slot_s);
    // Balanced square wave: first half 0, second half 1. Its slot average is
    // zero under the 0/pi profile (no residual carrier) and its first
    // harmonic carries the maximum binary-waveform amplitude 2/pi.
    for (std::size_t m = 0; m < array.rows(); ++m)
        for (std::size_t n = 0; n < array.cols(); ++n)
            for (std::size_t l = length / 2; l < length; ++l)
                code.set(m, n, l, 1);

    auto shifts = two_beam_column_shifts(array, carrier_hz, angle_plus_deg, length);
    for (std::size_t n = 0; n < array.cols(); ++n)
        for (std::size_t m = 0; m < array.rows(); ++m)
            apply_time_shift(code, m, n, long(shifts[n]));
    return code;
}

} // namespace risense
