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

#include "risense/ris.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace risense {

/// Periodic binary switching schedule for every element of an array:
/// element (m, n) cycles through `length` slots of `slot_s` seconds each,
/// so the modulation period is length * slot_s and reflected energy moves
/// onto harmonics spaced 1 / (length * slot_s) apart.
class SpaceTimeCode {
  public:
    SpaceTimeCode(std::size_t rows, std::size_t cols, std::size_t length, double slot_s);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t length() const { return length_; }
    double slot_s() const { return slot_s_; }
    double period_s() const { return double(length_) * slot_s_; }
    double harmonic_spacing_hz() const { return 1.0 / period_s(); }

    std::uint8_t at(std::size_t row, std::size_t col, std::size_t slot) const;
    void set(std::size_t row, std::size_t col, std::size_t slot, std::uint8_t state);

    /// The pattern shown during slot `slot` (row-major snapshot).
    CodingPattern slice(std::size_t slot) const;

    /// Complex reflection sequence of one element under a cell profile.
    std::vector<std::complex<double>> realized_sequence(std::size_t row, std::size_t col,
                                                        const MetaAtomProfile &profile) const;

  private:
    std::size_t index(std::size_t row, std::size_t col, std::size_t slot) const;

    std::size_t rows_, cols_, length_;
    double slot_s_;
    std::vector<std::uint8_t> bits_;
};

/// Fourier-series coefficients of a slot-wise constant periodic waveform,
/// stored for q in [q_min, q_max].
class HarmonicSpectrum {
  public:
    HarmonicSpectrum(int q_min, std::vector<std::complex<double>> coeffs);

    int q_min() const { return q_min_; }
    int q_max() const { return q_min_ + int(coeffs_.size()) - 1; }

    std::complex<double> at(int q) const;

  private:
    int q_min_;
    std::vector<std::complex<double>> coeffs_;
};

/// Closed-form Fourier coefficients of a length-L slot sequence with values
/// `seq` held constant over each slot (period normalized to 1):
///
///   c_q = sum_{l=1..L} (seq_l / L) sinc(pi q / L) exp(-j pi q (2l - 1) / L)
///
/// with sinc(0) = 1, so c_0 is the plain slot average.
HarmonicSpectrum harmonic_coefficients(std::span<const std::complex<double>> seq, int q_min, int q_max);

/// Numerical reference for harmonic_coefficients: projects the waveform onto
/// each Fourier basis function by integrating over `oversample` equal
/// subintervals of the period. The waveform is constant on every subinterval
/// when oversample is a multiple of the sequence length, and the exponential
/// factor is integrated in closed form per subinterval, so the projection
/// carries no discretization error. Requires oversample to be a multiple of
/// seq.size() and at least 8 * max(|q_min|, |q_max|, 1) * seq.size().
HarmonicSpectrum harmonic_coefficients_oracle(std::span<const std::complex<double>> seq, int q_min,
                                              int q_max, std::size_t oversample);

/// Rotates the schedule of element (row, col) by `shift_slots` slots of
/// delay (new slot l shows what slot l - shift used to show). In frequency
/// this multiplies harmonic q by exp(-j 2 pi q shift / L). Negative shifts
/// advance; any magnitude is reduced modulo L.
void apply_time_shift(SpaceTimeCode &code, std::size_t row, std::size_t col, long shift_slots);

/// Harmonic-domain array factor: like the static array factor, with each
/// element weighted by harmonic q of its own switching sequence.
std::complex<double> harmonic_array_factor(const RisArray &array, const SpaceTimeCode &code, int q,
                                           double carrier_hz, const Vec3 &incidence,
                                           const Vec3 &observation,
                                           const MetaAtomProfile &profile = MetaAtomProfile::ideal());

/// Builds the symmetric two-beam schedule: every element runs the balanced
/// square wave (half the period in state 0, half in state 1), and column n
/// is delayed by round(L * k * d * n * sin(angle_plus) / (2 pi)) mod L slots
/// so the +1 and -1 harmonics steer to angle_plus and -angle_plus.
///
/// angle_minus_deg must equal -angle_plus_deg: the column delays furnish a
/// single linear phase ramp, and its sign flips with the harmonic index, so
/// only mirror-symmetric beam pairs are realizable. Asymmetric requests
/// throw std::invalid_argument rather than silently mis-steering.
/// length must be even (balance) and at least 8 (phase-ramp resolution).
SpaceTimeCode design_two_beam_code(const RisArray &array, double carrier_hz, double angle_plus_deg,
                                   double angle_minus_deg, std::size_t length, double slot_s);

/// Per-column slot delays used by design_two_beam_code, exposed for
/// inspection and tests.
std::vector<std::size_t> two_beam_column_shifts(const RisArray &array, double carrier_hz,
                                                double angle_plus_deg, std::size_t length);

} // namespace risense
