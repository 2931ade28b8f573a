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

#include "risense/ris.hpp"

#include <cmath>
#include <stdexcept>

namespace risense {

MetaAtomProfile::MetaAtomProfile(double amp, double p0, double p1)
    : amplitude(amp), phase0_rad(p0), phase1_rad(p1) {
    if (!(amplitude > 0.0) || amplitude > 1.0)
        throw std::invalid_argument("MetaAtomProfile: amplitude must lie in (0, 1]");
}

std::complex<double> MetaAtomProfile::reflection(std::uint8_t state) const {
    if (state > 1)
        throw std::invalid_argument("MetaAtomProfile: binary cells only know states 0 and 1");
    double ph = state == 0 ? phase0_rad : phase1_rad;
    return std::polar(amplitude, ph);
}

RisArray::RisArray(std::size_t rows, std::size_t cols, double spacing_m, Vec3 center, Vec3 normal)
    : rows_(rows), cols_(cols), spacing_m_(spacing_m), center_(center) {
    if (rows_ == 0 || cols_ == 0)
        throw std::invalid_argument("RisArray: grid needs at least one row and one column");
    if (!(spacing_m_ > 0.0))
        throw std::invalid_argument("RisArray: element spacing must be positive");
    normal_ = normalized(normal);

    // Build the in-plane axes from a reference "up" that is not parallel to
    // the normal. For a wall-mounted board (normal in the horizontal plane)
    // this makes v point along +z and u along the horizontal.
    Vec3 up = std::abs(normal_.z) < 0.9 ? Vec3{0.0, 0.0, 1.0} : Vec3{0.0, 1.0, 0.0};
    u_ = normalized(cross(up, normal_));
    v_ = normalized(cross(normal_, u_));
}

Vec3 RisArray::element_offset(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_)
        throw std::out_of_range("RisArray: element index outside the grid");
    double du = (double(col) - double(cols_ - 1) / 2.0) * spacing_m_;
    double dv = (double(row) - double(rows_ - 1) / 2.0) * spacing_m_;
    return du * u_ + dv * v_;
}

Vec3 RisArray::element_position(std::size_t row, std::size_t col) const {
    return center_ + element_offset(row, col);
}

CodingPattern::CodingPattern(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), bits_(rows * cols, 0) {
    if (rows_ == 0 || cols_ == 0)
        throw std::invalid_argument("CodingPattern: grid needs at least one row and one column");
}

std::size_t CodingPattern::index(std::size_t row, std::size_t col) const {
    if (row >= rows_ || col >= cols_)
        throw std::out_of_range("CodingPattern: element index outside the grid");
    return row * cols_ + col;
}

std::uint8_t CodingPattern::at(std::size_t row, std::size_t col) const { return bits_[index(row, col)]; }

void CodingPattern::set(std::size_t row, std::size_t col, std::uint8_t state) {
    if (state > 1)
        throw std::invalid_argument("CodingPattern: binary cells only know states 0 and 1");
    bits_[index(row, col)] = state;
}

std::complex<double> array_factor(const RisArray &array, const CodingPattern &pattern,
                                  double carrier_hz, const Vec3 &incidence, const Vec3 &observation,
                                  const MetaAtomProfile &profile) {
    if (pattern.rows() != array.rows() || pattern.cols() != array.cols())
        throw std::invalid_argument("array_factor: pattern dimensions do not match the array");
    if (!(carrier_hz > 0.0))
        throw std::invalid_argument("array_factor: carrier frequency must be positive");

    const double k = 2.0 * kPi * carrier_hz / kSpeedOfLight;
    const Vec3 s = incidence + observation;

    std::complex<double> acc{0.0, 0.0};
    for (std::size_t m = 0; m < array.rows(); ++m) {
        for (std::size_t n = 0; n < array.cols(); ++n) {
            double ph = k * dot(array.element_offset(m, n), s);
            acc += profile.reflection(pattern.at(m, n)) * std::complex<double>{std::cos(ph), std::sin(ph)};
        }
    }
    return acc;
}

std::uint8_t quantize_phase_1bit(double desired_rad, const MetaAtomProfile &profile) {
    double d0 = std::abs(wrap_phase(desired_rad - profile.phase0_rad));
    double d1 = std::abs(wrap_phase(desired_rad - profile.phase1_rad));
    return d0 <= d1 ? 0 : 1; // ties pick state 0
}

double quantization_efficiency_bound() { return 2.0 / kPi; }

CodingPattern synthesize_focus_pattern(const RisArray &array, double carrier_hz, const Vec3 &tx,
                                       const Vec3 &target, const MetaAtomProfile &profile) {
    if (!(carrier_hz > 0.0))
        throw std::invalid_argument("synthesize_focus_pattern: carrier frequency must be positive");
    if (!array.in_front(tx))
        throw std::invalid_argument("synthesize_focus_pattern: tx is behind the board plane");
    if (!array.in_front(target))
        throw std::invalid_argument("synthesize_focus_pattern: target is behind the board plane");

    const double k = 2.0 * kPi * carrier_hz / kSpeedOfLight;
    // Common reference path; only phase differences between elements matter,
    // subtracting it keeps the wrapped argument small near the array center.
    const double ref = distance(tx, target);

    CodingPattern pattern(array.rows(), array.cols());
    for (std::size_t m = 0; m < array.rows(); ++m) {
        for (std::size_t n = 0; n < array.cols(); ++n) {
            Vec3 p = array.element_position(m, n);
            double path = distance(tx, p) + distance(p, target);
            // The element must supply phi so that phi - k*path lines up with
            // the reference -k*ref, i.e. phi = k*(path - ref) modulo 2 pi.
            double desired = wrap_phase(k * (path - ref));
            pattern.set(m, n, quantize_phase_1bit(desired, profile));
        }
    }
    return pattern;
}

std::optional<double> received_gain_db(const RisArray &array, const CodingPattern &a,
                                       const CodingPattern &b, double carrier_hz,
                                       const Vec3 &incidence, const Vec3 &observation,
                                       const MetaAtomProfile &profile) {
    double mag_a = std::abs(array_factor(array, a, carrier_hz, incidence, observation, profile));
    double mag_b = std::abs(array_factor(array, b, carrier_hz, incidence, observation, profile));
    if (mag_b == 0.0)
        return std::nullopt;
    return db20(mag_a / mag_b);
}

} // namespace risense
