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

#include "risense/geom.hpp"

#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

namespace risense {

/// Reflection states of a binary-programmable unit cell. State 0 reflects
/// with phase phase0_rad, state 1 with phase1_rad; both at unit amplitude
/// scaled by `amplitude` (loss factor in (0, 1]).
struct MetaAtomProfile {
    double amplitude = 1.0;
    double phase0_rad = 0.0;
    double phase1_rad = kPi;

    MetaAtomProfile() = default;
    MetaAtomProfile(double amp, double p0, double p1);

    std::complex<double> reflection(std::uint8_t state) const;

    static MetaAtomProfile ideal() { return {}; }
};

/// Planar array of binary unit cells on a rectangular grid.
///
/// The grid axes are derived from the board normal: u runs along the columns,
/// v along the rows, both orthogonal to the normal, and element (0, 0) sits
/// at one corner so that the grid is centered on `center`.
class RisArray {
  public:
    RisArray(std::size_t rows, std::size_t cols, double spacing_m, Vec3 center, Vec3 normal);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    std::size_t element_count() const { return rows_ * cols_; }
    double spacing_m() const { return spacing_m_; }
    const Vec3 &center() const { return center_; }
    const Vec3 &normal() const { return normal_; }
    const Vec3 &col_axis() const { return u_; } // unit vector along increasing column index
    const Vec3 &row_axis() const { return v_; } // unit vector along increasing row index

    /// Element center in world coordinates; throws std::out_of_range off-grid.
    Vec3 element_position(std::size_t row, std::size_t col) const;

    /// Element offset from the array center (used in the far-field phase term).
    Vec3 element_offset(std::size_t row, std::size_t col) const;

    /// True if p lies strictly on the reflecting side of the board plane.
    bool in_front(const Vec3 &p) const { return dot(p - center_, normal_) > 0.0; }

  private:
    std::size_t rows_, cols_;
    double spacing_m_;
    Vec3 center_, normal_, u_, v_;
};

/// One binary state per element, row-major.
class CodingPattern {
  public:
    CodingPattern(std::size_t rows, std::size_t cols);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::uint8_t at(std::size_t row, std::size_t col) const;
    void set(std::size_t row, std::size_t col, std::uint8_t state);

    const std::vector<std::uint8_t> &bits() const { return bits_; }

    static CodingPattern all_zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  private:
    std::size_t index(std::size_t row, std::size_t col) const;

    std::size_t rows_, cols_;
    std::vector<std::uint8_t> bits_;
};

/// Far-field array factor for a static pattern:
///
///   AF = sum_mn Gamma_mn * exp(j k r_mn . (incidence + observation))
///
/// where r_mn is the element offset from the array center, incidence is the
/// unit vector from the source toward the array and observation the unit
/// vector from the array toward the observer, and k = 2 pi carrier / c.
std::complex<double> array_factor(const RisArray &array, const CodingPattern &pattern,
                                  double carrier_hz, const Vec3 &incidence, const Vec3 &observation,
                                  const MetaAtomProfile &profile = MetaAtomProfile::ideal());

/// Nearest realizable binary state for a desired continuous phase:
/// whichever profile phase is closer in wrapped angular distance; exact
/// ties resolve to state 0.
std::uint8_t quantize_phase_1bit(double desired_rad, const MetaAtomProfile &profile = MetaAtomProfile::ideal());

/// Per-element worst-case amplitude efficiency of 1-bit quantization against
/// an ideal continuous-phase reflector: cos(max wrapped error). With the
/// 0/pi profile this is cos(pi/2 - 0) at worst per element; the coherent-sum
/// bound over uniformly distributed desired phases is 2/pi.
double quantization_efficiency_bound();

/// Binary pattern that co-phases the tx -> element -> target routes using
/// exact spherical path lengths (valid inside the Fraunhofer distance).
/// Throws std::invalid_argument if tx or target is not in front of the board.
CodingPattern synthesize_focus_pattern(const RisArray &array, double carrier_hz, const Vec3 &tx,
                                       const Vec3 &target,
                                       const MetaAtomProfile &profile = MetaAtomProfile::ideal());

/// |AF(a)| over |AF(b)| in dB for a common geometry; empty when |AF(b)| is
/// an exact numerical zero (the ratio is then undefined, not infinite).
std::optional<double> received_gain_db(const RisArray &array, const CodingPattern &a,
                                       const CodingPattern &b, double carrier_hz,
                                       const Vec3 &incidence, const Vec3 &observation,
                                       const MetaAtomProfile &profile = MetaAtomProfile::ideal());

} // namespace risense
