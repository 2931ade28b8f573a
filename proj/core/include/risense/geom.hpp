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

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace risense {

inline constexpr double kSpeedOfLight = 299792458.0; // m/s, exact SI value
inline constexpr double kPi = std::numbers::pi;

/// Minimal 3-vector used for positions and directions, in meters.
struct Vec3 {
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    friend Vec3 operator+(const Vec3 &a, const Vec3 &b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
    friend Vec3 operator-(const Vec3 &a, const Vec3 &b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
    friend Vec3 operator*(double s, const Vec3 &v) { return {s * v.x, s * v.y, s * v.z}; }
    friend Vec3 operator*(const Vec3 &v, double s) { return s * v; }

    double norm() const { return std::sqrt(x * x + y * y + z * z); }
};

inline double dot(const Vec3 &a, const Vec3 &b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

inline Vec3 cross(const Vec3 &a, const Vec3 &b) {
    return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

inline double distance(const Vec3 &a, const Vec3 &b) { return (a - b).norm(); }

/// Returns v scaled to unit length. Throws for (near-)zero vectors because a
/// direction is meaningless there and silently returning garbage hides bugs.
inline Vec3 normalized(const Vec3 &v) {
    double n = v.norm();
    if (n < 1e-30)
        throw std::invalid_argument("normalized: zero-length vector has no direction");
    return {v.x / n, v.y / n, v.z / n};
}

/// Wraps an angle in radians to the interval (-pi, pi].
inline double wrap_phase(double a) {
    double w = std::remainder(a, 2.0 * kPi);
    if (w <= -kPi)
        w = kPi;
    return w;
}

inline double db10(double power_ratio) { return 10.0 * std::log10(power_ratio); }
inline double db20(double amplitude_ratio) { return 20.0 * std::log10(amplitude_ratio); }

/// sin(x)/x with the removable singularity filled in.
inline double sinc(double x) {
    if (std::abs(x) < 1e-12)
        return 1.0;
    return std::sin(x) / x;
}

inline double deg2rad(double deg) { return deg * kPi / 180.0; }
inline double rad2deg(double rad) { return rad * 180.0 / kPi; }

} // namespace risense
