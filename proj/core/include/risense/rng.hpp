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
#include <complex>
#include <cstdint>
#include <random>

namespace risense {

/// Seeded random source with a fully pinned-down output sequence.
///
/// mt19937_64 is bit-exact across standard library implementations, but the
/// std::*_distribution adaptors are not, so the uniform and Gaussian draws
/// are spelled out here. The same seed therefore yields the same noise on
/// every platform, which the byte-identical export contract relies on.
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    /// Uniform double in [0, 1) with 53 random mantissa bits.
    double uniform() { return double(eng_() >> 11) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; the paired draw is cached.
    double gaussian() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u1 = 1.0 - uniform(); // (0, 1], keeps log() finite
        double u2 = uniform();
        double r = std::sqrt(-2.0 * std::log(u1));
        double a = 2.0 * 3.14159265358979323846 * u2;
        spare_ = r * std::sin(a);
        has_spare_ = true;
        return r * std::cos(a);
    }

    /// Circularly symmetric complex normal with E[|z|^2] = 1.
    std::complex<double> complex_gaussian() {
        const double s = std::sqrt(0.5);
        double re = s * gaussian();
        double im = s * gaussian();
        return {re, im};
    }

  private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

} // namespace risense
