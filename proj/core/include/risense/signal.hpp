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

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace risense {

/// Uniformly sampled complex baseband signal. Sample i sits at t = i / sample_rate_hz.
struct BasebandSignal {
    double sample_rate_hz = 0.0;
    std::vector<std::complex<double>> samples;

    std::size_t size() const { return samples.size(); }
    double duration_s() const { return sample_rate_hz > 0.0 ? double(samples.size()) / sample_rate_hz : 0.0; }

    /// Mean sample power, |x|^2 averaged over the record.
    double mean_power() const {
        if (samples.empty())
            return 0.0;
        double acc = 0.0;
        for (const auto &s : samples)
            acc += std::norm(s);
        return acc / double(samples.size());
    }
};

/// Uniformly sampled real signal (envelopes, filtered traces, ...).
struct RealSignal {
    double sample_rate_hz = 0.0;
    std::vector<double> samples;

    std::size_t size() const { return samples.size(); }
    double duration_s() const { return sample_rate_hz > 0.0 ? double(samples.size()) / sample_rate_hz : 0.0; }
};

/// Magnitude spectrogram produced by the sliding-window transform.
/// Row-major storage: magnitude(frame, bin) = values[frame * bins() + bin].
struct Spectrogram {
    std::vector<double> frame_times_s; // center time of each frame
    std::vector<double> bin_freqs_hz;  // one-sided frequency axis
    std::vector<double> values;        // frames x bins magnitudes

    std::size_t frames() const { return frame_times_s.size(); }
    std::size_t bins() const { return bin_freqs_hz.size(); }

    double at(std::size_t frame, std::size_t bin) const {
        if (frame >= frames() || bin >= bins())
            throw std::out_of_range("Spectrogram::at: index outside frame/bin grid");
        return values[frame * bins() + bin];
    }
};

} // namespace risense
