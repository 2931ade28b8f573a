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
#include <span>
#include <vector>

namespace risense {

/// Blackman-windowed-sinc low-pass prototype with unit DC gain.
///
/// transition_hz sets the width of the roll-off region; the tap count is
/// derived from it (about 5.5 * fs / transition, forced odd for symmetry).
/// One pass gives roughly 74 dB of stop-band rejection; the zero-phase
/// forward-backward application below doubles that in dB terms.
std::vector<double> design_lowpass(double sample_rate_hz, double cutoff_hz, double transition_hz);

/// Band-pass built as the difference of two low-pass prototypes. The taps
/// are mean-subtracted so the DC gain is exactly zero, then rescaled to
/// unit gain at the band center.
std::vector<double> design_bandpass(double sample_rate_hz, double low_hz, double high_hz,
                                    double transition_hz);

/// Zero-phase filtering: forward pass, then backward pass with the same
/// taps. Ends are odd-reflected before filtering (as in the conventional
/// filtfilt) so step-like edges do not ring into the record.
std::vector<double> filtfilt(std::span<const double> taps, std::span<const double> x);
std::vector<std::complex<double>> filtfilt(std::span<const double> taps,
                                           std::span<const std::complex<double>> x);

/// Complex frequency response of a tap set at frequency f, H(f) = sum_n h_n e^{-j 2 pi f n / fs}.
std::complex<double> fir_response(std::span<const double> taps, double sample_rate_hz, double freq_hz);

} // namespace risense
