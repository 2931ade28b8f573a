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

/// Forward DFT, X_k = sum_n x_n e^{-j 2 pi k n / N}. Any length N >= 1.
/// Backed by FFTW; plans are created per call with FFTW_ESTIMATE, which is
/// deterministic (no runtime measurement) and cheap at the sizes used here.
std::vector<std::complex<double>> fft(std::span<const std::complex<double>> x);

/// Inverse DFT including the 1/N normalization, so ifft(fft(x)) == x.
std::vector<std::complex<double>> ifft(std::span<const std::complex<double>> x);

/// Convenience forward DFT of a real sequence.
std::vector<std::complex<double>> fft_real(std::span<const double> x);

} // namespace risense
