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

#include "risense/fft.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace risense {

namespace {

// FFTW plan creation/destruction is not thread safe; execution is.
std::mutex &planner_mutex() {
    static std::mutex m;
    return m;
}

std::vector<std::complex<double>> run_dft(std::span<const std::complex<double>> x, int sign) {
    if (x.empty())
        throw std::invalid_argument("fft: empty input");

    const int n = int(x.size());
    std::vector<std::complex<double>> in(x.begin(), x.end());
    std::vector<std::complex<double>> out(x.size());

    // std::complex<double> is layout-compatible with fftw_complex (double[2]);
    // FFTW documents this reinterpret_cast as supported usage.
    auto *in_p = reinterpret_cast<fftw_complex *>(in.data());
    auto *out_p = reinterpret_cast<fftw_complex *>(out.data());

    fftw_plan plan;
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        plan = fftw_plan_dft_1d(n, in_p, out_p, sign, FFTW_ESTIMATE);
    }
    if (!plan)
        throw std::runtime_error("fft: FFTW failed to create a plan");
    fftw_execute(plan);
    {
        std::lock_guard<std::mutex> lock(planner_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

} // namespace

std::vector<std::complex<double>> fft(std::span<const std::complex<double>> x) {
    return run_dft(x, FFTW_FORWARD);
}

std::vector<std::complex<double>> ifft(std::span<const std::complex<double>> x) {
    auto out = run_dft(x, FFTW_BACKWARD);
    const double scale = 1.0 / double(out.size());
    for (auto &v : out)
        v *= scale;
    return out;
}

std::vector<std::complex<double>> fft_real(std::span<const double> x) {
    std::vector<std::complex<double>> cx(x.size());
    for (std::size_t i = 0; i < x.size(); ++i)
        cx[i] = {x[i], 0.0};
    return fft(cx);
}

} // namespace risense
