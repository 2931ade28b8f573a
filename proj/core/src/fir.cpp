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

#include "risense/fir.hpp"

#include "risense/fft.hpp"
#include "risense/geom.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <type_traits>

namespace risense {

namespace {

void check_band_edge(double sample_rate_hz, double freq_hz, const char *what) {
    if (sample_rate_hz <= 0.0)
        throw std::invalid_argument(std::string(what) + ": sample rate must be positive");
    if (freq_hz <= 0.0 || freq_hz >= sample_rate_hz / 2.0)
        throw std::invalid_argument(std::string(what) + ": band edge outside (0, fs/2)");
}

std::size_t taps_for_transition(double sample_rate_hz, double transition_hz) {
    if (transition_hz <= 0.0)
        throw std::invalid_argument("fir design: transition width must be positive");
    // Blackman window needs about 5.5 / (normalized transition width) taps
    // and buys a ~74 dB stopband floor in exchange.
    auto n = std::size_t(std::ceil(5.5 * sample_rate_hz / transition_hz));
    if (n % 2 == 0)
        ++n;
    return std::max<std::size_t>(n, 5);
}

// Symmetric Blackman-windowed sinc, normalized to unit tap sum.
std::vector<double> windowed_sinc(double sample_rate_hz, double cutoff_hz, std::size_t ntaps) {
    const double fc = cutoff_hz / sample_rate_hz; // cycles per sample
    const double mid = double(ntaps - 1) / 2.0;
    std::vector<double> h(ntaps);
    for (std::size_t i = 0; i < ntaps; ++i) {
        double t = double(i) - mid;
        double c = 2.0 * kPi * double(i) / double(ntaps - 1);
        double w = 0.42 - 0.5 * std::cos(c) + 0.08 * std::cos(2.0 * c);
        h[i] = 2.0 * fc * sinc(2.0 * kPi * fc * t) * w;
    }
    double s = std::accumulate(h.begin(), h.end(), 0.0);
    for (auto &v : h)
        v /= s;
    return h;
}

// Centered convolution slice shared by both evaluation strategies: the
// direct sum for short records, an FFT product for long ones. Out-of-range
// extension samples count as zero in both, so results agree to rounding.
template <typename T>
std::vector<T> conv_centered_fft(std::span<const double> taps, const std::vector<T> &ext,
                                 std::size_t nx, std::size_t offset) {
    const std::size_t full = ext.size() + taps.size() - 1;
    std::size_t nfft = 1;
    while (nfft < full)
        nfft <<= 1;

    std::vector<std::complex<double>> a(nfft), b(nfft);
    for (std::size_t i = 0; i < ext.size(); ++i)
        a[i] = ext[i];
    for (std::size_t k = 0; k < taps.size(); ++k)
        b[k] = taps[k];
    auto fa = fft(a);
    auto fb = fft(b);
    for (std::size_t i = 0; i < nfft; ++i)
        fa[i] *= fb[i];
    auto c = ifft(fa);

    std::vector<T> y(nx);
    for (std::size_t i = 0; i < nx; ++i) {
        if constexpr (std::is_same_v<T, double>)
            y[i] = c[i + offset].real();
        else
            y[i] = c[i + offset];
    }
    return y;
}

// Single forward pass. The input is extended on both ends by odd reflection
// about the end samples, which preserves the local level and slope, and the
// output is trimmed back to the input length with the group delay removed.
template <typename T>
std::vector<T> filter_same(std::span<const double> taps, std::span<const T> x) {
    const std::size_t nt = taps.size();
    const std::size_t nx = x.size();
    const std::size_t pad = std::min(nx > 1 ? nx - 1 : std::size_t(0), nt);

    std::vector<T> ext;
    ext.reserve(nx + 2 * pad);
    for (std::size_t i = 0; i < pad; ++i)
        ext.push_back(2.0 * x[0] - x[pad - i]);
    ext.insert(ext.end(), x.begin(), x.end());
    for (std::size_t i = 0; i < pad; ++i)
        ext.push_back(2.0 * x[nx - 1] - x[nx - 2 - i]);

    const std::size_t mid = (nt - 1) / 2;

    // Long record, long filter: the O(n log n) route is an order of
    // magnitude faster at the receiver-chain sizes (4e5 samples, ~800 taps).
    if (nx * nt > (std::size_t(1) << 22))
        return conv_centered_fft<T>(taps, ext, nx, pad + mid);

    // Centered convolution: y[i] = sum_k h[k] * ext[i + pad + mid - k]
    std::vector<T> y(nx);
    for (std::size_t i = 0; i < nx; ++i) {
        const std::size_t base = i + pad + mid; // index of the newest sample used
        T acc{};
        for (std::size_t k = 0; k < nt; ++k) {
            const std::size_t j = base - k;
            if (j < ext.size())
                acc += taps[k] * ext[j];
        }
        y[i] = acc;
    }
    return y;
}

template <typename T>
std::vector<T> filtfilt_impl(std::span<const double> taps, std::span<const T> x) {
    if (taps.empty())
        throw std::invalid_argument("filtfilt: empty tap vector");
    if (x.empty())
        return {};
    auto fwd = filter_same<T>(taps, x);
    std::reverse(fwd.begin(), fwd.end());
    auto bwd = filter_same<T>(taps, std::span<const T>(fwd));
    std::reverse(bwd.begin(), bwd.end());
    return bwd;
}

} // namespace

std::vector<double> design_lowpass(double sample_rate_hz, double cutoff_hz, double transition_hz) {
    check_band_edge(sample_rate_hz, cutoff_hz, "design_lowpass");
    return windowed_sinc(sample_rate_hz, cutoff_hz, taps_for_transition(sample_rate_hz, transition_hz));
}

std::vector<double> design_bandpass(double sample_rate_hz, double low_hz, double high_hz,
                                    double transition_hz) {
    check_band_edge(sample_rate_hz, low_hz, "design_bandpass");
    check_band_edge(sample_rate_hz, high_hz, "design_bandpass");
    if (low_hz >= high_hz)
        throw std::invalid_argument("design_bandpass: low edge must be below high edge");

    const std::size_t ntaps = taps_for_transition(sample_rate_hz, transition_hz);
    auto hi = windowed_sinc(sample_rate_hz, high_hz, ntaps);
    auto lo = windowed_sinc(sample_rate_hz, low_hz, ntaps);
    std::vector<double> h(ntaps);
    for (std::size_t i = 0; i < ntaps; ++i)
        h[i] = hi[i] - lo[i];

    // Force an exact spectral null at DC so a large envelope baseline cannot
    // leak through finite-window sidelobes.
    double mean = std::accumulate(h.begin(), h.end(), 0.0) / double(ntaps);
    for (auto &v : h)
        v -= mean;

    double center = 0.5 * (low_hz + high_hz);
    double g = std::abs(fir_response(h, sample_rate_hz, center));
    if (g < 1e-12)
        throw std::runtime_error("design_bandpass: degenerate design, no gain at band center");
    for (auto &v : h)
        v /= g;
    return h;
}

std::vector<double> filtfilt(std::span<const double> taps, std::span<const double> x) {
    return filtfilt_impl<double>(taps, x);
}

std::vector<std::complex<double>> filtfilt(std::span<const double> taps,
                                           std::span<const std::complex<double>> x) {
    return filtfilt_impl<std::complex<double>>(taps, x);
}

std::complex<double> fir_response(std::span<const double> taps, double sample_rate_hz, double freq_hz) {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = 0; n < taps.size(); ++n) {
        double ph = -2.0 * kPi * freq_hz * double(n) / sample_rate_hz;
        acc += taps[n] * std::complex<double>{std::cos(ph), std::sin(ph)};
    }
    return acc;
}

} // namespace risense
