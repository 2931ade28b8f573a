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

#include "risense/io.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace risense {

namespace {

std::ofstream open_out(const std::filesystem::path &path) {
    std::ofstream f(path, std::ios::binary); // binary: no CRLF translation anywhere
    if (!f)
        throw std::runtime_error("cannot open for writing: " + path.string());
    return f;
}

void finish(std::ofstream &f, const std::filesystem::path &path) {
    f.flush();
    if (!f)
        throw std::runtime_error("write failed: " + path.string());
}

} // namespace

std::string format_double(double v) {
    std::array<char, 32> buf{};
    auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    if (res.ec != std::errc{})
        throw std::runtime_error("format_double: conversion failed");
    return {buf.data(), res.ptr};
}

void write_csv(const std::filesystem::path &path, const RealSignal &x, const std::string &value_column) {
    auto f = open_out(path);
    f << "t_s," << value_column << "\n";
    for (std::size_t i = 0; i < x.samples.size(); ++i) {
        f << format_double(double(i) / x.sample_rate_hz) << ',' << format_double(x.samples[i]) << '\n';
    }
    finish(f, path);
}

void write_csv(const std::filesystem::path &path, const BasebandSignal &x) {
    auto f = open_out(path);
    f << "t_s,i,q\n";
    for (std::size_t n = 0; n < x.samples.size(); ++n) {
        f << format_double(double(n) / x.sample_rate_hz) << ',' << format_double(x.samples[n].real())
          << ',' << format_double(x.samples[n].imag()) << '\n';
    }
    finish(f, path);
}

void write_csv(const std::filesystem::path &path, const Spectrogram &sg) {
    auto f = open_out(path);
    f << "frame_t_s,freq_hz,magnitude\n";
    for (std::size_t fr = 0; fr < sg.frames(); ++fr) {
        for (std::size_t b = 0; b < sg.bins(); ++b) {
            f << format_double(sg.frame_times_s[fr]) << ',' << format_double(sg.bin_freqs_hz[b])
              << ',' << format_double(sg.at(fr, b)) << '\n';
        }
    }
    finish(f, path);
}

void write_svg(const std::filesystem::path &path, const RealSignal &x, const std::string &title) {
    const int width = 900, height = 300, margin = 40;
    auto f = open_out(path);

    double lo = 0.0, hi = 1.0;
    if (!x.samples.empty()) {
        auto [mn, mx] = std::minmax_element(x.samples.begin(), x.samples.end());
        lo = *mn;
        hi = *mx;
        if (hi == lo)
            hi = lo + 1.0;
    }

    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n<text x=\"" << margin
      << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\">" << title << "</text>\n<polyline fill=\"none\" stroke=\"#2060c0\" stroke-width=\"1\" points=\"";

    const std::size_t n = x.samples.size();
    // Thin long traces to at most ~2000 line segments; SVG only has to look right.
    const std::size_t step = std::max<std::size_t>(1, n / 2000);
    for (std::size_t i = 0; i < n; i += step) {
        double px = margin + (double(i) / double(std::max<std::size_t>(n - 1, 1))) * (width - 2 * margin);
        double py = height - margin - ((x.samples[i] - lo) / (hi - lo)) * (height - 2 * margin);
        f << format_double(px) << ',' << format_double(py) << ' ';
    }
    f << "\"/>\n</svg>\n";
    finish(f, path);
}

void write_svg(const std::filesystem::path &path, const Spectrogram &sg, const std::string &title) {
    const int width = 900, height = 400, margin = 40;
    auto f = open_out(path);

    double vmax = 0.0;
    for (double v : sg.values)
        vmax = std::max(vmax, v);
    if (vmax <= 0.0)
        vmax = 1.0;

    f << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\"" << height
      << "\">\n<rect width=\"100%\" height=\"100%\" fill=\"black\"/>\n<text x=\"" << margin
      << "\" y=\"20\" font-family=\"sans-serif\" font-size=\"14\" fill=\"white\">" << title
      << "</text>\n";

    const double cell_w = double(width - 2 * margin) / double(std::max<std::size_t>(sg.frames(), 1));
    const double cell_h = double(height - 2 * margin) / double(std::max<std::size_t>(sg.bins(), 1));
    for (std::size_t fr = 0; fr < sg.frames(); ++fr) {
        for (std::size_t b = 0; b < sg.bins(); ++b) {
            double v = sg.at(fr, b);
            // 60 dB display range, clamped.
            double db = 20.0 * std::log10(std::max(v, vmax * 1e-3)) - 20.0 * std::log10(vmax);
            int shade = int(std::clamp(255.0 * (db + 60.0) / 60.0, 0.0, 255.0));
            double px = margin + double(fr) * cell_w;
            double py = height - margin - double(b + 1) * cell_h; // low bins at the bottom
            f << "<rect x=\"" << format_double(px) << "\" y=\"" << format_double(py) << "\" width=\""
              << format_double(cell_w + 0.5) << "\" height=\"" << format_double(cell_h + 0.5)
              << "\" fill=\"rgb(" << shade << ',' << shade << ',' << shade << ")\"/>\n";
        }
    }
    f << "</svg>\n";
    finish(f, path);
}

namespace {

std::array<std::uint32_t, 256> make_crc_table() {
    std::array<std::uint32_t, 256> table{};
    for (std::uint32_t i = 0; i < 256; ++i) {
        std::uint32_t c = i;
        for (int bit = 0; bit < 8; ++bit)
            c = (c & 1u) ? 0xEDB88320u ^ (c >> 1) : c >> 1;
        table[i] = c;
    }
    return table;
}

} // namespace

std::uint32_t crc32(std::span<const std::byte> data) {
    static const auto table = make_crc_table();
    std::uint32_t crc = 0xFFFFFFFFu;
    for (std::byte b : data)
        crc = table[(crc ^ std::uint32_t(b)) & 0xFFu] ^ (crc >> 8);
    return crc ^ 0xFFFFFFFFu;
}

std::uint32_t crc32_file(const std::filesystem::path &path) {
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open for reading: " + path.string());
    std::ostringstream ss;
    ss << f.rdbuf();
    const std::string s = ss.str();
    return crc32(std::as_bytes(std::span<const char>(s.data(), s.size())));
}

} // namespace risense
