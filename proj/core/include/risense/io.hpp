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

#include "risense/signal.hpp"

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>

namespace risense {

/// Shortest round-trip decimal form of a double (std::to_chars), so the
/// text is bit-faithful, locale-independent and byte-stable across runs.
std::string format_double(double v);

/// CSV dialect used by every exporter: comma separator, '.' decimal point,
/// one header line, LF line endings, no trailing newline variance (the file
/// always ends with a single LF).
void write_csv(const std::filesystem::path &path, const RealSignal &x,
               const std::string &value_column = "value");
void write_csv(const std::filesystem::path &path, const BasebandSignal &x);
void write_csv(const std::filesystem::path &path, const Spectrogram &sg);

/// Minimal line-plot SVG of a real trace, for eyeballing results.
void write_svg(const std::filesystem::path &path, const RealSignal &x, const std::string &title);

/// Grayscale tile rendering of a spectrogram (dB scale, white = loud).
void write_svg(const std::filesystem::path &path, const Spectrogram &sg, const std::string &title);

/// CRC-32 (IEEE 802.3, reflected 0xEDB88320) of a byte range.
std::uint32_t crc32(std::span<const std::byte> data);

/// CRC-32 of a file's contents; throws std::runtime_error if unreadable.
std::uint32_t crc32_file(const std::filesystem::path &path);

} // namespace risense
