// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "matinfuse/core/image.hpp"

namespace matinfuse {

namespace fs = std::filesystem;
using Json = nlohmann::json;

std::vector<std::uint8_t> read_file(const fs::path& path);

// Writes to a sibling temp file and renames it into place.
void write_file_atomic(const fs::path& path, std::span<const std::uint8_t> bytes);
void write_text_atomic(const fs::path& path, std::string_view text);
// Pretty-printed, sorted keys, trailing newline.
void write_json_atomic(const fs::path& path, const Json& value);
Json read_json(const fs::path& path);

// Decodes PNG/JPEG bytes. Alpha is dropped; grayscale input is rejected.
RgbImage decode_rgb(std::span<const std::uint8_t> bytes);
RgbImage read_rgb(const fs::path& path);
std::vector<std::uint8_t> encode_rgb_png(const RgbImage& image);
void write_rgb_png(const fs::path& path, const RgbImage& image);

// 16-bit single channel PNG holding values in [0,1].
std::vector<std::uint8_t> encode_gray16_png(const Plane& plane);
std::vector<std::uint8_t> encode_gray16_png(int width, int height,
                                            std::span<const std::uint16_t> values);
void write_gray16_png(const fs::path& path, const Plane& plane);
// Reads 8- or 16-bit single channel PNG scaled to [0,1].
Plane read_gray_png(const fs::path& path);

// Quantizes a per-pixel partition of unity to 16 bits such that the integer
// codes at every pixel sum to exactly 65535 (largest remainder rounding).
std::vector<std::vector<std::uint16_t>> quantize_partition(std::span<const Plane> planes);

// Lowercase hex SHA-256.
std::string sha256_hex(std::string_view data);

}  // namespace matinfuse
