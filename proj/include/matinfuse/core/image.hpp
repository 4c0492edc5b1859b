// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace matinfuse {

// Row-major scalar plane.
struct Plane {
  int width = 0;
  int height = 0;
  std::vector<double> values;

  Plane() = default;
  Plane(int w, int h, double fill = 0.0);

  [[nodiscard]] std::size_t size() const { return values.size(); }
  [[nodiscard]] bool empty() const { return values.empty(); }

  double& at(int x, int y) {
    return values[static_cast<std::size_t>(y) * width + x];
  }
  [[nodiscard]] double at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x];
  }

  bool operator==(const Plane&) const = default;
};

// Three planes holding R, G and B.
struct RgbPlanes {
  std::array<Plane, 3> channels;

  RgbPlanes() = default;
  RgbPlanes(int w, int h, double fill = 0.0);

  [[nodiscard]] int width() const { return channels[0].width; }
  [[nodiscard]] int height() const { return channels[0].height; }
  Plane& operator[](std::size_t c) { return channels[c]; }
  const Plane& operator[](std::size_t c) const { return channels[c]; }

  bool operator==(const RgbPlanes&) const = default;
};

// Decoded integer RGB raster, 8 or 16 bits per sample, interleaved.
struct RgbImage {
  int width = 0;
  int height = 0;
  int bit_depth = 8;
  std::vector<std::uint16_t> samples;

  RgbImage() = default;
  RgbImage(int w, int h, int depth = 8);

  [[nodiscard]] bool empty() const { return samples.empty(); }
  [[nodiscard]] int max_value() const { return bit_depth == 16 ? 65535 : 255; }

  std::uint16_t& sample(int x, int y, int c) {
    return samples[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  [[nodiscard]] std::uint16_t sample(int x, int y, int c) const {
    return samples[(static_cast<std::size_t>(y) * width + x) * 3 + c];
  }
  // Sample scaled to [0,1].
  [[nodiscard]] double value(int x, int y, int c) const {
    return static_cast<double>(sample(x, y, c)) / max_value();
  }

  [[nodiscard]] RgbImage crop(int x0, int y0, int w, int h) const;

  bool operator==(const RgbImage&) const = default;
};

// Quantizes [0,1] values to the given bit depth (round half up, clamped).
std::uint16_t quantize(double v, int bit_depth);

// Normalized planes of an RGB image, no color transform applied.
RgbPlanes to_planes(const RgbImage& image);
RgbImage to_image(const RgbPlanes& planes, int bit_depth = 8);

// Bilinear resample; pixel centers aligned.
Plane resize_bilinear(const Plane& plane, int width, int height);
RgbPlanes resize_bilinear(const RgbPlanes& planes, int width, int height);

// Area-averaged downsample / bilinear upsample of an integer raster.
RgbImage resize_image(const RgbImage& image, int width, int height);

// Gaussian blur with reflected borders; sigma <= 0 returns the input.
Plane gaussian_blur(const Plane& plane, double sigma);

}  // namespace matinfuse
