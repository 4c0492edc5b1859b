// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/imagemaps/channels.hpp"

#include "matinfuse/core/color.hpp"
#include "matinfuse/core/error.hpp"

namespace matinfuse {
namespace {

constexpr std::array<std::string_view, kNumChannels> kChannelNames = {"R", "G", "B",
                                                                      "H", "S", "V"};

}  // namespace

std::string_view channel_name(Channel channel) {
  return kChannelNames[static_cast<int>(channel)];
}

std::optional<Channel> parse_channel(std::string_view name) {
  for (int i = 0; i < kNumChannels; ++i) {
    if (kChannelNames[i] == name) return static_cast<Channel>(i);
  }
  return std::nullopt;
}

ImageChannelStack decompose_channels(const RgbImage& image) {
  if (image.empty() || image.width <= 0 || image.height <= 0) {
    throw DecodeError("empty image");
  }
  if (image.bit_depth != 8 && image.bit_depth != 16) {
    throw DecodeError("expected 8- or 16-bit RGB");
  }
  ImageChannelStack stack;
  stack.width = image.width;
  stack.height = image.height;
  for (auto& plane : stack.planes) plane = Plane(image.width, image.height);

  const double scale = 1.0 / image.max_value();
  const std::size_t n = static_cast<std::size_t>(image.width) * image.height;
  for (std::size_t i = 0; i < n; ++i) {
    const double r = image.samples[i * 3] * scale;
    const double g = image.samples[i * 3 + 1] * scale;
    const double b = image.samples[i * 3 + 2] * scale;
    const Hsv hsv = rgb_to_hsv(r, g, b);
    stack.planes[0].values[i] = r;
    stack.planes[1].values[i] = g;
    stack.planes[2].values[i] = b;
    stack.planes[3].values[i] = hsv.h;
    stack.planes[4].values[i] = hsv.s;
    stack.planes[5].values[i] = hsv.v;
  }
  return stack;
}

}  // namespace matinfuse
