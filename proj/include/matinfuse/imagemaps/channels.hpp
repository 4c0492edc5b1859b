// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <optional>
#include <string_view>

#include "matinfuse/core/image.hpp"

namespace matinfuse {

enum class Channel { kR = 0, kG, kB, kH, kS, kV };
inline constexpr int kNumChannels = 6;

std::string_view channel_name(Channel channel);
std::optional<Channel> parse_channel(std::string_view name);

// Six normalized planes of one image. H is scaled to [0,1) and is 0 wherever
// saturation is 0.
struct ImageChannelStack {
  int width = 0;
  int height = 0;
  std::array<Plane, kNumChannels> planes;

  const Plane& operator[](Channel c) const { return planes[static_cast<int>(c)]; }
  Plane& operator[](Channel c) { return planes[static_cast<int>(c)]; }
};

// Throws DecodeError on empty input.
ImageChannelStack decompose_channels(const RgbImage& image);

}  // namespace matinfuse
