// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/core/color.hpp"

#include <algorithm>
#include <cmath>

namespace matinfuse {

double srgb_to_linear(double encoded) {
  const double c = std::clamp(encoded, 0.0, 1.0);
  return c <= 0.04045 ? c / 12.92 : std::pow((c + 0.055) / 1.055, 2.4);
}

double linear_to_srgb(double linear) {
  const double c = std::clamp(linear, 0.0, 1.0);
  return c <= 0.0031308 ? c * 12.92 : 1.055 * std::pow(c, 1.0 / 2.4) - 0.055;
}

RgbPlanes srgb_to_linear(const RgbPlanes& encoded) {
  RgbPlanes out = encoded;
  for (auto& plane : out.channels) {
    for (double& v : plane.values) v = srgb_to_linear(v);
  }
  return out;
}

RgbPlanes linear_to_srgb(const RgbPlanes& linear) {
  RgbPlanes out = linear;
  for (auto& plane : out.channels) {
    for (double& v : plane.values) v = linear_to_srgb(v);
  }
  return out;
}

Hsv rgb_to_hsv(double r, double g, double b) {
  const double hi = std::max({r, g, b});
  const double lo = std::min({r, g, b});
  const double chroma = hi - lo;
  Hsv out;
  out.v = hi;
  out.s = hi > 0.0 ? chroma / hi : 0.0;
  if (chroma <= 0.0) return out;
  double sector;
  if (hi == r) {
    sector = (g - b) / chroma;
    if (sector < 0.0) sector += 6.0;
  } else if (hi == g) {
    sector = (b - r) / chroma + 2.0;
  } else {
    sector = (r - g) / chroma + 4.0;
  }
  out.h = sector / 6.0;
  if (out.h >= 1.0) out.h -= 1.0;
  return out;
}

}  // namespace matinfuse
