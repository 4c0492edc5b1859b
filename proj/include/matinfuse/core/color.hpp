// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "matinfuse/core/image.hpp"

namespace matinfuse {

double srgb_to_linear(double encoded);
double linear_to_srgb(double linear);

RgbPlanes srgb_to_linear(const RgbPlanes& encoded);
RgbPlanes linear_to_srgb(const RgbPlanes& linear);

struct Hsv {
  double h = 0.0;  // [0,1), 0 when saturation is 0
  double s = 0.0;
  double v = 0.0;
};

// Hexcone conversion of normalized RGB.
Hsv rgb_to_hsv(double r, double g, double b);

}  // namespace matinfuse
