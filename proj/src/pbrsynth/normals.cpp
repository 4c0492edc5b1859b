// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include <algorithm>
#include <cmath>

#include "matinfuse/core/error.hpp"
#include "matinfuse/pbrsynth/material.hpp"

namespace matinfuse {

NormalMap height_to_normal(const Plane& height, double strength) {
  if (!(strength > 0.0)) throw ParameterError("normal strength must be positive");
  const int w = height.width;
  const int h = height.height;
  NormalMap out{{Plane(w, h), Plane(w, h), Plane(w, h)}};
  for (int y = 0; y < h; ++y) {
    const int ym = std::max(y - 1, 0);
    const int yp = std::min(y + 1, h - 1);
    for (int x = 0; x < w; ++x) {
      const int xm = std::max(x - 1, 0);
      const int xp = std::min(x + 1, w - 1);
      const double dx = 0.5 * (height.at(xp, y) - height.at(xm, y));
      const double dy = 0.5 * (height.at(x, yp) - height.at(x, ym));
      const double nx = -strength * dx;
      const double ny = -strength * dy;
      const double inv = 1.0 / std::sqrt(nx * nx + ny * ny + 1.0);
      out.encoded[0].at(x, y) = 0.5 * (nx * inv + 1.0);
      out.encoded[1].at(x, y) = 0.5 * (ny * inv + 1.0);
      out.encoded[2].at(x, y) = 0.5 * (inv + 1.0);
    }
  }
  return out;
}

NormalMap flat_normal(int width, int height) {
  return {{Plane(width, height, 0.5), Plane(width, height, 0.5), Plane(width, height, 1.0)}};
}

std::array<double, 3> decode_normal(const NormalMap& normals, int x, int y) {
  return {2.0 * normals.encoded[0].at(x, y) - 1.0, 2.0 * normals.encoded[1].at(x, y) - 1.0,
          2.0 * normals.encoded[2].at(x, y) - 1.0};
}

}  // namespace matinfuse
