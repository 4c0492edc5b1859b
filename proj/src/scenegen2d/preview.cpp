// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include <array>

#include "matinfuse/core/error.hpp"
#include "matinfuse/scenegen2d/dataset.hpp"

namespace matinfuse {
namespace {

constexpr std::array<std::array<double, 3>, 10> kPalette = {{
    {0.90, 0.10, 0.10},
    {0.10, 0.75, 0.20},
    {0.15, 0.35, 0.95},
    {0.95, 0.85, 0.10},
    {0.85, 0.20, 0.85},
    {0.10, 0.85, 0.85},
    {0.95, 0.55, 0.10},
    {0.55, 0.30, 0.95},
    {0.60, 0.90, 0.40},
    {0.95, 0.60, 0.70},
}};

}  // namespace

RgbImage render_annotation_preview(std::span<const Plane> gt_weights) {
  if (gt_weights.size() < 2) throw ParameterError("preview needs material and background planes");
  const int w = gt_weights[0].width;
  const int h = gt_weights[0].height;
  RgbPlanes out(w, h);
  // The last plane is background and stays black.
  for (std::size_t k = 0; k + 1 < gt_weights.size(); ++k) {
    const auto& color = kPalette[k % kPalette.size()];
    for (std::size_t i = 0; i < gt_weights[k].size(); ++i) {
      for (std::size_t c = 0; c < 3; ++c) out[c].values[i] += gt_weights[k].values[i] * color[c];
    }
  }
  return to_image(out, 8);
}

}  // namespace matinfuse
