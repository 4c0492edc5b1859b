// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "matinfuse/core/image.hpp"
#include "matinfuse/imagemaps/region_map.hpp"
#include "matinfuse/texextract/texture_tile.hpp"

namespace matinfuse {

struct ShadowSpec {
  Plane shadow_map;
  double strength = 0.5;
};

// Composite plus soft ground truth. rgb is linear light; gt_weights holds one
// plane per material followed by the background plane.
struct RenderedSample2D {
  RgbPlanes rgb;
  std::vector<Plane> gt_weights;
  std::vector<std::string> material_ids;
  std::uint64_t seed = 0;

  [[nodiscard]] int width() const { return rgb.width(); }
  [[nodiscard]] int height() const { return rgb.height(); }
  [[nodiscard]] double max_gt_sum_error() const;
};

// Mirrored repeat: column x reads source column m or 2W-1-m, m = x mod 2W
// (likewise for rows). A source at least as large as the target is cropped
// from its top-left corner.
RgbPlanes tile_texture(const RgbPlanes& texture, int width, int height);
RgbImage tile_texture(const RgbImage& texture, int width, int height);

// rgb = sum_k w_k tex_k + w_bg background, then rgb *= 1 - strength * shadow.
// Inputs are linear light; textures are mirror-tiled and the background is
// resampled to the map size. Throws ParameterError when the texture count
// differs from the region count.
RenderedSample2D compose_scene_2d(const SoftRegionMap& map, std::span<const RgbPlanes> textures,
                                  std::span<const std::string> material_ids,
                                  const RgbPlanes& background,
                                  const std::optional<ShadowSpec>& shadow, std::uint64_t seed);

// Tiles and background are sRGB encoded and decoded to linear before mixing.
RenderedSample2D compose_scene_2d(const SoftRegionMap& map, std::span<const TextureTile> tiles,
                                  const RgbImage& background,
                                  const std::optional<ShadowSpec>& shadow, std::uint64_t seed);

}  // namespace matinfuse
