// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/scenegen2d/compose.hpp"

#include <algorithm>
#include <cmath>

#include "matinfuse/core/color.hpp"
#include "matinfuse/core/error.hpp"

namespace matinfuse {
namespace {

int mirror_index(int i, int n) {
  const int m = i % (2 * n);
  return m < n ? m : 2 * n - 1 - m;
}

}  // namespace

double RenderedSample2D::max_gt_sum_error() const {
  double worst = 0.0;
  if (gt_weights.empty()) return 1.0;
  for (std::size_t i = 0; i < gt_weights[0].size(); ++i) {
    double sum = 0.0;
    for (const auto& w : gt_weights) sum += w.values[i];
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

RgbPlanes tile_texture(const RgbPlanes& texture, int width, int height) {
  if (texture.width() <= 0 || texture.height() <= 0) {
    throw ParameterError("cannot tile an empty texture");
  }
  RgbPlanes out(width, height);
  for (int y = 0; y < height; ++y) {
    const int sy = mirror_index(y, texture.height());
    for (int x = 0; x < width; ++x) {
      const int sx = mirror_index(x, texture.width());
      for (std::size_t c = 0; c < 3; ++c) out[c].at(x, y) = texture[c].at(sx, sy);
    }
  }
  return out;
}

RgbImage tile_texture(const RgbImage& texture, int width, int height) {
  if (texture.empty()) throw ParameterError("cannot tile an empty texture");
  RgbImage out(width, height, texture.bit_depth);
  for (int y = 0; y < height; ++y) {
    const int sy = mirror_index(y, texture.height);
    for (int x = 0; x < width; ++x) {
      const int sx = mirror_index(x, texture.width);
      for (int c = 0; c < 3; ++c) out.sample(x, y, c) = texture.sample(sx, sy, c);
    }
  }
  return out;
}

RenderedSample2D compose_scene_2d(const SoftRegionMap& map, std::span<const RgbPlanes> textures,
                                  std::span<const std::string> material_ids,
                                  const RgbPlanes& background,
                                  const std::optional<ShadowSpec>& shadow, std::uint64_t seed) {
  const int k = map.num_regions();
  if (static_cast<int>(textures.size()) != k) {
    throw ParameterError("texture count " + std::to_string(textures.size()) +
                         " does not match region count " + std::to_string(k));
  }
  const int w = map.width;
  const int h = map.height;
  const RgbPlanes bg = resize_bilinear(background, w, h);

  RenderedSample2D out;
  out.seed = seed;
  out.material_ids.assign(material_ids.begin(), material_ids.end());
  out.rgb = RgbPlanes(w, h);
  for (std::size_t c = 0; c < 3; ++c) {
    for (std::size_t i = 0; i < bg[c].size(); ++i) {
      out.rgb[c].values[i] = map.background_weight.values[i] * bg[c].values[i];
    }
  }
  for (int r = 0; r < k; ++r) {
    const RgbPlanes tex = tile_texture(textures[r], w, h);
    const Plane& weight = map.region_weights[r];
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t i = 0; i < weight.size(); ++i) {
        out.rgb[c].values[i] += weight.values[i] * tex[c].values[i];
      }
    }
  }
  if (shadow) {
    const Plane shade = resize_bilinear(shadow->shadow_map, w, h);
    const double strength = std::clamp(shadow->strength, 0.0, 1.0);
    for (std::size_t c = 0; c < 3; ++c) {
      for (std::size_t i = 0; i < shade.size(); ++i) {
        out.rgb[c].values[i] *= 1.0 - strength * std::clamp(shade.values[i], 0.0, 1.0);
      }
    }
  }
  out.gt_weights = map.partition();
  return out;
}

RenderedSample2D compose_scene_2d(const SoftRegionMap& map, std::span<const TextureTile> tiles,
                                  const RgbImage& background,
                                  const std::optional<ShadowSpec>& shadow, std::uint64_t seed) {
  std::vector<RgbPlanes> textures;
  std::vector<std::string> ids;
  for (const auto& tile : tiles) {
    textures.push_back(srgb_to_linear(to_planes(tile.pixels)));
    ids.push_back(tile.id());
  }
  return compose_scene_2d(map, textures, ids, srgb_to_linear(to_planes(background)), shadow, seed);
}

}  // namespace matinfuse
