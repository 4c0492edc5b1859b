// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "matinfuse/core/manifest.hpp"
#include "matinfuse/imagemaps/region_map.hpp"
#include "matinfuse/scenegen2d/compose.hpp"

namespace matinfuse {

struct PoolItem {
  std::string id;
  std::filesystem::path path;
};

struct Batch2DConfig {
  std::vector<PoolItem> textures;     // sRGB tiles or material albedos
  std::vector<PoolItem> backgrounds;  // any RGB images
  std::vector<PoolItem> map_sources;  // images the region maps are cut from
  int width = 512;
  int height = 512;
  int min_regions = 2;
  int max_regions = 4;
  double shadow_probability = 0.5;
  double shadow_strength_min = 0.3;
  double shadow_strength_max = 0.8;
  RegionMapOptions region_maps;
  std::string config_hash;
  int workers = 1;
};

// Writes <dir>/rgb.png (sRGB 8-bit), gt_mat<k>.png per material and
// gt_background.png (16-bit, codes summing to 65535 per pixel) and meta.json.
void write_sample_2d(const std::filesystem::path& dir, const RenderedSample2D& sample,
                     const nlohmann::json& extra_meta);

// Reads gt_mat*.png and gt_background.png of a sample directory, background last.
std::vector<Plane> read_sample_gt(const std::filesystem::path& dir);

// samples/NNNNNN/... plus manifest.json under out_dir. Each sample depends
// only on (seed, index). Throws ConfigError on empty pools.
RunManifest generate_batch_2d(const Batch2DConfig& config, int count, std::uint64_t seed,
                              const std::filesystem::path& out_dir);

std::string sample_dir_name(int index);

// Colour-coded annotation: each material a palette colour, mixtures mixed,
// background black.
RgbImage render_annotation_preview(std::span<const Plane> gt_weights);

}  // namespace matinfuse
