// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/scenegen2d/dataset.hpp"

#include <chrono>
#include <cstdio>

#include "matinfuse/core/color.hpp"
#include "matinfuse/core/error.hpp"
#include "matinfuse/core/io.hpp"
#include "matinfuse/core/parallel.hpp"
#include "matinfuse/core/rng.hpp"
#include "matinfuse/imagemaps/region_map_io.hpp"

namespace matinfuse {
namespace {

struct SamplePlan {
  std::uint64_t seed = 0;
  std::size_t map_source = 0;
  std::uint64_t map_seed = 0;
  int num_regions = 1;
  std::vector<std::size_t> textures;
  std::size_t background = 0;
  bool shadow = false;
  std::size_t shadow_source = 0;
  std::uint64_t shadow_seed = 0;
  double shadow_strength = 0.0;
};

SamplePlan plan_sample(const Batch2DConfig& config, std::uint64_t seed, int index) {
  SamplePlan plan;
  plan.seed = derive_seed(seed, static_cast<std::uint64_t>(index));
  Rng rng(plan.seed);
  plan.map_source = rng.index(config.map_sources.size());
  plan.map_seed = rng.next();
  plan.num_regions = rng.integer(config.min_regions, config.max_regions);
  for (int k = 0; k < plan.num_regions; ++k) plan.textures.push_back(rng.index(config.textures.size()));
  plan.background = rng.index(config.backgrounds.size());
  plan.shadow = rng.bernoulli(config.shadow_probability);
  if (plan.shadow) {
    plan.shadow_source = rng.index(config.map_sources.size());
    plan.shadow_seed = rng.next();
    plan.shadow_strength = rng.uniform(config.shadow_strength_min, config.shadow_strength_max);
  }
  return plan;
}

RgbImage load_map_source(const Batch2DConfig& config, std::size_t index) {
  return resize_image(read_rgb(config.map_sources[index].path), config.width, config.height);
}

}  // namespace

std::string sample_dir_name(int index) {
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%06d", index);
  return buf;
}

void write_sample_2d(const fs::path& dir, const RenderedSample2D& sample, const Json& extra_meta) {
  fs::create_directories(dir);
  write_rgb_png(dir / "rgb.png", to_image(linear_to_srgb(sample.rgb), 8));
  const auto codes = quantize_partition(sample.gt_weights);
  const std::size_t k = sample.gt_weights.size() - 1;
  for (std::size_t i = 0; i < k; ++i) {
    write_file_atomic(dir / ("gt_mat" + std::to_string(i) + ".png"),
                      encode_gray16_png(sample.width(), sample.height(), codes[i]));
  }
  write_file_atomic(dir / "gt_background.png",
                    encode_gray16_png(sample.width(), sample.height(), codes.back()));
  Json meta = extra_meta.is_object() ? extra_meta : Json::object();
  meta["seed"] = sample.seed;
  meta["width"] = sample.width();
  meta["height"] = sample.height();
  meta["num_materials"] = k;
  meta["material_ids"] = sample.material_ids;
  meta["color_space"] = "srgb";
  write_json_atomic(dir / "meta.json", meta);
}

std::vector<Plane> read_sample_gt(const fs::path& dir) {
  const Json meta = read_json(dir / "meta.json");
  const int k = meta.at("num_materials").get<int>();
  std::vector<Plane> planes;
  for (int i = 0; i < k; ++i) planes.push_back(read_gray_png(dir / ("gt_mat" + std::to_string(i) + ".png")));
  planes.push_back(read_gray_png(dir / "gt_background.png"));
  return planes;
}

RunManifest generate_batch_2d(const Batch2DConfig& config, int count, std::uint64_t seed,
                              const fs::path& out_dir) {
  if (count > 0 &&
      (config.textures.empty() || config.backgrounds.empty() || config.map_sources.empty())) {
    throw ConfigError("gen2d needs non-empty texture, background and map-source pools");
  }
  if (config.min_regions < 1 || config.max_regions < config.min_regions) {
    throw ConfigError("gen2d region count range is invalid");
  }
  const auto start = std::chrono::steady_clock::now();
  fs::create_directories(out_dir / "samples");
  RunManifest manifest;
  manifest.stage = "gen2d";
  manifest.seed = seed;
  manifest.config_hash = config.config_hash;
  manifest.items.resize(static_cast<std::size_t>(std::max(count, 0)));

  parallel_items(manifest.items.size(), config.workers, [&](std::size_t i) {
    const int index = static_cast<int>(i);
    ItemRecord& record = manifest.items[i];
    record.id = sample_dir_name(index);
    try {
      const SamplePlan plan = plan_sample(config, seed, index);
      const SoftRegionMap map = sample_region_map(load_map_source(config, plan.map_source),
                                                  plan.map_seed, plan.num_regions,
                                                  config.region_maps);
      std::vector<RgbPlanes> textures;
      std::vector<std::string> ids;
      for (std::size_t t : plan.textures) {
        textures.push_back(srgb_to_linear(to_planes(read_rgb(config.textures[t].path))));
        ids.push_back(config.textures[t].id);
      }
      const RgbPlanes background =
          srgb_to_linear(to_planes(read_rgb(config.backgrounds[plan.background].path)));
      std::optional<ShadowSpec> shadow;
      Json shadow_meta = nullptr;
      if (plan.shadow) {
        const SoftRegionMap shade = sample_region_map(load_map_source(config, plan.shadow_source),
                                                      plan.shadow_seed, 1, config.region_maps);
        shadow = ShadowSpec{shade.region_weights[0], plan.shadow_strength};
        shadow_meta = {{"source", config.map_sources[plan.shadow_source].id},
                       {"strength", plan.shadow_strength},
                       {"region_map", region_map_sidecar(shade)}};
      }
      const RenderedSample2D sample =
          compose_scene_2d(map, textures, ids, background, shadow, plan.seed);
      const Json meta = {{"index", index},
                         {"map_source", config.map_sources[plan.map_source].id},
                         {"background", config.backgrounds[plan.background].id},
                         {"region_map", region_map_sidecar(map)},
                         {"shadow", shadow_meta}};
      write_sample_2d(out_dir / "samples" / record.id, sample, meta);
      record.status = ItemStatus::kOk;
    } catch (const std::exception& e) {
      record.status = ItemStatus::kError;
      record.reason = e.what();
    }
  });

  manifest.wall_time_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  manifest.write(out_dir / "manifest.json");
  return manifest;
}

}  // namespace matinfuse
