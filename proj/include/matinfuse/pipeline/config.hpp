// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "matinfuse/benchmetrics/triplet.hpp"
#include "matinfuse/imagemaps/region_map.hpp"
#include "matinfuse/pbrsynth/material.hpp"
#include "matinfuse/pbrsynth/mixing.hpp"
#include "matinfuse/scene3d/builder.hpp"
#include "matinfuse/texextract/config.hpp"

namespace matinfuse {

struct Gen2DSettings {
  int count = 100;
  int width = 512;
  int height = 512;
  double shadow_probability = 0.5;
  double shadow_strength_min = 0.3;
  double shadow_strength_max = 0.8;
};

struct Gen3DSettings {
  int count = 10;
  std::filesystem::path asset_index;
  SceneOptions scene;
};

struct MetricSettings {
  SoftMode soft_mode = SoftMode::kAnyPointInSimilarGroup;
  int iou_points_per_segment = 5;
};

struct PipelineConfig {
  std::vector<std::filesystem::path> corpus_roots;
  std::filesystem::path output_root = "out";
  std::uint64_t seed = 0;
  int workers = 1;
  ExtractionConfig extraction;
  RegionMapOptions region_maps;
  int min_regions = 2;
  int max_regions = 4;
  SynthOptions synth;
  int mix_count = 0;
  MixMode mix_mode = MixMode::kPerMaterial;
  Gen2DSettings gen2d;
  Gen3DSettings gen3d;
  MetricSettings metrics;
  // Runs whose error fraction exceeds this exit with status 2.
  double max_failure_rate = 0.0;

  // Throws ConfigError.
  void validate() const;
};

// Missing keys keep their defaults; unknown keys are rejected. Relative paths
// are resolved against base_dir.
PipelineConfig config_from_json(const nlohmann::json& j, const std::filesystem::path& base_dir);
PipelineConfig load_config(const std::filesystem::path& path);
nlohmann::json config_to_json(const PipelineConfig& config);
// sha256 of the canonical serialization without workers and output_root.
std::string config_hash(const PipelineConfig& config);

}  // namespace matinfuse
