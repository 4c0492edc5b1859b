// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <string>

#include "matinfuse/imagemaps/region_map.hpp"
#include "matinfuse/scene3d/assets.hpp"
#include "matinfuse/scene3d/descriptor.hpp"

namespace matinfuse {

struct SceneOptions {
  int min_objects = 1;
  int max_objects = 3;
  int min_distractors = 0;
  int max_distractors = 3;
  double ground_probability = 0.7;
  double light_probability = 0.3;
  int max_lights = 2;
  double light_power_min = 200.0;
  double light_power_max = 1500.0;
  double textureless_probability = 0.15;
  double object_scale_min = 0.7;
  double object_scale_max = 1.3;
  double placement_extent = 1.5;
  double camera_distance_min = 2.0;  // multiples of the scene bounding radius
  double camera_distance_max = 3.5;
  double camera_elevation_min_deg = 5.0;
  double camera_elevation_max_deg = 60.0;
  double focal_length_min_mm = 24.0;
  double focal_length_max_mm = 70.0;
  double look_at_jitter = 0.25;  // fraction of the bounds half-extent
  RenderSettings render;
};

// Axis-aligned bounds of the bounding spheres of all placed objects.
struct Bounds {
  Vec3 min;
  Vec3 max;
  [[nodiscard]] bool contains(const Vec3& p, double tolerance = 1e-9) const;
};
Bounds scene_bounds(const Scene3DDescriptor& desc, const AssetIndex& assets);

// Region k of the map gets material_ids[k] (or, with textureless_probability,
// a uniform random material). Throws ConfigError when a catalog is empty and
// ParameterError when material_ids.size() != map regions.
Scene3DDescriptor build_scene_descriptor(const AssetIndex& assets, const RegionMapRef& map,
                                         std::span<const std::string> material_ids,
                                         std::uint64_t seed, const SceneOptions& options = {});
Scene3DDescriptor build_scene_descriptor(const AssetIndex& assets, const SoftRegionMap& map,
                                         const std::string& map_id,
                                         std::span<const std::string> material_ids,
                                         std::uint64_t seed, const SceneOptions& options = {});

}  // namespace matinfuse
