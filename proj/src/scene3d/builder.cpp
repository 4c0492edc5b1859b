// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/scene3d/builder.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "matinfuse/core/error.hpp"
#include "matinfuse/core/rng.hpp"

namespace matinfuse {
namespace {

constexpr double kDegToRad = std::numbers::pi / 180.0;

UniformMaterial draw_uniform_material(Rng& rng) {
  UniformMaterial m;
  for (double& c : m.albedo) c = rng.uniform();
  m.roughness = rng.uniform();
  m.metallic = rng.uniform();
  m.transmission = rng.uniform();
  m.specular = rng.uniform();
  return m;
}

MaterialRef draw_material(Rng& rng, const AssetIndex& assets, double textureless_probability) {
  MaterialRef ref;
  if (rng.bernoulli(textureless_probability)) {
    ref.uniform = draw_uniform_material(rng);
  } else {
    ref.asset_id = assets.materials[rng.index(assets.materials.size())].id;
  }
  return ref;
}

Transform place_on_ground(Rng& rng, const AssetEntry& mesh, double ring_min, double ring_max,
                          const SceneOptions& options) {
  Transform t;
  const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double dist = rng.uniform(ring_min, ring_max);
  t.scale = rng.uniform(options.object_scale_min, options.object_scale_max);
  t.translation = {dist * std::cos(angle), dist * std::sin(angle), mesh.radius * t.scale};
  t.rotation_deg = {0.0, 0.0, rng.uniform(0.0, 360.0)};
  return t;
}

}  // namespace

bool Bounds::contains(const Vec3& p, double tolerance) const {
  return p.x >= min.x - tolerance && p.x <= max.x + tolerance && p.y >= min.y - tolerance &&
         p.y <= max.y + tolerance && p.z >= min.z - tolerance && p.z <= max.z + tolerance;
}

Bounds scene_bounds(const Scene3DDescriptor& desc, const AssetIndex& assets) {
  constexpr double inf = std::numeric_limits<double>::infinity();
  Bounds b{{inf, inf, inf}, {-inf, -inf, -inf}};
  const auto add = [&](const std::string& mesh_id, const Transform& t) {
    const AssetEntry* mesh = assets.find_mesh(mesh_id);
    if (mesh == nullptr) return;
    const double r = mesh->radius * t.scale;
    b.min = {std::min(b.min.x, t.translation.x - r), std::min(b.min.y, t.translation.y - r),
             std::min(b.min.z, t.translation.z - r)};
    b.max = {std::max(b.max.x, t.translation.x + r), std::max(b.max.y, t.translation.y + r),
             std::max(b.max.z, t.translation.z + r)};
  };
  for (const auto& o : desc.objects) add(o.mesh_id, o.transform);
  for (const auto& o : desc.extra_objects) add(o.mesh_id, o.transform);
  return b;
}

Scene3DDescriptor build_scene_descriptor(const AssetIndex& assets, const RegionMapRef& map,
                                         std::span<const std::string> material_ids,
                                         std::uint64_t seed, const SceneOptions& options) {
  if (assets.meshes.empty() || assets.hdris.empty() || assets.materials.empty()) {
    throw ConfigError("asset index needs meshes, hdris and materials");
  }
  if (map.num_regions < 1 || static_cast<int>(material_ids.size()) != map.num_regions) {
    throw ParameterError("material count " + std::to_string(material_ids.size()) +
                         " does not match region count " + std::to_string(map.num_regions));
  }
  Rng rng(seed);
  Scene3DDescriptor d;
  d.seed = seed;
  d.region_maps.push_back(map);
  d.render = options.render;

  std::vector<RegionBinding> table;
  for (int k = 0; k < map.num_regions; ++k) {
    RegionBinding binding{k, {material_ids[static_cast<std::size_t>(k)], std::nullopt}};
    if (rng.bernoulli(options.textureless_probability)) {
      binding.material = {"", draw_uniform_material(rng)};
    }
    table.push_back(std::move(binding));
  }

  const int num_objects = rng.integer(options.min_objects, options.max_objects);
  for (int i = 0; i < num_objects; ++i) {
    const AssetEntry& mesh = assets.meshes[rng.index(assets.meshes.size())];
    SceneObject obj;
    obj.mesh_id = mesh.id;
    // The first object sits at the origin; the rest scatter around it.
    obj.transform = place_on_ground(rng, mesh, 0.0, i == 0 ? 0.0 : options.placement_extent, options);
    obj.uv_map_id = map.id;
    obj.uv_projection = mesh.has_uv ? "mesh_uv" : "box";
    obj.materials = table;
    obj.residual_region = 0;
    d.objects.push_back(std::move(obj));
  }

  const int num_extra = rng.integer(options.min_distractors, options.max_distractors);
  for (int i = 0; i < num_extra; ++i) {
    const AssetEntry& mesh = assets.meshes[rng.index(assets.meshes.size())];
    PropObject prop;
    prop.mesh_id = mesh.id;
    prop.transform = place_on_ground(rng, mesh, options.placement_extent,
                                     2.0 * options.placement_extent, options);
    prop.material = draw_material(rng, assets, options.textureless_probability);
    d.extra_objects.push_back(std::move(prop));
  }

  if (rng.bernoulli(options.ground_probability)) {
    d.ground = Ground{20.0, draw_material(rng, assets, options.textureless_probability)};
  }

  d.hdri = {assets.hdris[rng.index(assets.hdris.size())].id, rng.uniform(0.0, 360.0)};

  const Bounds bounds = scene_bounds(d, assets);
  const Vec3 center{0.5 * (bounds.min.x + bounds.max.x), 0.5 * (bounds.min.y + bounds.max.y),
                    0.5 * (bounds.min.z + bounds.max.z)};
  const Vec3 half{0.5 * (bounds.max.x - bounds.min.x), 0.5 * (bounds.max.y - bounds.min.y),
                  0.5 * (bounds.max.z - bounds.min.z)};
  const double radius = std::sqrt(half.x * half.x + half.y * half.y + half.z * half.z);

  if (rng.bernoulli(options.light_probability)) {
    const int num_lights = rng.integer(1, std::max(1, options.max_lights));
    for (int i = 0; i < num_lights; ++i) {
      const double angle = rng.uniform(0.0, 2.0 * std::numbers::pi);
      const double dist = radius * rng.uniform(1.0, 3.0);
      d.lights.push_back({"point",
                          {center.x + dist * std::cos(angle), center.y + dist * std::sin(angle),
                           bounds.max.z + radius * rng.uniform(0.5, 2.0)},
                          rng.uniform(options.light_power_min, options.light_power_max)});
    }
  }

  const double jitter = std::clamp(options.look_at_jitter, 0.0, 1.0);
  d.camera.look_at = {center.x + half.x * jitter * rng.uniform(-1.0, 1.0),
                      center.y + half.y * jitter * rng.uniform(-1.0, 1.0),
                      center.z + half.z * jitter * rng.uniform(-1.0, 1.0)};
  const double distance = radius * rng.uniform(options.camera_distance_min, options.camera_distance_max);
  const double azimuth = rng.uniform(0.0, 2.0 * std::numbers::pi);
  const double elevation =
      kDegToRad * rng.uniform(options.camera_elevation_min_deg, options.camera_elevation_max_deg);
  d.camera.position = {d.camera.look_at.x + distance * std::cos(elevation) * std::cos(azimuth),
                       d.camera.look_at.y + distance * std::cos(elevation) * std::sin(azimuth),
                       d.camera.look_at.z + distance * std::sin(elevation)};
  d.camera.focal_length_mm = rng.uniform(options.focal_length_min_mm, options.focal_length_max_mm);
  return d;
}

Scene3DDescriptor build_scene_descriptor(const AssetIndex& assets, const SoftRegionMap& map,
                                         const std::string& map_id,
                                         std::span<const std::string> material_ids,
                                         std::uint64_t seed, const SceneOptions& options) {
  return build_scene_descriptor(assets, RegionMapRef{map_id, map_id, map.num_regions()},
                                material_ids, seed, options);
}

}  // namespace matinfuse
