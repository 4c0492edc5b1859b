// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "matinfuse/pbrsynth/material.hpp"

namespace matinfuse {

inline constexpr int kSceneSchemaVersion = 1;

struct Vec3 {
  double x = 0.0;
  double y = 0.0;
  double z = 0.0;
  bool operator==(const Vec3&) const = default;
};

// Z-up world, rotation as XYZ Euler angles in degrees.
struct Transform {
  Vec3 translation;
  Vec3 rotation_deg;
  double scale = 1.0;
  bool operator==(const Transform&) const = default;
};

// Textureless material: one value per property.
struct UniformMaterial {
  std::array<double, 3> albedo{0.5, 0.5, 0.5};
  double roughness = 0.5;
  double metallic = 0.0;
  double transmission = 0.0;
  double specular = 0.5;
  bool operator==(const UniformMaterial&) const = default;
};

// Exactly one of asset_id / uniform is set.
struct MaterialRef {
  std::string asset_id;
  std::optional<UniformMaterial> uniform;
  bool operator==(const MaterialRef&) const = default;
};

struct RegionBinding {
  int region = 0;
  MaterialRef material;
  bool operator==(const RegionBinding&) const = default;
};

struct RegionMapRef {
  std::string id;
  std::string path;  // directory written by write_region_map, relative to scene.json
  int num_regions = 0;
  bool operator==(const RegionMapRef&) const = default;
};

struct SceneObject {
  std::string mesh_id;
  Transform transform;
  std::string uv_map_id;
  std::string uv_projection = "mesh_uv";  // or "box" for meshes without UVs
  std::vector<RegionBinding> materials;
  // Region whose material also covers the map's background residual.
  int residual_region = 0;
  bool operator==(const SceneObject&) const = default;
};

struct PropObject {
  std::string mesh_id;
  Transform transform;
  MaterialRef material;
  bool operator==(const PropObject&) const = default;
};

struct Ground {
  double size = 20.0;
  MaterialRef material;
  bool operator==(const Ground&) const = default;
};

struct HdriRef {
  std::string asset_id;
  double rotation_deg = 0.0;
  bool operator==(const HdriRef&) const = default;
};

struct Light {
  std::string type = "point";
  Vec3 position;
  double power = 0.0;  // watts
  bool operator==(const Light&) const = default;
};

struct Camera {
  Vec3 position;
  Vec3 look_at;
  double focal_length_mm = 35.0;
  bool operator==(const Camera&) const = default;
};

struct RenderSettings {
  int width = 768;
  int height = 768;
  int samples = 64;
  bool operator==(const RenderSettings&) const = default;
};

struct Scene3DDescriptor {
  int schema_version = kSceneSchemaVersion;
  std::uint64_t seed = 0;
  std::vector<RegionMapRef> region_maps;
  std::vector<SceneObject> objects;
  std::vector<PropObject> extra_objects;
  std::optional<Ground> ground;
  HdriRef hdri;
  std::vector<Light> lights;
  Camera camera;
  RenderSettings render;
  bool operator==(const Scene3DDescriptor&) const = default;
};

nlohmann::json descriptor_to_json(const Scene3DDescriptor& desc);
// Throws FormatError naming the offending field.
Scene3DDescriptor descriptor_from_json(const nlohmann::json& j);
std::string serialize_descriptor(const Scene3DDescriptor& desc);
Scene3DDescriptor parse_descriptor(std::string_view text);

// The textureless material as a PbrMaterial whose properties are all uniform.
PbrMaterial to_pbr(const UniformMaterial& material, int width, int height);

}  // namespace matinfuse
