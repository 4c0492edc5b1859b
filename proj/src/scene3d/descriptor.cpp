// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/scene3d/descriptor.hpp"

#include "matinfuse/core/error.hpp"

namespace matinfuse {
namespace {

using Json = nlohmann::json;

// Field access that reports the JSON path on failure.
template <typename T>
T field(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError("scene descriptor: missing field " + path + "." + key);
  }
  try {
    return j.at(key).get<T>();
  } catch (const Json::exception&) {
    throw FormatError("scene descriptor: bad type for " + path + "." + key);
  }
}

const Json& child(const Json& j, const std::string& key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) {
    throw FormatError("scene descriptor: missing field " + path + "." + key);
  }
  return j.at(key);
}

Json to_json(const Vec3& v) { return Json::array({v.x, v.y, v.z}); }

Vec3 vec3_from(const Json& j, const std::string& path) {
  if (!j.is_array() || j.size() != 3) throw FormatError("scene descriptor: " + path + " must be [x,y,z]");
  try {
    return {j[0].get<double>(), j[1].get<double>(), j[2].get<double>()};
  } catch (const Json::exception&) {
    throw FormatError("scene descriptor: " + path + " must hold numbers");
  }
}

Json to_json(const Transform& t) {
  return {{"translation", to_json(t.translation)},
          {"rotation_deg", to_json(t.rotation_deg)},
          {"scale", t.scale}};
}

Transform transform_from(const Json& j, const std::string& path) {
  return {vec3_from(child(j, "translation", path), path + ".translation"),
          vec3_from(child(j, "rotation_deg", path), path + ".rotation_deg"),
          field<double>(j, "scale", path)};
}

Json to_json(const MaterialRef& m) {
  if (m.uniform) {
    const auto& u = *m.uniform;
    return {{"uniform",
             {{"albedo", u.albedo},
              {"roughness", u.roughness},
              {"metallic", u.metallic},
              {"transmission", u.transmission},
              {"specular", u.specular}}}};
  }
  return {{"asset", m.asset_id}};
}

MaterialRef material_from(const Json& j, const std::string& path) {
  MaterialRef m;
  if (j.is_object() && j.contains("uniform")) {
    const Json& u = j.at("uniform");
    const std::string p = path + ".uniform";
    UniformMaterial um;
    um.albedo = field<std::array<double, 3>>(u, "albedo", p);
    um.roughness = field<double>(u, "roughness", p);
    um.metallic = field<double>(u, "metallic", p);
    um.transmission = field<double>(u, "transmission", p);
    um.specular = field<double>(u, "specular", p);
    m.uniform = um;
  } else {
    m.asset_id = field<std::string>(j, "asset", path);
  }
  return m;
}

}  // namespace

Json descriptor_to_json(const Scene3DDescriptor& d) {
  Json maps = Json::array();
  for (const auto& m : d.region_maps) {
    maps.push_back({{"id", m.id}, {"path", m.path}, {"num_regions", m.num_regions}});
  }
  Json objects = Json::array();
  for (const auto& o : d.objects) {
    Json table = Json::array();
    for (const auto& b : o.materials) {
      table.push_back({{"region", b.region}, {"material", to_json(b.material)}});
    }
    objects.push_back({{"mesh", o.mesh_id},
                       {"transform", to_json(o.transform)},
                       {"uv_map", o.uv_map_id},
                       {"uv_projection", o.uv_projection},
                       {"residual_region", o.residual_region},
                       {"materials", table}});
  }
  Json extras = Json::array();
  for (const auto& p : d.extra_objects) {
    extras.push_back({{"mesh", p.mesh_id},
                      {"transform", to_json(p.transform)},
                      {"material", to_json(p.material)}});
  }
  Json lights = Json::array();
  for (const auto& l : d.lights) {
    lights.push_back({{"type", l.type}, {"position", to_json(l.position)}, {"power", l.power}});
  }
  Json ground = nullptr;
  if (d.ground) ground = {{"size", d.ground->size}, {"material", to_json(d.ground->material)}};
  return {{"schema_version", d.schema_version},
          {"seed", d.seed},
          {"region_maps", maps},
          {"objects", objects},
          {"extra_objects", extras},
          {"ground", ground},
          {"hdri", {{"asset", d.hdri.asset_id}, {"rotation_deg", d.hdri.rotation_deg}}},
          {"lights", lights},
          {"camera",
           {{"position", to_json(d.camera.position)},
            {"look_at", to_json(d.camera.look_at)},
            {"focal_length_mm", d.camera.focal_length_mm}}},
          {"render",
           {{"resolution", {d.render.width, d.render.height}}, {"samples", d.render.samples}}}};
}

Scene3DDescriptor descriptor_from_json(const Json& j) {
  Scene3DDescriptor d;
  const std::string root = "$";
  d.schema_version = field<int>(j, "schema_version", root);
  if (d.schema_version != kSceneSchemaVersion) {
    throw FormatError("scene descriptor: unsupported schema_version " +
                      std::to_string(d.schema_version));
  }
  d.seed = field<std::uint64_t>(j, "seed", root);
  std::size_t i = 0;
  for (const auto& m : child(j, "region_maps", root)) {
    const std::string p = "$.region_maps[" + std::to_string(i++) + "]";
    d.region_maps.push_back({field<std::string>(m, "id", p), field<std::string>(m, "path", p),
                             field<int>(m, "num_regions", p)});
  }
  i = 0;
  for (const auto& o : child(j, "objects", root)) {
    const std::string p = "$.objects[" + std::to_string(i++) + "]";
    SceneObject obj;
    obj.mesh_id = field<std::string>(o, "mesh", p);
    obj.transform = transform_from(child(o, "transform", p), p + ".transform");
    obj.uv_map_id = field<std::string>(o, "uv_map", p);
    obj.uv_projection = field<std::string>(o, "uv_projection", p);
    obj.residual_region = field<int>(o, "residual_region", p);
    std::size_t k = 0;
    for (const auto& b : child(o, "materials", p)) {
      const std::string bp = p + ".materials[" + std::to_string(k++) + "]";
      obj.materials.push_back(
          {field<int>(b, "region", bp), material_from(child(b, "material", bp), bp + ".material")});
    }
    d.objects.push_back(std::move(obj));
  }
  i = 0;
  for (const auto& e : child(j, "extra_objects", root)) {
    const std::string p = "$.extra_objects[" + std::to_string(i++) + "]";
    d.extra_objects.push_back({field<std::string>(e, "mesh", p),
                               transform_from(child(e, "transform", p), p + ".transform"),
                               material_from(child(e, "material", p), p + ".material")});
  }
  const Json& ground = child(j, "ground", root);
  if (!ground.is_null()) {
    d.ground = Ground{field<double>(ground, "size", "$.ground"),
                      material_from(child(ground, "material", "$.ground"), "$.ground.material")};
  }
  const Json& hdri = child(j, "hdri", root);
  d.hdri = {field<std::string>(hdri, "asset", "$.hdri"), field<double>(hdri, "rotation_deg", "$.hdri")};
  i = 0;
  for (const auto& l : child(j, "lights", root)) {
    const std::string p = "$.lights[" + std::to_string(i++) + "]";
    d.lights.push_back({field<std::string>(l, "type", p),
                        vec3_from(child(l, "position", p), p + ".position"),
                        field<double>(l, "power", p)});
  }
  const Json& cam = child(j, "camera", root);
  d.camera = {vec3_from(child(cam, "position", "$.camera"), "$.camera.position"),
              vec3_from(child(cam, "look_at", "$.camera"), "$.camera.look_at"),
              field<double>(cam, "focal_length_mm", "$.camera")};
  const Json& render = child(j, "render", root);
  const auto res = field<std::array<int, 2>>(render, "resolution", "$.render");
  d.render = {res[0], res[1], field<int>(render, "samples", "$.render")};
  return d;
}

std::string serialize_descriptor(const Scene3DDescriptor& desc) {
  return descriptor_to_json(desc).dump(2) + "\n";
}

Scene3DDescriptor parse_descriptor(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    throw FormatError(std::string("scene descriptor: ") + e.what());
  }
  return descriptor_from_json(j);
}

PbrMaterial to_pbr(const UniformMaterial& m, int width, int height) {
  PbrMaterial out;
  out.id = "uniform";
  out.width = width;
  out.height = height;
  for (int c = 0; c < 3; ++c) out.albedo[c] = Plane(width, height, m.albedo[c]);
  out[Property::kRoughness] = m.roughness;
  out[Property::kMetallic] = m.metallic;
  out[Property::kHeight] = 0.5;
  out[Property::kTransmission] = m.transmission;
  out[Property::kSpecular] = m.specular;
  out.normal = flat_normal(width, height);
  return out;
}

}  // namespace matinfuse
