// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/scene3d/validate.hpp"

#include <algorithm>
#include <set>

#include "matinfuse/scene3d/builder.hpp"

namespace matinfuse {
namespace {

bool unit(double v) { return v >= 0.0 && v <= 1.0; }

void check_material(const MaterialRef& m, const AssetIndex& assets, const std::string& where,
                    ValidationReport& report) {
  if (m.uniform) {
    const auto& u = *m.uniform;
    const bool ok = std::all_of(u.albedo.begin(), u.albedo.end(), unit) && unit(u.roughness) &&
                    unit(u.metallic) && unit(u.transmission) && unit(u.specular);
    if (!ok) report.failures.push_back({"uniform material out of range", where});
    if (!m.asset_id.empty()) report.failures.push_back({"ambiguous material", where});
    return;
  }
  if (assets.find_material(m.asset_id) == nullptr) {
    report.failures.push_back({"unresolved asset", "material:" + m.asset_id});
  }
}

}  // namespace

bool ValidationReport::has(const std::string& rule) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const ValidationFailure& f) { return f.rule == rule; });
}

nlohmann::json ValidationReport::to_json() const {
  nlohmann::json list = nlohmann::json::array();
  for (const auto& f : failures) list.push_back({{"rule", f.rule}, {"subject", f.subject}});
  return {{"ok", ok()}, {"failures", list}};
}

ValidationReport validate_descriptor(const Scene3DDescriptor& d, const AssetIndex& assets) {
  ValidationReport report;
  if (d.schema_version != kSceneSchemaVersion) {
    report.failures.push_back({"unsupported schema", std::to_string(d.schema_version)});
  }
  if (d.objects.empty()) report.failures.push_back({"no objects", "objects"});

  for (std::size_t i = 0; i < d.objects.size(); ++i) {
    const SceneObject& o = d.objects[i];
    const std::string where = "objects[" + std::to_string(i) + "]";
    if (assets.find_mesh(o.mesh_id) == nullptr) {
      report.failures.push_back({"unresolved asset", "mesh:" + o.mesh_id});
    }
    if (o.uv_projection != "mesh_uv" && o.uv_projection != "box") {
      report.failures.push_back({"unknown uv projection", where + ":" + o.uv_projection});
    }
    const auto map = std::find_if(d.region_maps.begin(), d.region_maps.end(),
                                  [&](const RegionMapRef& m) { return m.id == o.uv_map_id; });
    if (map == d.region_maps.end()) {
      report.failures.push_back({"unknown region map", where + ":" + o.uv_map_id});
    }
    if (o.materials.empty()) report.failures.push_back({"empty material table", where});
    std::set<int> assigned;
    for (const auto& b : o.materials) {
      if (map != d.region_maps.end() && (b.region < 0 || b.region >= map->num_regions)) {
        report.failures.push_back({"unknown region", where + ":region " + std::to_string(b.region)});
      }
      if (!assigned.insert(b.region).second) {
        report.failures.push_back({"duplicate region", where + ":region " + std::to_string(b.region)});
      }
      check_material(b.material, assets, where, report);
    }
    if (map != d.region_maps.end()) {
      for (int k = 0; k < map->num_regions; ++k) {
        if (!assigned.count(k)) {
          report.failures.push_back({"unassigned region", where + ":region " + std::to_string(k)});
        }
      }
      if (o.residual_region < 0 || o.residual_region >= map->num_regions) {
        report.failures.push_back({"unknown region", where + ":residual_region"});
      }
    }
  }
  for (std::size_t i = 0; i < d.extra_objects.size(); ++i) {
    const PropObject& p = d.extra_objects[i];
    if (assets.find_mesh(p.mesh_id) == nullptr) {
      report.failures.push_back({"unresolved asset", "mesh:" + p.mesh_id});
    }
    check_material(p.material, assets, "extra_objects[" + std::to_string(i) + "]", report);
  }
  if (d.ground) check_material(d.ground->material, assets, "ground", report);
  if (assets.find_hdri(d.hdri.asset_id) == nullptr) {
    report.failures.push_back({"unresolved asset", "hdri:" + d.hdri.asset_id});
  }
  for (std::size_t i = 0; i < d.lights.size(); ++i) {
    if (d.lights[i].power < 0.0) {
      report.failures.push_back({"negative light power", "lights[" + std::to_string(i) + "]"});
    }
  }
  if (!d.objects.empty()) {
    const Bounds bounds = scene_bounds(d, assets);
    if (!bounds.contains(d.camera.look_at, 1e-6)) {
      report.failures.push_back({"camera look-at outside scene bounds", "camera.look_at"});
    }
  }
  if (d.camera.focal_length_mm <= 0.0) {
    report.failures.push_back({"invalid focal length", "camera.focal_length_mm"});
  }
  if (d.render.width <= 0 || d.render.height <= 0 || d.render.samples <= 0) {
    report.failures.push_back({"invalid render settings", "render"});
  }
  return report;
}

}  // namespace matinfuse
