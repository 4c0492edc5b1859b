// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/scene3d/assets.hpp"

#include <algorithm>
#include <set>

#include "matinfuse/core/error.hpp"
#include "matinfuse/core/io.hpp"

namespace matinfuse {
namespace {

const AssetEntry* find(const std::vector<AssetEntry>& catalog, std::string_view id) {
  const auto it = std::find_if(catalog.begin(), catalog.end(),
                               [&](const AssetEntry& e) { return e.id == id; });
  return it == catalog.end() ? nullptr : &*it;
}

std::vector<AssetEntry> parse_catalog(const Json& j, const char* name) {
  std::vector<AssetEntry> out;
  if (!j.contains(name)) return out;
  std::size_t i = 0;
  for (const auto& e : j.at(name)) {
    const std::string where = std::string(name) + "[" + std::to_string(i++) + "]";
    try {
      AssetEntry entry;
      entry.id = e.at("id").get<std::string>();
      entry.path = e.at("path").get<std::string>();
      entry.license = e.value("license", "");
      entry.has_uv = e.value("has_uv", true);
      entry.radius = e.value("radius", 1.0);
      out.push_back(std::move(entry));
    } catch (const Json::exception& ex) {
      throw FormatError("asset index " + where + ": " + ex.what());
    }
  }
  return out;
}

Json catalog_to_json(const std::vector<AssetEntry>& catalog, bool mesh) {
  Json out = Json::array();
  for (const auto& e : catalog) {
    Json j = {{"id", e.id}, {"path", e.path.generic_string()}, {"license", e.license}};
    if (mesh) {
      j["has_uv"] = e.has_uv;
      j["radius"] = e.radius;
    }
    out.push_back(std::move(j));
  }
  return out;
}

}  // namespace

const AssetEntry* AssetIndex::find_mesh(std::string_view id) const { return find(meshes, id); }
const AssetEntry* AssetIndex::find_hdri(std::string_view id) const { return find(hdris, id); }
const AssetEntry* AssetIndex::find_material(std::string_view id) const {
  return find(materials, id);
}

AssetIndex parse_asset_index(const Json& j, const fs::path& base_dir) {
  if (!j.is_object()) throw FormatError("asset index: expected an object");
  AssetIndex index;
  index.base_dir = base_dir;
  index.meshes = parse_catalog(j, "meshes");
  index.hdris = parse_catalog(j, "hdris");
  index.materials = parse_catalog(j, "materials");
  return index;
}

AssetIndex load_asset_index(const fs::path& path) {
  return parse_asset_index(read_json(path), path.parent_path());
}

Json asset_index_to_json(const AssetIndex& index) {
  return {{"schema_version", 1},
          {"meshes", catalog_to_json(index.meshes, true)},
          {"hdris", catalog_to_json(index.hdris, false)},
          {"materials", catalog_to_json(index.materials, false)}};
}

std::vector<std::string> check_asset_index(const AssetIndex& index, bool check_paths) {
  std::vector<std::string> problems;
  const auto check = [&](const std::vector<AssetEntry>& catalog, const char* name) {
    std::set<std::string> seen;
    for (const auto& e : catalog) {
      if (!seen.insert(e.id).second) problems.push_back(std::string(name) + ": duplicate id " + e.id);
      if (check_paths && !fs::exists(index.base_dir / e.path)) {
        problems.push_back(std::string(name) + ": missing path for " + e.id);
      }
    }
  };
  check(index.meshes, "meshes");
  check(index.hdris, "hdris");
  check(index.materials, "materials");
  return problems;
}

}  // namespace matinfuse
