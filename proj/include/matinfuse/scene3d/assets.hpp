// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

namespace matinfuse {

struct AssetEntry {
  std::string id;
  std::filesystem::path path;  // relative to the index directory
  std::string license;
  // Meshes only: whether the mesh carries its own UV layout, and the radius
  // of its bounding sphere at unit scale.
  bool has_uv = true;
  double radius = 1.0;

  bool operator==(const AssetEntry&) const = default;
};

struct AssetIndex {
  std::filesystem::path base_dir;
  std::vector<AssetEntry> meshes;
  std::vector<AssetEntry> hdris;
  std::vector<AssetEntry> materials;

  [[nodiscard]] const AssetEntry* find_mesh(std::string_view id) const;
  [[nodiscard]] const AssetEntry* find_hdri(std::string_view id) const;
  [[nodiscard]] const AssetEntry* find_material(std::string_view id) const;

  bool operator==(const AssetIndex&) const = default;
};

// {"schema_version": 1, "meshes": [...], "hdris": [...], "materials": [...]}
// with entries {"id", "path", "license", "has_uv"?, "radius"?}.
AssetIndex parse_asset_index(const nlohmann::json& j, const std::filesystem::path& base_dir);
AssetIndex load_asset_index(const std::filesystem::path& path);
nlohmann::json asset_index_to_json(const AssetIndex& index);

// Problems with the index itself: duplicate ids, and when check_paths is set,
// paths missing on disk.
std::vector<std::string> check_asset_index(const AssetIndex& index, bool check_paths);

}  // namespace matinfuse
