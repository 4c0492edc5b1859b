// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include <json.hpp>

#include "matinfuse/pbrsynth/material.hpp"

namespace matinfuse {

// Directory layout: albedo.png (8-bit RGB), <property>.png for spatial
// properties (16-bit gray), normal.png (16-bit RGB), material.json.
void write_material(const std::filesystem::path& dir, const PbrMaterial& material);
PbrMaterial read_material(const std::filesystem::path& dir);

nlohmann::json material_manifest(const PbrMaterial& material);
nlohmann::json augment_to_json(const AugmentSpec& spec);

}  // namespace matinfuse
