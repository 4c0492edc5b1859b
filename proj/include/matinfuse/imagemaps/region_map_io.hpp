// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>

#include <json.hpp>

#include "matinfuse/imagemaps/region_map.hpp"

namespace matinfuse {

// Writes region_<k>.png (16-bit, k from 0), background.png and
// region_map.json {seed, width, height, regions: [{channel, t_low, t_high}]}.
// Codes at each pixel sum to 65535 across all planes.
void write_region_map(const std::filesystem::path& dir, const SoftRegionMap& map);
SoftRegionMap read_region_map(const std::filesystem::path& dir);

nlohmann::json region_map_sidecar(const SoftRegionMap& map);

}  // namespace matinfuse
