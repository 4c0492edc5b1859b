// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "matinfuse/core/image.hpp"
#include "matinfuse/texextract/region_search.hpp"

namespace matinfuse {

struct TextureTile {
  RgbImage pixels;
  std::string source_id;
  CellRect region;
  int cell_size = 0;
  CellStats aggregate;

  // "<source>@r<row>_c<col>_s<side>"
  [[nodiscard]] std::string id() const;
};

// Throws ParameterError if the region lies outside the image.
TextureTile extract_texture(const RgbImage& image, const UniformRegion& region, int cell_size,
                            std::string source_id);

struct ExtractionResult {
  std::vector<TextureTile> tiles;
  RegionSearchResult search;
  int grid_rows = 0;
  int grid_cols = 0;
};

// Cell statistics, region search and cropping for one image.
ExtractionResult extract_textures(const RgbImage& image, const std::string& source_id,
                                  const ExtractionConfig& config);

}  // namespace matinfuse
