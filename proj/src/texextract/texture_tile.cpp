// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/texextract/texture_tile.hpp"

#include "matinfuse/core/error.hpp"

namespace matinfuse {

std::string TextureTile::id() const {
  return source_id + "@r" + std::to_string(region.row) + "_c" + std::to_string(region.col) +
         "_s" + std::to_string(region.side);
}

TextureTile extract_texture(const RgbImage& image, const UniformRegion& region, int cell_size,
                            std::string source_id) {
  const CellRect& r = region.rect;
  if (cell_size <= 0 || r.side <= 0 || r.row < 0 || r.col < 0 ||
      (r.col + r.side) * cell_size > image.width || (r.row + r.side) * cell_size > image.height) {
    throw ParameterError("texture region outside image bounds");
  }
  TextureTile tile;
  tile.pixels = image.crop(r.col * cell_size, r.row * cell_size, r.side * cell_size,
                           r.side * cell_size);
  tile.source_id = std::move(source_id);
  tile.region = r;
  tile.cell_size = cell_size;
  tile.aggregate = region.aggregate;
  return tile;
}

ExtractionResult extract_textures(const RgbImage& image, const std::string& source_id,
                                  const ExtractionConfig& config) {
  const CellGrid grid = compute_cell_stats(image, config);
  ExtractionResult result;
  result.grid_rows = grid.rows;
  result.grid_cols = grid.cols;
  result.search = find_uniform_regions(grid, config);
  for (const auto& region : result.search.regions) {
    result.tiles.push_back(extract_texture(image, region, config.cell_size, source_id));
  }
  return result;
}

}  // namespace matinfuse
