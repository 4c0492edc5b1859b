// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include "matinfuse/texextract/cell_stats.hpp"

namespace matinfuse {

// Square block of cells.
struct CellRect {
  int row = 0;
  int col = 0;
  int side = 0;

  [[nodiscard]] bool overlaps(const CellRect& other) const;
  [[nodiscard]] bool contains(const CellRect& other) const;
  bool operator==(const CellRect&) const = default;
};

struct DegeneracyCheck {
  bool keep = true;
  // One entry per channel that failed, e.g. "G: too uniform".
  std::vector<std::string> reasons;
};

// Discards a region when every one of R, G, B is too uniform, too dark or too
// bright.
DegeneracyCheck filter_degenerate(const CellStats& stats, const DegenerateThresholds& thresholds);

struct UniformRegion {
  CellRect rect;
  CellStats aggregate;
  DegeneracyCheck check;
};

struct RegionSearchResult {
  std::vector<UniformRegion> regions;    // kept, non-overlapping
  std::vector<UniformRegion> discarded;  // rejected by filter_degenerate, non-overlapping
};

// Every pair of cells in a returned region passes all six histogram
// comparisons below config.js_threshold. Each anchor (top-left cell) grows
// its largest passing square; squares inside another candidate are dropped.
// Candidates are split by filter_degenerate, then overlaps are resolved in
// favour of the larger square (ties: top-most, then left-most).
RegionSearchResult find_uniform_regions(const CellGrid& grid, const ExtractionConfig& config);

// True when all six histograms of the two cells are within the threshold.
bool cells_similar(const CellGrid& grid, int a, int b, double js_threshold);

}  // namespace matinfuse
