// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <vector>

#include "matinfuse/core/image.hpp"
#include "matinfuse/texextract/config.hpp"

namespace matinfuse {

// Histogram order: R, G, B values then R, G, B gradient magnitudes.
inline constexpr int kNumCellHistograms = 6;

struct CellStats {
  std::array<std::vector<double>, kNumCellHistograms> histograms;
  std::array<double, 3> mean{};
  std::array<double, 3> stddev{};
};

// Per-cell statistics over a grid of square cells. Partial border cells are
// dropped. Integer bin counts are kept alongside the normalized histograms
// for the pairwise similarity search.
struct CellGrid {
  int rows = 0;
  int cols = 0;
  int cell_size = 0;
  int bins = 0;
  std::uint32_t samples_per_cell = 0;
  std::vector<CellStats> cells;
  std::vector<std::uint32_t> counts;  // [cell][histogram][bin]

  [[nodiscard]] const CellStats& at(int row, int col) const {
    return cells[static_cast<std::size_t>(row) * cols + col];
  }
  [[nodiscard]] std::span<const std::uint32_t> cell_counts(int index, int histogram) const {
    return std::span(counts).subspan(
        (static_cast<std::size_t>(index) * kNumCellHistograms + histogram) * bins, bins);
  }
};

// Bin for a value in [0,1]: floor(v * bins), the top edge going to the last bin.
int histogram_bin(double v, int bins);

// Gradients are central differences inside each cell with indices clamped to
// the cell border, so a cell's statistics depend only on its own pixels.
// Magnitude is the mean of |dx| and |dy|, clamped to [0,1].
// Throws TooSmallError if the image holds no full cell.
CellGrid compute_cell_stats(const RgbImage& image, const ExtractionConfig& config);

// Pools whole-cell statistics over a square block of cells.
CellStats aggregate_stats(const CellGrid& grid, int row, int col, int side);

}  // namespace matinfuse
