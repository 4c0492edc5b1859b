// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/texextract/cell_stats.hpp"

#include <algorithm>
#include <cmath>

#include "matinfuse/core/error.hpp"

namespace matinfuse {

void ExtractionConfig::validate() const {
  if (cell_size < 8) throw ParameterError("cell_size must be at least 8");
  if (min_region_cells < 2) throw ParameterError("min_region_cells must be at least 2");
  if (!(js_threshold > 0.0 && js_threshold <= 1.0)) {
    throw ParameterError("js_threshold must lie in (0,1]");
  }
  if (histogram_bins < 8) throw ParameterError("histogram_bins must be at least 8");
}

int histogram_bin(double v, int bins) {
  const int bin = static_cast<int>(std::floor(std::clamp(v, 0.0, 1.0) * bins));
  return std::min(bin, bins - 1);
}

CellGrid compute_cell_stats(const RgbImage& image, const ExtractionConfig& config) {
  config.validate();
  const int cs = config.cell_size;
  if (image.width < cs || image.height < cs) {
    throw TooSmallError("image smaller than one cell");
  }
  CellGrid grid;
  grid.rows = image.height / cs;
  grid.cols = image.width / cs;
  grid.cell_size = cs;
  grid.bins = config.histogram_bins;
  grid.samples_per_cell = static_cast<std::uint32_t>(cs) * cs;
  const std::size_t num_cells = static_cast<std::size_t>(grid.rows) * grid.cols;
  grid.cells.resize(num_cells);
  grid.counts.assign(num_cells * kNumCellHistograms * grid.bins, 0);

  const double scale = 1.0 / image.max_value();
  std::vector<double> values(static_cast<std::size_t>(cs) * cs);
  for (int row = 0; row < grid.rows; ++row) {
    for (int col = 0; col < grid.cols; ++col) {
      const std::size_t index = static_cast<std::size_t>(row) * grid.cols + col;
      CellStats& stats = grid.cells[index];
      const int x0 = col * cs;
      const int y0 = row * cs;
      for (int c = 0; c < 3; ++c) {
        for (int y = 0; y < cs; ++y) {
          for (int x = 0; x < cs; ++x) {
            values[static_cast<std::size_t>(y) * cs + x] =
                image.sample(x0 + x, y0 + y, c) * scale;
          }
        }
        auto* value_counts = &grid.counts[(index * kNumCellHistograms + c) * grid.bins];
        auto* grad_counts = &grid.counts[(index * kNumCellHistograms + 3 + c) * grid.bins];
        double sum = 0.0;
        double sum_sq = 0.0;
        for (int y = 0; y < cs; ++y) {
          const int ym = std::max(y - 1, 0);
          const int yp = std::min(y + 1, cs - 1);
          for (int x = 0; x < cs; ++x) {
            const int xm = std::max(x - 1, 0);
            const int xp = std::min(x + 1, cs - 1);
            const double v = values[static_cast<std::size_t>(y) * cs + x];
            const double dx = 0.5 * (values[static_cast<std::size_t>(y) * cs + xp] -
                                     values[static_cast<std::size_t>(y) * cs + xm]);
            const double dy = 0.5 * (values[static_cast<std::size_t>(yp) * cs + x] -
                                     values[static_cast<std::size_t>(ym) * cs + x]);
            const double magnitude = std::clamp(0.5 * (std::abs(dx) + std::abs(dy)), 0.0, 1.0);
            ++value_counts[histogram_bin(v, grid.bins)];
            ++grad_counts[histogram_bin(magnitude, grid.bins)];
            sum += v;
            sum_sq += v * v;
          }
        }
        const double n = grid.samples_per_cell;
        stats.mean[c] = sum / n;
        stats.stddev[c] = std::sqrt(std::max(0.0, sum_sq / n - stats.mean[c] * stats.mean[c]));
      }
      for (int h = 0; h < kNumCellHistograms; ++h) {
        const auto counts = grid.cell_counts(static_cast<int>(index), h);
        stats.histograms[h].resize(grid.bins);
        for (int b = 0; b < grid.bins; ++b) {
          stats.histograms[h][b] = static_cast<double>(counts[b]) / grid.samples_per_cell;
        }
      }
    }
  }
  return grid;
}

CellStats aggregate_stats(const CellGrid& grid, int row, int col, int side) {
  if (row < 0 || col < 0 || side <= 0 || row + side > grid.rows || col + side > grid.cols) {
    throw ParameterError("cell block outside grid");
  }
  CellStats out;
  for (auto& h : out.histograms) h.assign(grid.bins, 0.0);
  std::array<double, 3> second_moment{};
  const double n = static_cast<double>(side) * side;
  for (int r = row; r < row + side; ++r) {
    for (int c = col; c < col + side; ++c) {
      const CellStats& cell = grid.at(r, c);
      for (int h = 0; h < kNumCellHistograms; ++h) {
        for (int b = 0; b < grid.bins; ++b) out.histograms[h][b] += cell.histograms[h][b] / n;
      }
      for (int ch = 0; ch < 3; ++ch) {
        out.mean[ch] += cell.mean[ch] / n;
        second_moment[ch] += (cell.stddev[ch] * cell.stddev[ch] + cell.mean[ch] * cell.mean[ch]) / n;
      }
    }
  }
  for (int ch = 0; ch < 3; ++ch) {
    out.stddev[ch] = std::sqrt(std::max(0.0, second_moment[ch] - out.mean[ch] * out.mean[ch]));
  }
  return out;
}

}  // namespace matinfuse
