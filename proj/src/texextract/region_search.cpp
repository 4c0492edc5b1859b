// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/texextract/region_search.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include "matinfuse/texextract/js_distance.hpp"

namespace matinfuse {
namespace {

// Lazily evaluated pairwise cell compatibility.
class PairCache {
 public:
  PairCache(const CellGrid& grid, double threshold)
      : grid_(grid),
        js_(grid.samples_per_cell),
        limit_(threshold * threshold),
        num_cells_(static_cast<std::size_t>(grid.rows) * grid.cols),
        entropy_(num_cells_ * kNumCellHistograms),
        state_(num_cells_ * num_cells_, kUnknown) {
    for (std::size_t i = 0; i < num_cells_; ++i) {
      for (int h = 0; h < kNumCellHistograms; ++h) {
        entropy_[i * kNumCellHistograms + h] =
            js_.entropy(grid_.cell_counts(static_cast<int>(i), h));
      }
    }
  }

  bool similar(std::size_t a, std::size_t b) {
    if (a == b) return true;
    std::int8_t& s = state_[a * num_cells_ + b];
    if (s == kUnknown) {
      s = compute(a, b) ? kYes : kNo;
      state_[b * num_cells_ + a] = s;
    }
    return s == kYes;
  }

 private:
  static constexpr std::int8_t kUnknown = -1;
  static constexpr std::int8_t kNo = 0;
  static constexpr std::int8_t kYes = 1;

  bool compute(std::size_t a, std::size_t b) const {
    for (int h = 0; h < kNumCellHistograms; ++h) {
      const double d = js_.divergence(grid_.cell_counts(static_cast<int>(a), h),
                                      entropy_[a * kNumCellHistograms + h],
                                      grid_.cell_counts(static_cast<int>(b), h),
                                      entropy_[b * kNumCellHistograms + h]);
      // distance < threshold  <=>  divergence < threshold^2
      if (!(std::max(d, 0.0) < limit_)) return false;
    }
    return true;
  }

  const CellGrid& grid_;
  CountJsDistance js_;
  double limit_;
  std::size_t num_cells_;
  std::vector<double> entropy_;
  std::vector<std::int8_t> state_;
};

// Largest side s such that the s x s square at (row, col) is pairwise similar.
int grow_square(PairCache& cache, const CellGrid& grid, int row, int col, int max_side) {
  auto idx = [&](int r, int c) { return static_cast<std::size_t>(r) * grid.cols + c; };
  int side = 1;
  std::vector<std::size_t> ring;
  while (side < max_side) {
    ring.clear();
    for (int i = 0; i <= side; ++i) ring.push_back(idx(row + i, col + side));
    for (int j = 0; j < side; ++j) ring.push_back(idx(row + side, col + j));
    bool ok = true;
    for (std::size_t n = 0; n < ring.size() && ok; ++n) {
      for (int r = row; r < row + side && ok; ++r) {
        for (int c = col; c < col + side; ++c) {
          if (!cache.similar(ring[n], idx(r, c))) {
            ok = false;
            break;
          }
        }
      }
      for (std::size_t m = n + 1; m < ring.size() && ok; ++m) {
        ok = cache.similar(ring[n], ring[m]);
      }
    }
    if (!ok) break;
    ++side;
  }
  return side;
}

std::vector<UniformRegion> resolve_overlaps(std::vector<UniformRegion> regions) {
  std::stable_sort(regions.begin(), regions.end(),
                   [](const UniformRegion& a, const UniformRegion& b) {
                     if (a.rect.side != b.rect.side) return a.rect.side > b.rect.side;
                     if (a.rect.row != b.rect.row) return a.rect.row < b.rect.row;
                     return a.rect.col < b.rect.col;
                   });
  std::vector<UniformRegion> accepted;
  for (auto& region : regions) {
    const bool clash = std::any_of(accepted.begin(), accepted.end(), [&](const UniformRegion& a) {
      return a.rect.overlaps(region.rect);
    });
    if (!clash) accepted.push_back(std::move(region));
  }
  return accepted;
}

}  // namespace

bool CellRect::overlaps(const CellRect& other) const {
  return row < other.row + other.side && other.row < row + side && col < other.col + other.side &&
         other.col < col + side;
}

bool CellRect::contains(const CellRect& other) const {
  return other.row >= row && other.col >= col && other.row + other.side <= row + side &&
         other.col + other.side <= col + side;
}

DegeneracyCheck filter_degenerate(const CellStats& stats, const DegenerateThresholds& thresholds) {
  static constexpr const char* kNames[] = {"R", "G", "B"};
  DegeneracyCheck out;
  int bad_channels = 0;
  for (int c = 0; c < 3; ++c) {
    std::string reason;
    if (stats.stddev[c] < thresholds.min_std) {
      reason = "too uniform";
    } else if (stats.mean[c] < thresholds.min_mean) {
      reason = "too dark";
    } else if (stats.mean[c] > thresholds.max_mean) {
      reason = "too bright";
    }
    if (!reason.empty()) {
      ++bad_channels;
      out.reasons.push_back(std::string(kNames[c]) + ": " + reason);
    }
  }
  out.keep = bad_channels < 3;
  if (out.keep) out.reasons.clear();
  return out;
}

bool cells_similar(const CellGrid& grid, int a, int b, double js_threshold) {
  const CountJsDistance js(grid.samples_per_cell);
  for (int h = 0; h < kNumCellHistograms; ++h) {
    if (!(js.distance(grid.cell_counts(a, h), grid.cell_counts(b, h)) < js_threshold)) {
      return false;
    }
  }
  return true;
}

RegionSearchResult find_uniform_regions(const CellGrid& grid, const ExtractionConfig& config) {
  config.validate();
  RegionSearchResult result;
  const int min_side = config.min_region_cells + 1;
  if (grid.rows < min_side || grid.cols < min_side) return result;

  PairCache cache(grid, config.js_threshold);
  std::vector<CellRect> candidates;
  for (int row = 0; row + min_side <= grid.rows; ++row) {
    for (int col = 0; col + min_side <= grid.cols; ++col) {
      const int max_side = std::min(grid.rows - row, grid.cols - col);
      const CellRect bound{row, col, max_side};
      const bool dominated = std::any_of(candidates.begin(), candidates.end(),
                                         [&](const CellRect& c) { return c.contains(bound); });
      if (dominated) continue;
      const int side = grow_square(cache, grid, row, col, max_side);
      if (side >= min_side) candidates.push_back({row, col, side});
    }
  }
  std::vector<CellRect> maximal;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    bool inside = false;
    for (std::size_t j = 0; j < candidates.size() && !inside; ++j) {
      inside = j != i && candidates[j].contains(candidates[i]);
    }
    if (!inside) maximal.push_back(candidates[i]);
  }

  std::vector<UniformRegion> kept;
  std::vector<UniformRegion> discarded;
  for (const CellRect& rect : maximal) {
    UniformRegion region{rect, aggregate_stats(grid, rect.row, rect.col, rect.side), {}};
    region.check = filter_degenerate(region.aggregate, config.degenerate);
    (region.check.keep ? kept : discarded).push_back(std::move(region));
  }
  result.regions = resolve_overlaps(std::move(kept));
  result.discarded = resolve_overlaps(std::move(discarded));
  return result;
}

}  // namespace matinfuse
