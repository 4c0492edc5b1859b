// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "matinfuse/core/error.hpp"
#include "matinfuse/core/rng.hpp"
#include "matinfuse/texextract/cell_stats.hpp"
#include "matinfuse/texextract/js_distance.hpp"
#include "matinfuse/texextract/region_search.hpp"
#include "matinfuse/texextract/texture_tile.hpp"
#include "unit/fixtures.hpp"

namespace matinfuse {
namespace {

std::vector<double> random_histogram(Rng& rng, int bins, double sparsity = 0.0) {
  std::vector<double> h(bins);
  double sum = 0.0;
  for (auto& v : h) {
    v = rng.uniform() < sparsity ? 0.0 : rng.uniform();
    sum += v;
  }
  if (sum == 0.0) {
    h[0] = 1.0;
    return h;
  }
  for (auto& v : h) v /= sum;
  return h;
}

// Direct evaluation of the divergence from its KL definition.
double reference_js(const std::vector<double>& p, const std::vector<double>& q) {
  double kl_p = 0.0, kl_q = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    const double m = 0.5 * (p[i] + q[i]);
    if (p[i] > 0) kl_p += p[i] * std::log2(p[i] / m);
    if (q[i] > 0) kl_q += q[i] * std::log2(q[i] / m);
  }
  return std::sqrt(std::max(0.0, 0.5 * kl_p + 0.5 * kl_q));
}

TEST(Histogram, BinEdges) {
  EXPECT_EQ(histogram_bin(0.0, 32), 0);
  EXPECT_EQ(histogram_bin(1.0, 32), 31);
  EXPECT_EQ(histogram_bin(0.999, 32), 31);
  EXPECT_EQ(histogram_bin(1.0 / 32, 32), 1);
  EXPECT_EQ(histogram_bin(-3.0, 32), 0);
}

TEST(CellStats, GridShapeAndConstantCells) {
  const ExtractionConfig config;
  const CellGrid grid = compute_cell_stats(testing::constant_image(1024, 1024, 0.5), config);
  EXPECT_EQ(grid.rows, 25);
  EXPECT_EQ(grid.cols, 25);
  const CellStats& c = grid.at(3, 4);
  for (int ch = 0; ch < 3; ++ch) {
    EXPECT_NEAR(c.mean[ch], 128.0 / 255.0, 1e-12);
    EXPECT_NEAR(c.stddev[ch], 0.0, 1e-9);
    EXPECT_DOUBLE_EQ(c.histograms[ch][histogram_bin(128.0 / 255.0, 32)], 1.0);
    EXPECT_DOUBLE_EQ(c.histograms[3 + ch][0], 1.0);
  }
}

TEST(CellStats, MomentsMatchDirectComputation) {
  const RgbImage img = testing::noise_image(80, 40, 0.1, 0.7, 3);
  const CellGrid grid = compute_cell_stats(img, ExtractionConfig{});
  ASSERT_EQ(grid.cols, 2);
  for (int c = 0; c < 3; ++c) {
    double sum = 0.0, sq = 0.0;
    for (int y = 0; y < 40; ++y) {
      for (int x = 40; x < 80; ++x) {
        sum += img.value(x, y, c);
        sq += img.value(x, y, c) * img.value(x, y, c);
      }
    }
    const double mean = sum / 1600.0;
    EXPECT_NEAR(grid.at(0, 1).mean[c], mean, 1e-12);
    EXPECT_NEAR(grid.at(0, 1).stddev[c], std::sqrt(sq / 1600.0 - mean * mean), 1e-9);
  }
}

TEST(CellStats, TooSmallImage) {
  EXPECT_THROW(compute_cell_stats(testing::constant_image(39, 80, 0.5), ExtractionConfig{}),
               TooSmallError);
}

TEST(JsDistance, AxiomsOnRandomHistograms) {
  Rng rng(17);
  for (int t = 0; t < 1000; ++t) {
    const double sparsity = (t % 3) * 0.3;
    const auto p = random_histogram(rng, 32, sparsity);
    const auto q = random_histogram(rng, 32, sparsity);
    const auto r = random_histogram(rng, 32, sparsity);
    const double pq = js_distance(p, q);
    ASSERT_NEAR(pq, js_distance(q, p), 1e-9);
    ASSERT_NEAR(js_distance(p, p), 0.0, 1e-9);
    ASSERT_GE(pq, 0.0);
    ASSERT_LE(pq, 1.0 + 1e-9);
    ASSERT_LE(pq, js_distance(p, r) + js_distance(r, q) + 1e-9);
    ASSERT_NEAR(pq, reference_js(p, q), 1e-9);
  }
}

TEST(JsDistance, DisjointSpikesAreAtDistanceOne) {
  std::vector<double> p(8, 0.0), q(8, 0.0);
  p[0] = 1.0;
  q[5] = 1.0;
  EXPECT_EQ(js_distance(p, q), 1.0);
  EXPECT_THROW(js_distance(p, std::vector<double>(4, 0.25)), ParameterError);
}

TEST(JsDistance, CountVersionAgreesWithNormalized) {
  Rng rng(23);
  const std::uint32_t n = 1600;
  const CountJsDistance js(n);
  for (int t = 0; t < 500; ++t) {
    std::vector<std::uint32_t> a(32, 0), b(32, 0);
    const int spread = 1 + static_cast<int>(rng.index(32));
    for (std::uint32_t i = 0; i < n; ++i) {
      ++a[rng.index(static_cast<std::size_t>(spread))];
      ++b[rng.index(32)];
    }
    std::vector<double> pa(32), pb(32);
    for (int i = 0; i < 32; ++i) {
      pa[i] = a[i] / static_cast<double>(n);
      pb[i] = b[i] / static_cast<double>(n);
    }
    ASSERT_NEAR(js.distance(a, b), js_distance(pa, pb), 1e-12);
  }
}

TEST(Degenerate, EachReasonTriggersOnlyWhenAllChannelsFail) {
  const DegenerateThresholds th;
  CellStats s;
  s.mean = {0.5, 0.5, 0.5};
  s.stddev = {0.2, 0.2, 0.2};
  EXPECT_TRUE(filter_degenerate(s, th).keep);
  s.stddev = {0.01, 0.01, 0.01};
  EXPECT_FALSE(filter_degenerate(s, th).keep);
  s.stddev = {0.01, 0.01, 0.3};
  EXPECT_TRUE(filter_degenerate(s, th).keep);
  s.stddev = {0.2, 0.2, 0.2};
  s.mean = {0.02, 0.03, 0.01};
  EXPECT_FALSE(filter_degenerate(s, th).keep);
  s.mean = {0.97, 0.99, 0.96};
  const DegeneracyCheck bright = filter_degenerate(s, th);
  EXPECT_FALSE(bright.keep);
  EXPECT_FALSE(bright.reasons.empty());
  // Mixed failure modes across channels still discard.
  s.mean = {0.97, 0.01, 0.5};
  s.stddev = {0.2, 0.2, 0.001};
  EXPECT_FALSE(filter_degenerate(s, th).keep);
}

TEST(RegionSearch, PlantedBlockIsTheOnlyRegion) {
  for (std::uint64_t seed : {1u, 2u, 3u}) {
    const ExtractionResult r = extract_textures(testing::planted_texture(seed), "fx", ExtractionConfig{});
    ASSERT_EQ(r.tiles.size(), 1u) << "seed " << seed;
    EXPECT_EQ(r.tiles[0].region, (CellRect{0, 0, 7}));
    EXPECT_EQ(r.tiles[0].pixels.width, 280);
    EXPECT_EQ(r.tiles[0].id(), "fx@r0_c0_s7");
  }
}

TEST(RegionSearch, ConstantAndNearWhiteGiveNoTiles) {
  const ExtractionConfig config;
  const ExtractionResult flat = extract_textures(testing::constant_image(320, 320, 0.5), "c", config);
  EXPECT_TRUE(flat.tiles.empty());
  EXPECT_FALSE(flat.search.discarded.empty());
  const ExtractionResult white =
      extract_textures(testing::noise_image(320, 320, 0.96, 1.0, 4), "w", config);
  EXPECT_TRUE(white.tiles.empty());
  EXPECT_FALSE(white.search.discarded.empty());
}

TEST(RegionSearch, RegionsNeverOverlapAndExceedMinimumSide) {
  const ExtractionConfig config;
  for (std::uint64_t seed = 0; seed < 3; ++seed) {
    const ExtractionResult r = extract_textures(testing::patchwork_image(640, 480, seed), "p", config);
    for (std::size_t i = 0; i < r.tiles.size(); ++i) {
      EXPECT_GT(r.tiles[i].region.side, config.min_region_cells);
      for (std::size_t j = i + 1; j < r.tiles.size(); ++j) {
        EXPECT_FALSE(r.tiles[i].region.overlaps(r.tiles[j].region));
      }
    }
  }
}

TEST(RegionSearch, AllPairsInRegionAreSimilar) {
  const ExtractionConfig config;
  const CellGrid grid = compute_cell_stats(testing::planted_texture(9), config);
  const RegionSearchResult r = find_uniform_regions(grid, config);
  ASSERT_EQ(r.regions.size(), 1u);
  const CellRect& rect = r.regions[0].rect;
  std::vector<int> cells;
  for (int y = rect.row; y < rect.row + rect.side; ++y) {
    for (int x = rect.col; x < rect.col + rect.side; ++x) cells.push_back(y * grid.cols + x);
  }
  for (int a : cells) {
    for (int b : cells) {
      for (int h = 0; h < kNumCellHistograms; ++h) {
        ASSERT_LT(js_distance(grid.cells[a].histograms[h], grid.cells[b].histograms[h]), 0.5);
      }
    }
  }
}

TEST(TextureTile, CropMatchesSourceAndReextracts) {
  const RgbImage img = testing::planted_texture(5);
  const ExtractionConfig config;
  const ExtractionResult r = extract_textures(img, "src", config);
  ASSERT_EQ(r.tiles.size(), 1u);
  const TextureTile& t = r.tiles[0];
  for (int y = 0; y < 280; y += 13) {
    for (int x = 0; x < 280; x += 7) {
      for (int c = 0; c < 3; ++c) ASSERT_EQ(t.pixels.sample(x, y, c), img.sample(x, y, c));
    }
  }
  const ExtractionResult again = extract_textures(t.pixels, "tile", config);
  ASSERT_EQ(again.tiles.size(), 1u);
  EXPECT_EQ(again.tiles[0].region, (CellRect{0, 0, 7}));
  EXPECT_EQ(again.tiles[0].pixels, t.pixels);
}

TEST(TextureTile, OutOfBoundsRegionRejected) {
  UniformRegion region;
  region.rect = {2, 2, 7};
  EXPECT_THROW(extract_texture(testing::constant_image(320, 320, 0.5), region, 40, "x"),
               ParameterError);
}

}  // namespace
}  // namespace matinfuse
