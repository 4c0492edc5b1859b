// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <cmath>

#include "matinfuse/core/color.hpp"
#include "matinfuse/core/error.hpp"
#include "matinfuse/core/io.hpp"
#include "matinfuse/core/rng.hpp"
#include "matinfuse/scenegen2d/compose.hpp"
#include "matinfuse/scenegen2d/dataset.hpp"
#include "unit/fixtures.hpp"

namespace matinfuse {
namespace {

SoftRegionMap two_region_map(int w, int h, std::uint64_t seed) {
  return sample_region_map(testing::patchwork_image(w, h, seed), seed, 2);
}

Batch2DConfig small_batch(const std::filesystem::path& dir) {
  Batch2DConfig c;
  for (int i = 0; i < 3; ++i) {
    const auto p = dir / ("tex" + std::to_string(i) + ".png");
    write_rgb_png(p, testing::noise_image(24 + 8 * i, 20, 0.1 * i, 0.5 + 0.1 * i, i));
    c.textures.push_back({"tex" + std::to_string(i), p});
  }
  for (int i = 0; i < 2; ++i) {
    const auto p = dir / ("src" + std::to_string(i) + ".png");
    write_rgb_png(p, testing::patchwork_image(80, 60, 10 + i));
    c.map_sources.push_back({"src" + std::to_string(i), p});
    c.backgrounds.push_back({"src" + std::to_string(i), p});
  }
  c.width = 48;
  c.height = 40;
  c.config_hash = "test";
  return c;
}

TEST(Tiling, MirrorRepeatOfTwoByTwo) {
  RgbPlanes t(2, 2);
  t[0].values = {1, 2, 3, 4};
  const RgbPlanes out = tile_texture(t, 4, 4);
  const std::vector<double> want = {1, 2, 2, 1,  //
                                    3, 4, 4, 3,  //
                                    3, 4, 4, 3,  //
                                    1, 2, 2, 1};
  EXPECT_EQ(out[0].values, want);
  const RgbPlanes crop = tile_texture(t, 1, 2);
  EXPECT_EQ(crop[0].values, (std::vector<double>{1, 3}));
  EXPECT_THROW(tile_texture(RgbPlanes{}, 2, 2), ParameterError);
}

TEST(Tiling, SeamlessAtPeriodBoundary) {
  const RgbImage t = testing::noise_image(5, 3, 0, 1, 2);
  const RgbImage out = tile_texture(t, 23, 17);
  for (int y = 0; y < 17; ++y) {
    for (int x = 0; x + 1 < 23; ++x) {
      if ((x + 1) % 5 == 0) ASSERT_EQ(out.sample(x, y, 0), out.sample(x + 1, y, 0));
    }
  }
}

TEST(Compose, FlatColoursAreWeightedSums) {
  const SoftRegionMap map = two_region_map(32, 32, 1);
  const std::array<std::array<double, 3>, 3> colours = {{{0.8, 0.1, 0.2}, {0.1, 0.6, 0.3}, {0.2, 0.2, 0.9}}};
  std::vector<RgbPlanes> tex;
  for (int k = 0; k < 2; ++k) {
    RgbPlanes p(7, 5);
    for (int c = 0; c < 3; ++c) p[c] = Plane(7, 5, colours[k][c]);
    tex.push_back(p);
  }
  RgbPlanes bg(9, 9);
  for (int c = 0; c < 3; ++c) bg[c] = Plane(9, 9, colours[2][c]);
  const std::vector<std::string> ids = {"a", "b"};
  const RenderedSample2D s = compose_scene_2d(map, tex, ids, bg, std::nullopt, 3);
  EXPECT_LE(s.max_gt_sum_error(), 1e-12);
  for (std::size_t i = 0; i < s.rgb[0].size(); ++i) {
    for (int c = 0; c < 3; ++c) {
      const double want = map.region_weights[0].values[i] * colours[0][c] +
                          map.region_weights[1].values[i] * colours[1][c] +
                          map.background_weight.values[i] * colours[2][c];
      ASSERT_NEAR(s.rgb[c].values[i], want, 1e-12);
    }
  }
}

TEST(Compose, ShadowDarkensMultiplicatively) {
  const SoftRegionMap map = two_region_map(16, 16, 2);
  std::vector<RgbPlanes> tex(2, RgbPlanes(4, 4, 0.5));
  const std::vector<std::string> ids = {"a", "b"};
  const RgbPlanes bg(4, 4, 0.5);
  Plane shade(16, 16);
  for (std::size_t i = 0; i < shade.size(); ++i) shade.values[i] = (i % 16) / 15.0;
  const RenderedSample2D s = compose_scene_2d(map, tex, ids, bg, ShadowSpec{shade, 0.6}, 1);
  for (std::size_t i = 0; i < shade.size(); ++i) {
    ASSERT_NEAR(s.rgb[1].values[i], 0.5 * (1.0 - 0.6 * shade.values[i]), 1e-12);
  }
  EXPECT_LE(s.max_gt_sum_error(), 1e-12);
}

TEST(Compose, CountMismatchRejected) {
  const SoftRegionMap map = two_region_map(8, 8, 3);
  std::vector<RgbPlanes> tex(1, RgbPlanes(4, 4, 0.5));
  const std::vector<std::string> ids = {"a"};
  EXPECT_THROW(compose_scene_2d(map, tex, ids, RgbPlanes(4, 4), std::nullopt, 0), ParameterError);
}

TEST(Dataset, WrittenSampleMatchesWithinOneStep) {
  const auto dir = testing::scratch_dir("sample_write");
  const SoftRegionMap map = two_region_map(20, 20, 4);
  std::vector<RgbPlanes> tex(2, RgbPlanes(4, 4, 0.3));
  tex[1] = RgbPlanes(4, 4, 0.7);
  const std::vector<std::string> ids = {"a", "b"};
  const RenderedSample2D s = compose_scene_2d(map, tex, ids, RgbPlanes(4, 4, 0.05), std::nullopt, 0);
  write_sample_2d(dir, s, nullptr);
  const RgbImage rgb = read_rgb(dir / "rgb.png");
  for (int y = 0; y < 20; ++y) {
    for (int x = 0; x < 20; ++x) {
      ASSERT_LE(std::abs(rgb.value(x, y, 0) - linear_to_srgb(s.rgb[0].at(x, y))), 1.0 / 255.0);
    }
  }
  const auto gt = read_sample_gt(dir);
  ASSERT_EQ(gt.size(), 3u);
  for (std::size_t i = 0; i < gt[0].size(); ++i) {
    ASSERT_NEAR(gt[0].values[i] + gt[1].values[i] + gt[2].values[i], 1.0, 1e-6);
  }
}

TEST(Dataset, BatchIsDeterministicAndValid) {
  const auto dir = testing::scratch_dir("batch2d");
  Batch2DConfig c = small_batch(dir);
  const RunManifest a = generate_batch_2d(c, 12, 5, dir / "a");
  c.workers = 3;
  const RunManifest b = generate_batch_2d(c, 12, 5, dir / "b");
  EXPECT_EQ(a.count(ItemStatus::kOk), 12u);
  EXPECT_EQ(testing::diff_trees(dir / "a", dir / "b"), "");
  for (int i = 0; i < 12; ++i) {
    const auto sdir = dir / "a" / "samples" / sample_dir_name(i);
    const auto gt = read_sample_gt(sdir);
    const Json meta = read_json(sdir / "meta.json");
    EXPECT_EQ(gt.size(), meta["num_materials"].get<std::size_t>() + 1);
    EXPECT_GE(gt.size(), 3u);
    EXPECT_LE(gt.size(), 5u);
    for (std::size_t p = 0; p < gt[0].size(); ++p) {
      double sum = 0.0;
      for (const auto& g : gt) sum += g.values[p];
      ASSERT_NEAR(sum, 1.0, 1e-6);
    }
  }
  // A sample depends only on its index.
  const RunManifest shorter = generate_batch_2d(c, 4, 5, dir / "c");
  EXPECT_EQ(read_file(dir / "a/samples/000003/rgb.png"), read_file(dir / "c/samples/000003/rgb.png"));
}

TEST(Dataset, BrokenTextureIsolatedToItsSamples) {
  const auto dir = testing::scratch_dir("batch2d_fault");
  Batch2DConfig c = small_batch(dir);
  write_file_atomic(c.textures[1].path, std::vector<std::uint8_t>{1, 2, 3});
  const RunManifest m = generate_batch_2d(c, 10, 2, dir / "out");
  EXPECT_EQ(m.items.size(), 10u);
  EXPECT_GT(m.count(ItemStatus::kError), 0u);
  EXPECT_GT(m.count(ItemStatus::kOk), 0u);
  for (const auto& item : m.items) {
    if (item.status == ItemStatus::kError) EXPECT_FALSE(item.reason.empty());
  }
}

TEST(Dataset, EmptyPoolIsConfigError) {
  Batch2DConfig c;
  EXPECT_THROW(generate_batch_2d(c, 1, 0, testing::scratch_dir("empty_pool")), ConfigError);
}

TEST(Preview, PureWeightsMapToPalette) {
  std::vector<Plane> gt = {Plane(2, 1, 0.0), Plane(2, 1, 0.0)};
  gt[0].values = {1.0, 0.0};
  gt[1].values = {0.0, 1.0};
  const RgbImage img = render_annotation_preview(gt);
  EXPECT_EQ(img.sample(1, 0, 0), 0);
  EXPECT_EQ(img.sample(1, 0, 1), 0);
  EXPECT_EQ(img.sample(1, 0, 2), 0);
  EXPECT_GT(img.sample(0, 0, 0) + img.sample(0, 0, 1) + img.sample(0, 0, 2), 0);
}

}  // namespace
}  // namespace matinfuse
