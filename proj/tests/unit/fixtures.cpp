// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "unit/fixtures.hpp"

#include <algorithm>
#include <map>

#include "matinfuse/core/io.hpp"
#include "matinfuse/core/manifest.hpp"
#include "matinfuse/core/rng.hpp"

namespace matinfuse::testing {

RgbImage planted_texture(std::uint64_t seed) {
  Rng rng(seed);
  RgbImage img(320, 320, 8);
  for (int y = 0; y < 320; ++y) {
    for (int x = 0; x < 320; ++x) {
      const bool block = x < 280 && y < 280;
      for (int c = 0; c < 3; ++c) {
        const double v = block ? rng.uniform(0.2, 0.9) : rng.uniform(0.0, 0.12);
        img.sample(x, y, c) = quantize(v, 8);
      }
    }
  }
  return img;
}

RgbImage constant_image(int w, int h, double value) {
  RgbImage img(w, h, 8);
  std::fill(img.samples.begin(), img.samples.end(), quantize(value, 8));
  return img;
}

RgbImage noise_image(int w, int h, double lo, double hi, std::uint64_t seed) {
  Rng rng(seed);
  RgbImage img(w, h, 8);
  for (auto& s : img.samples) s = quantize(rng.uniform(lo, hi), 8);
  return img;
}

RgbImage patchwork_image(int w, int h, std::uint64_t seed) {
  Rng rng(seed);
  RgbImage img(w, h, 8);
  const double ranges[4][2] = {{0.1, 0.4}, {0.5, 0.9}, {0.2, 0.6}, {0.3, 0.95}};
  for (int y = 0; y < h; ++y) {
    for (int x = 0; x < w; ++x) {
      const int q = (y < h / 2 ? 0 : 2) + (x < w / 2 ? 0 : 1);
      for (int c = 0; c < 3; ++c) {
        img.sample(x, y, c) = quantize(rng.uniform(ranges[q][0], ranges[(q + c) % 4][1]), 8);
      }
    }
  }
  return img;
}

PointAnnotation random_annotation(std::uint64_t seed, int n_groups, int max_points_per_group) {
  Rng rng(seed);
  PointAnnotation ann;
  ann.image_id = "rand" + std::to_string(seed);
  ann.width = 64;
  ann.height = 48;
  for (int g = 0; g < n_groups; ++g) {
    const std::string id = "g" + std::to_string(g);
    ann.groups.push_back(id);
    const int n = rng.integer(1, max_points_per_group);
    for (int i = 0; i < n; ++i) {
      ann.points.push_back({rng.uniform(0.0, 63.0), rng.uniform(0.0, 47.0), id});
    }
  }
  for (int a = 0; a < n_groups; ++a) {
    for (int b = a + 1; b < n_groups; ++b) {
      if (rng.bernoulli(0.3)) ann.add_similar_pair(ann.groups[a], ann.groups[b]);
    }
  }
  return ann;
}

std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("matinfuse_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

std::filesystem::path write_corpus(const std::filesystem::path& dir, int planted, int noise) {
  std::filesystem::create_directories(dir);
  for (int i = 0; i < planted; ++i) {
    write_rgb_png(dir / ("planted_" + std::to_string(i) + ".png"), planted_texture(100 + i));
  }
  for (int i = 0; i < noise; ++i) {
    write_rgb_png(dir / ("patch_" + std::to_string(i) + ".png"), patchwork_image(320, 320, 200 + i));
  }
  return dir;
}

namespace {

std::map<std::string, std::string> tree(const std::filesystem::path& root) {
  std::map<std::string, std::string> out;
  for (const auto& e : std::filesystem::recursive_directory_iterator(root)) {
    if (!e.is_regular_file()) continue;
    const std::string rel = e.path().lexically_relative(root).generic_string();
    if (e.path().filename() == "manifest.json") {
      out[rel] = strip_timing(read_json(e.path())).dump();
    } else {
      const auto bytes = read_file(e.path());
      out[rel] = std::string(bytes.begin(), bytes.end());
    }
  }
  return out;
}

}  // namespace

std::string diff_trees(const std::filesystem::path& a, const std::filesystem::path& b) {
  const auto ta = tree(a);
  const auto tb = tree(b);
  for (const auto& [k, v] : ta) {
    auto it = tb.find(k);
    if (it == tb.end()) return "only in first: " + k;
    if (it->second != v) return "differs: " + k;
  }
  for (const auto& [k, v] : tb) {
    if (!ta.count(k)) return "only in second: " + k;
  }
  return "";
}

}  // namespace matinfuse::testing
