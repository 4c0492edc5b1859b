// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "matinfuse/core/image.hpp"

namespace matinfuse {

struct Mask {
  int width = 0;
  int height = 0;
  std::vector<std::uint8_t> values;  // 0 or 1

  Mask() = default;
  Mask(int w, int h) : width(w), height(h), values(static_cast<std::size_t>(w) * h, 0) {}
  [[nodiscard]] std::size_t area() const;
  [[nodiscard]] bool at(int x, int y) const {
    return values[static_cast<std::size_t>(y) * width + x] != 0;
  }
};

struct ThresholdIou {
  double best_iou = 0.0;
  double best_threshold = 0.0;  // +inf when the empty prediction wins
};

// Prediction at threshold t is {sim >= t}. Sweeps every distinct value of the
// map plus +inf, returns the best IOU and the lowest threshold attaining it.
// IOU of two empty sets is 1. Throws ParameterError on size mismatch.
ThresholdIou optimal_threshold_iou(const Plane& sim, const Mask& gt);

struct GtMaskSet {
  std::string image_id;
  int width = 0;
  int height = 0;
  std::vector<Mask> masks;
};

struct IouQuery {
  std::size_t segment = 0;
  int x = 0;
  int y = 0;
  bool operator==(const IouQuery&) const = default;
};

// Pixels drawn uniformly (with replacement) inside each segment. Empty
// segments are skipped and reported in `warnings`.
std::vector<IouQuery> plan_iou_queries(const GtMaskSet& masks, int points_per_segment,
                                       std::uint64_t seed, std::vector<std::string>* warnings);

// Similarity of every pixel to the query pixel (x, y).
using DensePredictor = std::function<Plane(int x, int y)>;

struct IouSample {
  GtMaskSet masks;
  DensePredictor predict;
};

struct IouBenchmark {
  double mean_iou = 0.0;
  std::size_t queries = 0;
  std::vector<std::string> warnings;
};

// Per image the query seed is derived from (seed, image_id).
IouBenchmark benchmark_iou(std::span<const IouSample> samples, int points_per_segment,
                           std::uint64_t seed);

// {"image_id", "width", "height", "masks": ["seg0.png", ...]}; any nonzero
// pixel is inside.
GtMaskSet load_mask_set(const std::filesystem::path& index_path);

}  // namespace matinfuse
