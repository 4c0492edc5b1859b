// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/benchmetrics/iou.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

#include "matinfuse/core/error.hpp"
#include "matinfuse/core/io.hpp"
#include "matinfuse/core/rng.hpp"

namespace matinfuse {

std::size_t Mask::area() const {
  return static_cast<std::size_t>(std::count_if(values.begin(), values.end(),
                                                [](std::uint8_t v) { return v != 0; }));
}

ThresholdIou optimal_threshold_iou(const Plane& sim, const Mask& gt) {
  if (sim.width != gt.width || sim.height != gt.height || sim.size() != gt.values.size()) {
    throw ParameterError("similarity map and mask sizes differ");
  }
  const std::size_t n = sim.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return sim.values[a] > sim.values[b];
  });
  const double gt_area = static_cast<double>(gt.area());

  ThresholdIou best{gt_area == 0.0 ? 1.0 : 0.0, std::numeric_limits<double>::infinity()};
  double predicted = 0.0;
  double hits = 0.0;
  std::size_t i = 0;
  while (i < n) {
    const double t = sim.values[order[i]];
    // Include every pixel with this value before scoring the threshold.
    while (i < n && sim.values[order[i]] == t) {
      predicted += 1.0;
      if (gt.values[order[i]]) hits += 1.0;
      ++i;
    }
    const double iou = hits / (predicted + gt_area - hits);
    if (iou >= best.best_iou) best = {iou, t};
  }
  return best;
}

std::vector<IouQuery> plan_iou_queries(const GtMaskSet& set, int points_per_segment,
                                       std::uint64_t seed, std::vector<std::string>* warnings) {
  std::vector<IouQuery> queries;
  Rng rng(derive_seed(seed, set.image_id));
  for (std::size_t s = 0; s < set.masks.size(); ++s) {
    const Mask& mask = set.masks[s];
    std::vector<std::size_t> inside;
    for (std::size_t i = 0; i < mask.values.size(); ++i) {
      if (mask.values[i]) inside.push_back(i);
    }
    if (inside.empty()) {
      if (warnings) warnings->push_back(set.image_id + ": segment " + std::to_string(s) + " is empty, skipped");
      continue;
    }
    for (int p = 0; p < points_per_segment; ++p) {
      const std::size_t pixel = inside[rng.index(inside.size())];
      queries.push_back({s, static_cast<int>(pixel % mask.width), static_cast<int>(pixel / mask.width)});
    }
  }
  return queries;
}

IouBenchmark benchmark_iou(std::span<const IouSample> samples, int points_per_segment,
                           std::uint64_t seed) {
  IouBenchmark out;
  double sum = 0.0;
  for (const auto& sample : samples) {
    const auto queries = plan_iou_queries(sample.masks, points_per_segment, seed, &out.warnings);
    for (const auto& q : queries) {
      const Plane sim = sample.predict(q.x, q.y);
      sum += optimal_threshold_iou(sim, sample.masks.masks[q.segment]).best_iou;
      ++out.queries;
    }
  }
  out.mean_iou = out.queries > 0 ? sum / static_cast<double>(out.queries) : 0.0;
  return out;
}

GtMaskSet load_mask_set(const fs::path& index_path) {
  const Json j = read_json(index_path);
  GtMaskSet set;
  try {
    set.image_id = j.at("image_id").get<std::string>();
    set.width = j.at("width").get<int>();
    set.height = j.at("height").get<int>();
    for (const auto& name : j.at("masks")) {
      const Plane plane = read_gray_png(index_path.parent_path() / name.get<std::string>());
      if (plane.width != set.width || plane.height != set.height) {
        throw FormatError(index_path.string() + ": mask " + name.get<std::string>() +
                          " size differs from image");
      }
      Mask mask(set.width, set.height);
      for (std::size_t i = 0; i < plane.size(); ++i) mask.values[i] = plane.values[i] > 0.0 ? 1 : 0;
      set.masks.push_back(std::move(mask));
    }
  } catch (const Json::exception& e) {
    throw FormatError(index_path.string() + ": " + e.what());
  }
  return set;
}

}  // namespace matinfuse
