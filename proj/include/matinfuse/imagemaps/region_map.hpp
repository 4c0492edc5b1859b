// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "matinfuse/core/image.hpp"
#include "matinfuse/imagemaps/channels.hpp"

namespace matinfuse {

class Rng;

struct RampParams {
  double t_low = 0.0;
  double t_high = 1.0;

  bool operator==(const RampParams&) const = default;
};

// 0 at or below t_low, 1 at or above t_high, linear in between. With
// t_low == t_high this is a hard step: values above the threshold map to 1.
// Throws ParameterError if t_low > t_high.
double ramp_threshold(double x, const RampParams& params);
Plane ramp_threshold(const Plane& plane, const RampParams& params);

// Uniform draw of two thresholds on [0,1], ordered, redrawn until the gap
// reaches min_gap.
RampParams draw_ramp(Rng& rng, double min_gap);

// One region's random choices.
struct RegionDraw {
  Channel channel = Channel::kV;
  RampParams ramp;
  int attempts = 1;  // draws made before acceptance

  bool operator==(const RegionDraw&) const = default;
};

struct RegionMapOptions {
  double min_ramp_gap = 0.05;
  // Region coverage (mean carved weight) outside this band is redrawn.
  double min_area = 0.02;
  double max_area = 0.98;
  int max_redraws = 10;
};

// Soft weights over regions plus a background residual. At every pixel the
// region weights and background sum to 1.
struct SoftRegionMap {
  int width = 0;
  int height = 0;
  std::vector<Plane> region_weights;
  Plane background_weight;
  std::uint64_t seed = 0;
  std::vector<RegionDraw> draws;

  [[nodiscard]] int num_regions() const { return static_cast<int>(region_weights.size()); }
  // All planes, regions first then background.
  [[nodiscard]] std::vector<Plane> partition() const;
  // Largest deviation of the per-pixel sum from 1.
  [[nodiscard]] double max_sum_error() const;

  bool operator==(const SoftRegionMap&) const = default;
};

// Residual carving: w_1 = m_1, w_k = m_k * (1 - sum_{j<k} w_j),
// background = 1 - sum w_k.
SoftRegionMap carve_regions(std::span<const Plane> soft_maps);

// Applies explicit draws to a decomposed image.
SoftRegionMap build_region_map(const ImageChannelStack& stack, std::span<const RegionDraw> draws);

// Deterministic in (image, seed, num_regions, options). Throws ParameterError
// if num_regions < 1.
SoftRegionMap sample_region_map(const RgbImage& image, std::uint64_t seed, int num_regions,
                                const RegionMapOptions& options = {});
SoftRegionMap sample_region_map(const ImageChannelStack& stack, std::uint64_t seed,
                                int num_regions, const RegionMapOptions& options = {});

}  // namespace matinfuse
