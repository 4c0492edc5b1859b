// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/imagemaps/region_map.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "matinfuse/core/error.hpp"
#include "matinfuse/core/rng.hpp"

namespace matinfuse {
namespace {

void check_ramp(const RampParams& params) {
  if (!(params.t_low <= params.t_high)) {
    throw ParameterError("ramp t_low must not exceed t_high");
  }
}

double ramp_unchecked(double x, const RampParams& params) {
  if (x <= params.t_low) return 0.0;
  if (x >= params.t_high) return 1.0;
  return (x - params.t_low) / (params.t_high - params.t_low);
}

double mean(const Plane& plane) {
  if (plane.empty()) return 0.0;
  return std::accumulate(plane.values.begin(), plane.values.end(), 0.0) /
         static_cast<double>(plane.size());
}

}  // namespace

double ramp_threshold(double x, const RampParams& params) {
  check_ramp(params);
  return ramp_unchecked(x, params);
}

Plane ramp_threshold(const Plane& plane, const RampParams& params) {
  check_ramp(params);
  Plane out(plane.width, plane.height);
  std::transform(plane.values.begin(), plane.values.end(), out.values.begin(),
                 [&](double x) { return ramp_unchecked(x, params); });
  return out;
}

RampParams draw_ramp(Rng& rng, double min_gap) {
  const double gap = std::clamp(min_gap, 0.0, 1.0);
  while (true) {
    double a = rng.uniform();
    double b = rng.uniform();
    if (a > b) std::swap(a, b);
    if (b - a >= gap) return {a, b};
  }
}

std::vector<Plane> SoftRegionMap::partition() const {
  std::vector<Plane> planes = region_weights;
  planes.push_back(background_weight);
  return planes;
}

double SoftRegionMap::max_sum_error() const {
  double worst = 0.0;
  const std::size_t n = background_weight.size();
  for (std::size_t i = 0; i < n; ++i) {
    double sum = background_weight.values[i];
    for (const auto& w : region_weights) sum += w.values[i];
    worst = std::max(worst, std::abs(sum - 1.0));
  }
  return worst;
}

SoftRegionMap carve_regions(std::span<const Plane> soft_maps) {
  if (soft_maps.empty()) throw ParameterError("at least one region map required");
  SoftRegionMap out;
  out.width = soft_maps[0].width;
  out.height = soft_maps[0].height;
  Plane remaining(out.width, out.height, 1.0);
  for (const Plane& m : soft_maps) {
    if (m.width != out.width || m.height != out.height) {
      throw ParameterError("region maps differ in size");
    }
    Plane w(out.width, out.height);
    for (std::size_t i = 0; i < w.size(); ++i) {
      w.values[i] = std::clamp(m.values[i], 0.0, 1.0) * remaining.values[i];
      remaining.values[i] = std::max(0.0, remaining.values[i] - w.values[i]);
    }
    out.region_weights.push_back(std::move(w));
  }
  out.background_weight = std::move(remaining);
  return out;
}

SoftRegionMap build_region_map(const ImageChannelStack& stack,
                               std::span<const RegionDraw> draws) {
  std::vector<Plane> maps;
  maps.reserve(draws.size());
  for (const auto& draw : draws) maps.push_back(ramp_threshold(stack[draw.channel], draw.ramp));
  SoftRegionMap out = carve_regions(maps);
  out.draws.assign(draws.begin(), draws.end());
  return out;
}

SoftRegionMap sample_region_map(const ImageChannelStack& stack, std::uint64_t seed,
                                int num_regions, const RegionMapOptions& options) {
  if (num_regions < 1) throw ParameterError("num_regions must be at least 1");
  Rng rng(seed);
  Plane remaining(stack.width, stack.height, 1.0);
  std::vector<Plane> weights;
  std::vector<RegionDraw> draws;
  for (int k = 0; k < num_regions; ++k) {
    RegionDraw draw;
    Plane w;
    for (int attempt = 0; attempt <= options.max_redraws; ++attempt) {
      draw.channel = static_cast<Channel>(rng.index(kNumChannels));
      draw.ramp = draw_ramp(rng, options.min_ramp_gap);
      draw.attempts = attempt + 1;
      const Plane m = ramp_threshold(stack[draw.channel], draw.ramp);
      w = Plane(stack.width, stack.height);
      for (std::size_t i = 0; i < w.size(); ++i) w.values[i] = m.values[i] * remaining.values[i];
      const double area = mean(w);
      if (area >= options.min_area && area <= options.max_area) break;
    }
    for (std::size_t i = 0; i < w.size(); ++i) {
      remaining.values[i] = std::max(0.0, remaining.values[i] - w.values[i]);
    }
    weights.push_back(std::move(w));
    draws.push_back(draw);
  }
  SoftRegionMap out;
  out.width = stack.width;
  out.height = stack.height;
  out.region_weights = std::move(weights);
  out.background_weight = std::move(remaining);
  out.seed = seed;
  out.draws = std::move(draws);
  return out;
}

SoftRegionMap sample_region_map(const RgbImage& image, std::uint64_t seed, int num_regions,
                                const RegionMapOptions& options) {
  if (num_regions < 1) throw ParameterError("num_regions must be at least 1");
  return sample_region_map(decompose_channels(image), seed, num_regions, options);
}

}  // namespace matinfuse
