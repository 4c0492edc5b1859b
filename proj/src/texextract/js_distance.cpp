// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/texextract/js_distance.hpp"

#include <algorithm>
#include <cmath>

#include "matinfuse/core/error.hpp"

namespace matinfuse {
namespace {

double plogp(double p) { return p > 0.0 ? p * std::log2(p) : 0.0; }

}  // namespace

double js_distance(std::span<const double> p, std::span<const double> q) {
  if (p.size() != q.size()) throw ParameterError("histogram bin counts differ");
  double mixed = 0.0;
  double hp = 0.0;
  double hq = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    mixed -= plogp(0.5 * (p[i] + q[i]));
    hp -= plogp(p[i]);
    hq -= plogp(q[i]);
  }
  const double divergence = std::clamp(mixed - 0.5 * (hp + hq), 0.0, 1.0);
  return std::sqrt(divergence);
}

CountJsDistance::CountJsDistance(std::uint32_t samples)
    : samples_(samples), single_(samples + 1), mixed_(2 * static_cast<std::size_t>(samples) + 1) {
  if (samples == 0) throw ParameterError("histogram must hold samples");
  const double n = samples;
  for (std::size_t c = 0; c < single_.size(); ++c) single_[c] = plogp(c / n);
  for (std::size_t s = 0; s < mixed_.size(); ++s) mixed_[s] = plogp(s / (2.0 * n));
}

double CountJsDistance::entropy(std::span<const std::uint32_t> counts) const {
  double h = 0.0;
  for (std::uint32_t c : counts) h -= single_[c];
  return h;
}

double CountJsDistance::divergence(std::span<const std::uint32_t> p, double entropy_p,
                                   std::span<const std::uint32_t> q, double entropy_q) const {
  double mixed = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) mixed -= mixed_[p[i] + q[i]];
  return mixed - 0.5 * (entropy_p + entropy_q);
}

double CountJsDistance::distance(std::span<const std::uint32_t> p,
                                 std::span<const std::uint32_t> q) const {
  if (p.size() != q.size()) throw ParameterError("histogram bin counts differ");
  const double d = divergence(p, entropy(p), q, entropy(q));
  return std::sqrt(std::clamp(d, 0.0, 1.0));
}

}  // namespace matinfuse
