// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/pbrsynth/mixing.hpp"

#include <cmath>

#include "matinfuse/core/rng.hpp"

namespace matinfuse {
namespace {

Plane blend(const Plane& a, const Plane& b, double w) {
  Plane out(a.width, a.height);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out.values[i] = w * a.values[i] + (1.0 - w) * b.values[i];
  }
  return out;
}

PropertyMap resample(const PropertyMap& map, int width, int height) {
  if (is_uniform(map)) return map;
  return resize_bilinear(std::get<Plane>(map), width, height);
}

Plane as_plane(const PropertyMap& map, int width, int height) {
  if (const double* u = std::get_if<double>(&map)) return Plane(width, height, *u);
  return std::get<Plane>(map);
}

NormalMap renormalize(NormalMap n) {
  for (std::size_t i = 0; i < n.encoded[0].size(); ++i) {
    double v[3];
    double len2 = 0.0;
    for (int c = 0; c < 3; ++c) {
      v[c] = 2.0 * n.encoded[c].values[i] - 1.0;
      len2 += v[c] * v[c];
    }
    if (len2 <= 1e-24) {
      v[0] = v[1] = 0.0;
      v[2] = 1.0;
      len2 = 1.0;
    }
    const double inv = 1.0 / std::sqrt(len2);
    for (int c = 0; c < 3; ++c) n.encoded[c].values[i] = 0.5 * (v[c] * inv + 1.0);
  }
  return n;
}

}  // namespace

MixWeights draw_mix_weights(MixMode mode, std::uint64_t seed) {
  Rng rng(seed);
  MixWeights w;
  if (mode == MixMode::kPerMaterial) {
    const double shared = rng.uniform();
    w.albedo = shared;
    w.properties.fill(shared);
    return w;
  }
  w.albedo = rng.uniform();
  for (double& p : w.properties) p = rng.uniform();
  return w;
}

PbrMaterial mix_pbr(const PbrMaterial& a, const PbrMaterial& b_in, const MixWeights& weights) {
  const int width = a.width;
  const int height = a.height;
  const bool same_size = b_in.width == width && b_in.height == height;

  PbrMaterial out;
  out.id = "mix(" + a.id + "," + b_in.id + ")";
  out.width = width;
  out.height = height;
  out.provenance.parents = {a.id, b_in.id};

  const RgbPlanes b_albedo = same_size ? b_in.albedo : resize_bilinear(b_in.albedo, width, height);
  for (std::size_t c = 0; c < 3; ++c) {
    out.albedo[c] = weights.albedo == 1.0 ? a.albedo[c] : blend(a.albedo[c], b_albedo[c], weights.albedo);
  }

  for (Property p : kAllProperties) {
    const int i = static_cast<int>(p);
    const double w = weights.properties[i];
    const PropertyMap& pa = a.properties[i];
    const PropertyMap pb = same_size ? b_in.properties[i] : resample(b_in.properties[i], width, height);
    if (w == 1.0) {
      out.properties[i] = pa;
    } else if (w == 0.0) {
      out.properties[i] = pb;
    } else if (is_uniform(pa) && is_uniform(pb)) {
      out.properties[i] = w * std::get<double>(pa) + (1.0 - w) * std::get<double>(pb);
    } else {
      out.properties[i] = blend(as_plane(pa, width, height), as_plane(pb, width, height), w);
    }
  }

  const double wn = weights.properties[static_cast<int>(Property::kHeight)];
  NormalMap b_normal = b_in.normal;
  if (!same_size) {
    for (auto& c : b_normal.encoded) c = resize_bilinear(c, width, height);
    b_normal = renormalize(std::move(b_normal));
  }
  if (wn == 1.0) {
    out.normal = a.normal;
  } else if (wn == 0.0) {
    out.normal = std::move(b_normal);
  } else {
    NormalMap mixed;
    for (std::size_t c = 0; c < 3; ++c) {
      mixed.encoded[c] = blend(a.normal.encoded[c], b_normal.encoded[c], wn);
    }
    out.normal = renormalize(std::move(mixed));
  }
  return out;
}

PbrMaterial mix_pbr(const PbrMaterial& a, const PbrMaterial& b, MixMode mode, std::uint64_t seed) {
  PbrMaterial out = mix_pbr(a, b, draw_mix_weights(mode, seed));
  out.provenance.seed = seed;
  return out;
}

}  // namespace matinfuse
