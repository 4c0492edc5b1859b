// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string_view>

namespace matinfuse {

// Seeded generator with distribution mappings fixed in code, so the same
// seed gives the same draws regardless of standard library vendor.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  // Uniform in [0,1) with 53 bits of resolution.
  double uniform();
  double uniform(double lo, double hi);
  // Uniform in [0, n), unbiased. n must be > 0.
  std::size_t index(std::size_t n);
  // Uniform in [lo, hi] inclusive.
  int integer(int lo, int hi);
  bool bernoulli(double p) { return uniform() < p; }

 private:
  std::mt19937_64 engine_;
};

// Stable child seeds. Mixing is SplitMix64 over FNV-1a of the key.
std::uint64_t derive_seed(std::uint64_t seed, std::string_view key);
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace matinfuse
