// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <span>
#include <vector>

namespace matinfuse {

// Square root of the base-2 Jensen-Shannon divergence. Throws ParameterError
// on mismatched lengths.
double js_distance(std::span<const double> p, std::span<const double> q);

// Jensen-Shannon distance between histograms given as integer counts over the
// same number of samples. Entropy terms come from a table indexed by count.
class CountJsDistance {
 public:
  explicit CountJsDistance(std::uint32_t samples);

  // -sum c/N log2(c/N) for one histogram.
  [[nodiscard]] double entropy(std::span<const std::uint32_t> counts) const;
  // Divergence (not its root), given precomputed entropies of the inputs.
  [[nodiscard]] double divergence(std::span<const std::uint32_t> p, double entropy_p,
                                  std::span<const std::uint32_t> q, double entropy_q) const;
  [[nodiscard]] double distance(std::span<const std::uint32_t> p,
                                std::span<const std::uint32_t> q) const;

 private:
  std::uint32_t samples_;
  std::vector<double> single_;  // c/N log2(c/N), c in [0,N]
  std::vector<double> mixed_;   // s/2N log2(s/2N), s in [0,2N]
};

}  // namespace matinfuse
