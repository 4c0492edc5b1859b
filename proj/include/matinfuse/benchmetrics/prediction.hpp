// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "matinfuse/benchmetrics/annotation.hpp"
#include "matinfuse/core/image.hpp"

namespace matinfuse {

// Predicted similarity between annotated points, higher is more similar.
// Entries may be missing.
class PairwisePrediction {
 public:
  explicit PairwisePrediction(std::size_t num_points = 0);

  [[nodiscard]] std::size_t size() const { return n_; }
  void set(std::size_t i, std::size_t j, double value);
  // Sets both orders.
  void set_symmetric(std::size_t i, std::size_t j, double value);
  [[nodiscard]] std::optional<double> get(std::size_t i, std::size_t j) const;
  // Applies f to every present value.
  template <typename F>
  [[nodiscard]] PairwisePrediction transformed(F f) const {
    PairwisePrediction out = *this;
    for (std::size_t k = 0; k < values_.size(); ++k) {
      if (present_[k]) out.values_[k] = f(values_[k]);
    }
    return out;
  }

 private:
  std::size_t n_;
  std::vector<double> values_;
  std::vector<std::uint8_t> present_;
};

// Ground truth ordinal levels as a prediction.
PairwisePrediction gt_as_prediction(const PointAnnotation& ann);

// CSV with header point_i,point_j,similarity. A pair given in one order only
// is mirrored. Throws FormatError with file and line on malformed rows.
PairwisePrediction read_sparse_csv(const std::filesystem::path& path, std::size_t num_points);
void write_sparse_csv(const std::filesystem::path& path, const PairwisePrediction& pred);

// planes[a] is the similarity of every pixel to point a.
struct DensePrediction {
  int width = 0;
  int height = 0;
  std::vector<Plane> planes;
};

// pred(a,u) = planes[a] at u's pixel (coordinates rounded down and clamped).
PairwisePrediction sample_dense(const DensePrediction& dense, const PointAnnotation& ann);

// Reads a 16-bit PNG scaled to [0,1] or a raw little-endian float32 plane
// (.bin, width*height values).
Plane read_prediction_plane(const std::filesystem::path& path, int width, int height);

}  // namespace matinfuse
