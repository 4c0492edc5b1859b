// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace matinfuse {

struct DegenerateThresholds {
  double min_std = 0.02;
  double min_mean = 0.05;
  double max_mean = 0.95;
};

struct ExtractionConfig {
  int cell_size = 40;
  // Square regions must be strictly larger than this many cells per side.
  int min_region_cells = 6;
  double js_threshold = 0.5;
  int histogram_bins = 32;
  DegenerateThresholds degenerate;

  // Throws ParameterError on out-of-range fields.
  void validate() const;
};

}  // namespace matinfuse
