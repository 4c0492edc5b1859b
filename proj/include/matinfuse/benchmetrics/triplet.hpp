// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>

#include <json.hpp>

#include "matinfuse/benchmetrics/annotation.hpp"
#include "matinfuse/benchmetrics/prediction.hpp"

namespace matinfuse {

enum class SoftMode {
  // Any of the three points lies in a group that has a partial-similarity pair.
  kAnyPointInSimilarGroup,
  // The anchor is partially similar to one of the two candidates.
  kAnchorRelation,
};

struct TripletOptions {
  SoftMode soft_mode = SoftMode::kAnyPointInSimilarGroup;
  double tie_credit = 0.5;
};

struct TripletScore {
  std::map<std::string, double> per_group;  // keyed by anchor group
  std::optional<double> overall;            // unweighted mean of per_group
  std::map<std::string, double> soft_per_group;
  std::optional<double> soft_only;
  std::size_t triplets = 0;
  std::size_t soft_triplets = 0;
  std::size_t ignored = 0;  // ground truth ties

  [[nodiscard]] nlohmann::json to_json() const;
};

// Scores every anchor with every unordered pair of other points whose GT
// levels to the anchor differ. Correct when the predicted order agrees; equal
// predictions earn tie_credit. Throws ParameterError naming a missing pair.
TripletScore triplet_score(const PointAnnotation& ann, const PairwisePrediction& pred,
                           const TripletOptions& options = {});

}  // namespace matinfuse
