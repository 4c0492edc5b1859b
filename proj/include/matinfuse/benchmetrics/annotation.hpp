// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <filesystem>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

namespace matinfuse {

struct AnnotatedPoint {
  double x = 0.0;
  double y = 0.0;
  std::string group;
  bool operator==(const AnnotatedPoint&) const = default;
};

// Sparse points grouped by material state, with unordered pairs of groups
// marked partially similar.
struct PointAnnotation {
  std::string image_id;
  int width = 0;
  int height = 0;
  std::vector<AnnotatedPoint> points;
  std::vector<std::string> groups;
  std::set<std::pair<std::string, std::string>> similar_pairs;  // stored with first < second

  // Throws ParameterError naming the first broken invariant.
  void validate() const;
  [[nodiscard]] bool partially_similar(const std::string& a, const std::string& b) const;
  // Normalizes the pair order; self-pairs are rejected by validate().
  void add_similar_pair(const std::string& a, const std::string& b);

  bool operator==(const PointAnnotation&) const = default;
};

// Ordinal: 2 same group, 1 partially similar groups, 0 otherwise.
enum class GtSimilarityLevel : int { kDissimilar = 0, kPartial = 1, kIdentical = 2 };

// Points are addressed by index. Throws ParameterError for unknown indices.
GtSimilarityLevel gt_similarity(const PointAnnotation& ann, std::size_t p, std::size_t q);

// Schema:
//   {"schema_version": 1, "image_id": str, "width": int, "height": int,
//    "points": [{"x": num, "y": num, "group": str|int}],
//    "groups": [str]            (optional; defaults to the groups of the points)
//    "similar_pairs": [[g1, g2]]}
// Throws FormatError naming the source and field.
PointAnnotation parse_annotation(const nlohmann::json& j, const std::string& source);
PointAnnotation load_annotation(const std::filesystem::path& path);
nlohmann::json annotation_to_json(const PointAnnotation& ann);

}  // namespace matinfuse
