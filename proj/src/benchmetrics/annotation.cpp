// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/benchmetrics/annotation.hpp"

#include <algorithm>

#include "matinfuse/core/error.hpp"
#include "matinfuse/core/io.hpp"

namespace matinfuse {
namespace {

std::pair<std::string, std::string> ordered(const std::string& a, const std::string& b) {
  return a < b ? std::pair{a, b} : std::pair{b, a};
}

std::string group_id(const Json& j, const std::string& where) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw FormatError(where + ": group must be a string or integer");
}

}  // namespace

void PointAnnotation::validate() const {
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto& p = points[i];
    if (std::find(groups.begin(), groups.end(), p.group) == groups.end()) {
      throw ParameterError(image_id + ": point " + std::to_string(i) + " has unknown group " +
                           p.group);
    }
    if (p.x < 0.0 || p.y < 0.0 || p.x >= width || p.y >= height) {
      throw ParameterError(image_id + ": point " + std::to_string(i) + " outside image bounds");
    }
  }
  for (const auto& [a, b] : similar_pairs) {
    if (a == b) throw ParameterError(image_id + ": self similar pair " + a);
    for (const auto& g : {a, b}) {
      if (std::find(groups.begin(), groups.end(), g) == groups.end()) {
        throw ParameterError(image_id + ": similar pair references unknown group " + g);
      }
    }
  }
}

bool PointAnnotation::partially_similar(const std::string& a, const std::string& b) const {
  return similar_pairs.count(ordered(a, b)) > 0;
}

void PointAnnotation::add_similar_pair(const std::string& a, const std::string& b) {
  similar_pairs.insert(ordered(a, b));
}

GtSimilarityLevel gt_similarity(const PointAnnotation& ann, std::size_t p, std::size_t q) {
  if (p >= ann.points.size() || q >= ann.points.size()) {
    throw ParameterError("unknown point index " + std::to_string(std::max(p, q)));
  }
  const auto& gp = ann.points[p].group;
  const auto& gq = ann.points[q].group;
  if (gp == gq) return GtSimilarityLevel::kIdentical;
  if (ann.partially_similar(gp, gq)) return GtSimilarityLevel::kPartial;
  return GtSimilarityLevel::kDissimilar;
}

PointAnnotation parse_annotation(const Json& j, const std::string& source) {
  PointAnnotation ann;
  try {
    ann.image_id = j.at("image_id").get<std::string>();
    ann.width = j.at("width").get<int>();
    ann.height = j.at("height").get<int>();
    std::size_t i = 0;
    for (const auto& p : j.at("points")) {
      const std::string where = source + ": points[" + std::to_string(i++) + "]";
      ann.points.push_back(
          {p.at("x").get<double>(), p.at("y").get<double>(), group_id(p.at("group"), where)});
    }
    if (j.contains("groups")) {
      for (const auto& g : j.at("groups")) ann.groups.push_back(group_id(g, source + ": groups"));
    } else {
      for (const auto& p : ann.points) {
        if (std::find(ann.groups.begin(), ann.groups.end(), p.group) == ann.groups.end()) {
          ann.groups.push_back(p.group);
        }
      }
    }
    if (j.contains("similar_pairs")) {
      for (const auto& pair : j.at("similar_pairs")) {
        if (!pair.is_array() || pair.size() != 2) {
          throw FormatError(source + ": similar_pairs entries must be [g1, g2]");
        }
        const std::string a = group_id(pair[0], source + ": similar_pairs");
        const std::string b = group_id(pair[1], source + ": similar_pairs");
        if (a == b) throw FormatError(source + ": similar_pairs has self pair " + a);
        ann.add_similar_pair(a, b);
      }
    }
  } catch (const Json::exception& e) {
    throw FormatError(source + ": " + e.what());
  }
  try {
    ann.validate();
  } catch (const ParameterError& e) {
    throw FormatError(source + ": " + e.what());
  }
  return ann;
}

PointAnnotation load_annotation(const fs::path& path) {
  return parse_annotation(read_json(path), path.string());
}

Json annotation_to_json(const PointAnnotation& ann) {
  Json points = Json::array();
  for (const auto& p : ann.points) points.push_back({{"x", p.x}, {"y", p.y}, {"group", p.group}});
  Json pairs = Json::array();
  for (const auto& [a, b] : ann.similar_pairs) pairs.push_back({a, b});
  return {{"schema_version", 1}, {"image_id", ann.image_id}, {"width", ann.width},
          {"height", ann.height}, {"points", points},       {"groups", ann.groups},
          {"similar_pairs", pairs}};
}

}  // namespace matinfuse
