// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/benchmetrics/triplet.hpp"

#include <set>
#include <vector>

#include "matinfuse/core/error.hpp"

namespace matinfuse {
namespace {

struct Tally {
  double credit = 0.0;
  std::size_t count = 0;
};

std::optional<double> mean_of_groups(const std::map<std::string, Tally>& tallies,
                                     std::map<std::string, double>& per_group) {
  double sum = 0.0;
  for (const auto& [group, t] : tallies) {
    const double score = t.credit / static_cast<double>(t.count);
    per_group[group] = score;
    sum += score;
  }
  if (per_group.empty()) return std::nullopt;
  return sum / static_cast<double>(per_group.size());
}

}  // namespace

nlohmann::json TripletScore::to_json() const {
  nlohmann::json j;
  j["per_group"] = per_group;
  j["overall"] = overall ? nlohmann::json(*overall) : nlohmann::json(nullptr);
  j["soft_per_group"] = soft_per_group;
  j["soft_only"] = soft_only ? nlohmann::json(*soft_only) : nlohmann::json(nullptr);
  j["triplets"] = triplets;
  j["soft_triplets"] = soft_triplets;
  j["ignored"] = ignored;
  return j;
}

TripletScore triplet_score(const PointAnnotation& ann, const PairwisePrediction& pred,
                           const TripletOptions& options) {
  const std::size_t n = ann.points.size();
  if (pred.size() < n) throw ParameterError("prediction covers fewer points than the annotation");

  std::vector<int> level(n * n);
  std::vector<double> value(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t u = 0; u < n; ++u) {
      if (a == u) continue;
      level[a * n + u] = static_cast<int>(gt_similarity(ann, a, u));
      const auto v = pred.get(a, u);
      if (!v) {
        throw ParameterError("missing prediction for pair (" + std::to_string(a) + "," +
                             std::to_string(u) + ")");
      }
      value[a * n + u] = *v;
    }
  }
  std::set<std::string> soft_groups;
  for (const auto& [g1, g2] : ann.similar_pairs) {
    soft_groups.insert(g1);
    soft_groups.insert(g2);
  }
  std::vector<char> in_soft_group(n);
  for (std::size_t i = 0; i < n; ++i) in_soft_group[i] = soft_groups.count(ann.points[i].group) > 0;

  TripletScore score;
  std::map<std::string, Tally> all;
  std::map<std::string, Tally> soft;
  for (std::size_t a = 0; a < n; ++a) {
    const std::string& group = ann.points[a].group;
    for (std::size_t u = 0; u < n; ++u) {
      if (u == a) continue;
      for (std::size_t v = u + 1; v < n; ++v) {
        if (v == a) continue;
        const int lu = level[a * n + u];
        const int lv = level[a * n + v];
        if (lu == lv) {
          ++score.ignored;
          continue;
        }
        const double pu = value[a * n + u];
        const double pv = value[a * n + v];
        double credit;
        if (pu == pv) {
          credit = options.tie_credit;
        } else {
          credit = ((pu > pv) == (lu > lv)) ? 1.0 : 0.0;
        }
        Tally& t = all[group];
        t.credit += credit;
        ++t.count;
        ++score.triplets;
        const bool is_soft = options.soft_mode == SoftMode::kAnchorRelation
                                 ? (lu == 1 || lv == 1)
                                 : (in_soft_group[a] || in_soft_group[u] || in_soft_group[v]);
        if (is_soft) {
          Tally& s = soft[group];
          s.credit += credit;
          ++s.count;
          ++score.soft_triplets;
        }
      }
    }
  }
  score.overall = mean_of_groups(all, score.per_group);
  score.soft_only = mean_of_groups(soft, score.soft_per_group);
  return score;
}

}  // namespace matinfuse
