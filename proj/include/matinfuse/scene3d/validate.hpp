// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "matinfuse/scene3d/assets.hpp"
#include "matinfuse/scene3d/descriptor.hpp"

namespace matinfuse {

struct ValidationFailure {
  std::string rule;     // e.g. "unresolved asset", "unknown region"
  std::string subject;  // the offending id or field
  bool operator==(const ValidationFailure&) const = default;
};

struct ValidationReport {
  std::vector<ValidationFailure> failures;

  [[nodiscard]] bool ok() const { return failures.empty(); }
  [[nodiscard]] bool has(const std::string& rule) const;
  [[nodiscard]] nlohmann::json to_json() const;
};

ValidationReport validate_descriptor(const Scene3DDescriptor& desc, const AssetIndex& assets);

}  // namespace matinfuse
