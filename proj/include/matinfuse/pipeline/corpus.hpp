// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "matinfuse/scenegen2d/dataset.hpp"

namespace matinfuse {

// Every .png/.jpg/.jpeg below the roots, sorted by id. The id is the path
// relative to its root, prefixed by the root index when there are several.
// Throws ConfigError when a root is missing or not a directory.
std::vector<PoolItem> walk_corpus(const std::vector<std::filesystem::path>& roots);

// Id made safe to use as a single path component.
std::string path_safe(std::string_view id);

}  // namespace matinfuse
