// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/pipeline/corpus.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "matinfuse/core/error.hpp"

namespace matinfuse {
namespace fs = std::filesystem;
namespace {

bool is_image(const fs::path& p) {
  std::string ext = p.extension().string();
  std::transform(ext.begin(), ext.end(), ext.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return ext == ".png" || ext == ".jpg" || ext == ".jpeg";
}

}  // namespace

std::vector<PoolItem> walk_corpus(const std::vector<fs::path>& roots) {
  std::vector<PoolItem> items;
  for (std::size_t r = 0; r < roots.size(); ++r) {
    const fs::path& root = roots[r];
    std::error_code ec;
    if (!fs::is_directory(root, ec)) {
      throw ConfigError("corpus root is not a readable directory: " + root.string());
    }
    fs::recursive_directory_iterator it(root, fs::directory_options::follow_directory_symlink, ec);
    if (ec) throw ConfigError("cannot read corpus root " + root.string() + ": " + ec.message());
    for (const auto& entry : it) {
      if (!entry.is_regular_file() || !is_image(entry.path())) continue;
      std::string id = entry.path().lexically_relative(root).generic_string();
      if (roots.size() > 1) id = std::to_string(r) + ":" + id;
      items.push_back({id, entry.path()});
    }
  }
  std::sort(items.begin(), items.end(),
            [](const PoolItem& a, const PoolItem& b) { return a.id < b.id; });
  return items;
}

std::string path_safe(std::string_view id) {
  std::string out;
  for (unsigned char c : id) {
    if (std::isalnum(c) || c == '.' || c == '-' || c == '_' || c == '@') {
      out.push_back(static_cast<char>(c));
    } else {
      char buf[4];
      std::snprintf(buf, sizeof(buf), "%%%02X", c);
      out += buf;
    }
  }
  if (out == "." || out == "..") out = "%2E" + out.substr(1);
  return out;
}

}  // namespace matinfuse
