// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/benchmetrics/prediction.hpp"

#include <algorithm>
#include <bit>
#include <cctype>
#include <charconv>
#include <cstring>
#include <fstream>
#include <sstream>

#include "matinfuse/core/error.hpp"
#include "matinfuse/core/io.hpp"

namespace matinfuse {
namespace {

std::string trim(std::string s) {
  const auto not_space = [](unsigned char c) { return !std::isspace(c); };
  s.erase(s.begin(), std::find_if(s.begin(), s.end(), not_space));
  s.erase(std::find_if(s.rbegin(), s.rend(), not_space).base(), s.end());
  return s;
}

std::string format_double(double v) {
  char buf[32];
  const auto result = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, result.ptr);
}

}  // namespace

PairwisePrediction::PairwisePrediction(std::size_t num_points)
    : n_(num_points), values_(num_points * num_points, 0.0), present_(num_points * num_points, 0) {}

void PairwisePrediction::set(std::size_t i, std::size_t j, double value) {
  if (i >= n_ || j >= n_) throw ParameterError("prediction index out of range");
  values_[i * n_ + j] = value;
  present_[i * n_ + j] = 1;
}

void PairwisePrediction::set_symmetric(std::size_t i, std::size_t j, double value) {
  set(i, j, value);
  set(j, i, value);
}

std::optional<double> PairwisePrediction::get(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_ || !present_[i * n_ + j]) return std::nullopt;
  return values_[i * n_ + j];
}

PairwisePrediction gt_as_prediction(const PointAnnotation& ann) {
  const std::size_t n = ann.points.size();
  PairwisePrediction pred(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      pred.set(i, j, static_cast<double>(static_cast<int>(gt_similarity(ann, i, j))));
    }
  }
  return pred;
}

PairwisePrediction read_sparse_csv(const fs::path& path, std::size_t num_points) {
  std::ifstream in(path);
  if (!in) throw FormatError("cannot open " + path.string());
  PairwisePrediction explicit_pred(num_points);
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    if (line_no == 1 && line.rfind("point_i", 0) == 0) continue;
    std::stringstream row(line);
    std::string a, b, v;
    if (!std::getline(row, a, ',') || !std::getline(row, b, ',') || !std::getline(row, v)) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) + ": expected 3 columns");
    }
    try {
      const long i = std::stol(trim(a));
      const long j = std::stol(trim(b));
      const double value = std::stod(trim(v));
      if (i < 0 || j < 0 || static_cast<std::size_t>(i) >= num_points ||
          static_cast<std::size_t>(j) >= num_points) {
        throw FormatError(path.string() + ":" + std::to_string(line_no) + ": point index out of range");
      }
      explicit_pred.set(static_cast<std::size_t>(i), static_cast<std::size_t>(j), value);
    } catch (const std::logic_error&) {
      throw FormatError(path.string() + ":" + std::to_string(line_no) + ": malformed number");
    }
  }
  PairwisePrediction pred = explicit_pred;
  for (std::size_t i = 0; i < num_points; ++i) {
    for (std::size_t j = 0; j < num_points; ++j) {
      if (!explicit_pred.get(i, j)) {
        if (const auto mirrored = explicit_pred.get(j, i)) pred.set(i, j, *mirrored);
      }
    }
  }
  return pred;
}

void write_sparse_csv(const fs::path& path, const PairwisePrediction& pred) {
  std::string text = "point_i,point_j,similarity\n";
  for (std::size_t i = 0; i < pred.size(); ++i) {
    for (std::size_t j = 0; j < pred.size(); ++j) {
      if (const auto v = pred.get(i, j)) {
        text += std::to_string(i) + "," + std::to_string(j) + "," + format_double(*v) + "\n";
      }
    }
  }
  write_text_atomic(path, text);
}

PairwisePrediction sample_dense(const DensePrediction& dense, const PointAnnotation& ann) {
  const std::size_t n = ann.points.size();
  if (dense.planes.size() != n) {
    throw ParameterError("dense prediction needs one plane per annotated point");
  }
  PairwisePrediction pred(n);
  for (std::size_t a = 0; a < n; ++a) {
    const Plane& plane = dense.planes[a];
    if (plane.width != ann.width || plane.height != ann.height) {
      throw ParameterError("dense prediction plane size differs from image");
    }
    for (std::size_t u = 0; u < n; ++u) {
      const int x = std::clamp(static_cast<int>(ann.points[u].x), 0, plane.width - 1);
      const int y = std::clamp(static_cast<int>(ann.points[u].y), 0, plane.height - 1);
      pred.set(a, u, plane.at(x, y));
    }
  }
  return pred;
}

Plane read_prediction_plane(const fs::path& path, int width, int height) {
  if (path.extension() == ".bin") {
    const auto bytes = read_file(path);
    const std::size_t n = static_cast<std::size_t>(width) * height;
    if (bytes.size() != n * 4) {
      throw FormatError(path.string() + ": expected " + std::to_string(n) + " float32 values");
    }
    Plane out(width, height);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t bits = 0;
      for (int b = 0; b < 4; ++b) bits |= static_cast<std::uint32_t>(bytes[i * 4 + b]) << (8 * b);
      out.values[i] = static_cast<double>(std::bit_cast<float>(bits));
    }
    return out;
  }
  Plane out = read_gray_png(path);
  if (out.width != width || out.height != height) {
    throw FormatError(path.string() + ": plane size differs from image");
  }
  return out;
}

}  // namespace matinfuse
