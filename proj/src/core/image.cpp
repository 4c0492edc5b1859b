// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/core/image.hpp"

#include <algorithm>
#include <cmath>

#include <opencv2/core.hpp>
#include <opencv2/imgproc.hpp>

#include "matinfuse/core/error.hpp"

namespace matinfuse {

Plane::Plane(int w, int h, double fill)
    : width(w), height(h), values(static_cast<std::size_t>(w) * h, fill) {}

RgbPlanes::RgbPlanes(int w, int h, double fill)
    : channels{Plane(w, h, fill), Plane(w, h, fill), Plane(w, h, fill)} {}

RgbImage::RgbImage(int w, int h, int depth)
    : width(w), height(h), bit_depth(depth),
      samples(static_cast<std::size_t>(w) * h * 3, 0) {}

RgbImage RgbImage::crop(int x0, int y0, int w, int h) const {
  if (x0 < 0 || y0 < 0 || w <= 0 || h <= 0 || x0 + w > width || y0 + h > height) {
    throw ParameterError("crop rectangle outside image bounds");
  }
  RgbImage out(w, h, bit_depth);
  for (int y = 0; y < h; ++y) {
    const auto* src = &samples[(static_cast<std::size_t>(y0 + y) * width + x0) * 3];
    std::copy(src, src + static_cast<std::size_t>(w) * 3,
              &out.samples[static_cast<std::size_t>(y) * w * 3]);
  }
  return out;
}

std::uint16_t quantize(double v, int bit_depth) {
  const double max_value = bit_depth == 16 ? 65535.0 : 255.0;
  const double scaled = std::floor(std::clamp(v, 0.0, 1.0) * max_value + 0.5);
  return static_cast<std::uint16_t>(scaled);
}

RgbPlanes to_planes(const RgbImage& image) {
  RgbPlanes out(image.width, image.height);
  const double scale = 1.0 / image.max_value();
  const std::size_t n = static_cast<std::size_t>(image.width) * image.height;
  for (std::size_t i = 0; i < n; ++i) {
    for (int c = 0; c < 3; ++c) {
      out[c].values[i] = image.samples[i * 3 + c] * scale;
    }
  }
  return out;
}

RgbImage to_image(const RgbPlanes& planes, int bit_depth) {
  RgbImage out(planes.width(), planes.height(), bit_depth);
  const std::size_t n = planes[0].size();
  for (std::size_t i = 0; i < n; ++i) {
    for (int c = 0; c < 3; ++c) {
      out.samples[i * 3 + c] = quantize(planes[c].values[i], bit_depth);
    }
  }
  return out;
}

Plane resize_bilinear(const Plane& plane, int width, int height) {
  if (plane.width == width && plane.height == height) return plane;
  if (plane.empty() || width <= 0 || height <= 0) {
    throw ParameterError("resize of empty plane or to empty size");
  }
  const cv::Mat src(plane.height, plane.width, CV_64F,
                    const_cast<double*>(plane.values.data()));
  Plane out(width, height);
  cv::Mat dst(height, width, CV_64F, out.values.data());
  cv::resize(src, dst, dst.size(), 0, 0, cv::INTER_LINEAR);
  return out;
}

RgbPlanes resize_bilinear(const RgbPlanes& planes, int width, int height) {
  RgbPlanes out;
  for (std::size_t c = 0; c < 3; ++c) out[c] = resize_bilinear(planes[c], width, height);
  return out;
}

RgbImage resize_image(const RgbImage& image, int width, int height) {
  if (image.width == width && image.height == height) return image;
  if (image.empty() || width <= 0 || height <= 0) {
    throw ParameterError("resize of empty image or to empty size");
  }
  const cv::Mat src(image.height, image.width, CV_16UC3,
                    const_cast<std::uint16_t*>(image.samples.data()));
  RgbImage out(width, height, image.bit_depth);
  cv::Mat dst(height, width, CV_16UC3, out.samples.data());
  const bool shrinking = width < image.width && height < image.height;
  cv::resize(src, dst, dst.size(), 0, 0, shrinking ? cv::INTER_AREA : cv::INTER_LINEAR);
  return out;
}

Plane gaussian_blur(const Plane& plane, double sigma) {
  if (sigma <= 0.0 || plane.empty()) return plane;
  const cv::Mat src(plane.height, plane.width, CV_64F,
                    const_cast<double*>(plane.values.data()));
  Plane out(plane.width, plane.height);
  cv::Mat dst(plane.height, plane.width, CV_64F, out.values.data());
  cv::GaussianBlur(src, dst, cv::Size(0, 0), sigma, sigma, cv::BORDER_REFLECT_101);
  return out;
}

}  // namespace matinfuse
