// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#include "matinfuse/core/io.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numeric>

#include <openssl/evp.h>
#include <opencv2/core.hpp>
#include <opencv2/imgcodecs.hpp>
#include <opencv2/imgproc.hpp>

#include "matinfuse/core/error.hpp"

namespace matinfuse {
namespace {

std::vector<std::uint8_t> encode_png(const cv::Mat& mat) {
  std::vector<std::uint8_t> out;
  const std::vector<int> params = {cv::IMWRITE_PNG_COMPRESSION, 6};
  if (!cv::imencode(".png", mat, out, params)) {
    throw Error("PNG encoding failed");
  }
  return out;
}

cv::Mat decode(std::span<const std::uint8_t> bytes) {
  if (bytes.empty()) return {};
  const cv::Mat buffer(1, static_cast<int>(bytes.size()), CV_8U,
                       const_cast<std::uint8_t*>(bytes.data()));
  try {
    return cv::imdecode(buffer, cv::IMREAD_UNCHANGED);
  } catch (const cv::Exception&) {
    return {};
  }
}

}  // namespace

std::vector<std::uint8_t> read_file(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

void write_file_atomic(const fs::path& path, std::span<const std::uint8_t> bytes) {
  if (path.has_parent_path()) fs::create_directories(path.parent_path());
  fs::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out.write(reinterpret_cast<const char*>(bytes.data()),
              static_cast<std::streamsize>(bytes.size()));
    if (!out) throw Error("write failed for " + tmp.string());
  }
  fs::rename(tmp, path);
}

void write_text_atomic(const fs::path& path, std::string_view text) {
  write_file_atomic(path, std::span(reinterpret_cast<const std::uint8_t*>(text.data()),
                                    text.size()));
}

void write_json_atomic(const fs::path& path, const Json& value) {
  write_text_atomic(path, value.dump(2) + "\n");
}

Json read_json(const fs::path& path) {
  const auto bytes = read_file(path);
  try {
    return Json::parse(bytes.begin(), bytes.end());
  } catch (const Json::parse_error& e) {
    throw FormatError(path.string() + ": " + e.what());
  }
}

RgbImage decode_rgb(std::span<const std::uint8_t> bytes) {
  cv::Mat mat = decode(bytes);
  if (mat.empty()) throw DecodeError("image could not be decoded");
  if (mat.depth() != CV_8U && mat.depth() != CV_16U) {
    throw DecodeError("unsupported sample depth");
  }
  if (mat.channels() == 4) {
    cv::cvtColor(mat, mat, cv::COLOR_BGRA2RGB);
  } else if (mat.channels() == 3) {
    cv::cvtColor(mat, mat, cv::COLOR_BGR2RGB);
  } else {
    throw DecodeError("image is not RGB");
  }
  const int depth = mat.depth() == CV_16U ? 16 : 8;
  RgbImage out(mat.cols, mat.rows, depth);
  for (int y = 0; y < mat.rows; ++y) {
    for (int x = 0; x < mat.cols; ++x) {
      for (int c = 0; c < 3; ++c) {
        out.sample(x, y, c) = depth == 16 ? mat.at<cv::Vec3w>(y, x)[c]
                                          : mat.at<cv::Vec3b>(y, x)[c];
      }
    }
  }
  return out;
}

RgbImage read_rgb(const fs::path& path) {
  try {
    return decode_rgb(read_file(path));
  } catch (const DecodeError& e) {
    throw DecodeError(path.string() + ": " + e.what());
  }
}

std::vector<std::uint8_t> encode_rgb_png(const RgbImage& image) {
  if (image.empty()) throw ParameterError("cannot encode empty image");
  cv::Mat mat(image.height, image.width, image.bit_depth == 16 ? CV_16UC3 : CV_8UC3);
  for (int y = 0; y < image.height; ++y) {
    for (int x = 0; x < image.width; ++x) {
      // OpenCV stores BGR.
      for (int c = 0; c < 3; ++c) {
        if (image.bit_depth == 16) {
          mat.at<cv::Vec3w>(y, x)[2 - c] = image.sample(x, y, c);
        } else {
          mat.at<cv::Vec3b>(y, x)[2 - c] = static_cast<std::uint8_t>(image.sample(x, y, c));
        }
      }
    }
  }
  return encode_png(mat);
}

void write_rgb_png(const fs::path& path, const RgbImage& image) {
  write_file_atomic(path, encode_rgb_png(image));
}

std::vector<std::uint8_t> encode_gray16_png(int width, int height,
                                            std::span<const std::uint16_t> values) {
  if (values.size() != static_cast<std::size_t>(width) * height || values.empty()) {
    throw ParameterError("gray plane size mismatch");
  }
  const cv::Mat mat(height, width, CV_16U, const_cast<std::uint16_t*>(values.data()));
  return encode_png(mat);
}

std::vector<std::uint8_t> encode_gray16_png(const Plane& plane) {
  std::vector<std::uint16_t> codes(plane.size());
  std::transform(plane.values.begin(), plane.values.end(), codes.begin(),
                 [](double v) { return quantize(v, 16); });
  return encode_gray16_png(plane.width, plane.height, codes);
}

void write_gray16_png(const fs::path& path, const Plane& plane) {
  write_file_atomic(path, encode_gray16_png(plane));
}

Plane read_gray_png(const fs::path& path) {
  const cv::Mat mat = decode(read_file(path));
  if (mat.empty() || mat.channels() != 1) {
    throw DecodeError(path.string() + ": expected single-channel image");
  }
  Plane out(mat.cols, mat.rows);
  const double scale = mat.depth() == CV_16U ? 1.0 / 65535.0 : 1.0 / 255.0;
  for (int y = 0; y < mat.rows; ++y) {
    for (int x = 0; x < mat.cols; ++x) {
      out.at(x, y) = (mat.depth() == CV_16U ? mat.at<std::uint16_t>(y, x)
                                             : mat.at<std::uint8_t>(y, x)) * scale;
    }
  }
  return out;
}

std::vector<std::vector<std::uint16_t>> quantize_partition(std::span<const Plane> planes) {
  if (planes.empty()) return {};
  const std::size_t n = planes[0].size();
  const std::size_t k = planes.size();
  std::vector<std::vector<std::uint16_t>> out(k, std::vector<std::uint16_t>(n, 0));
  std::vector<double> scaled(k);
  std::vector<std::size_t> order(k);
  for (std::size_t i = 0; i < n; ++i) {
    double total = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      scaled[j] = std::max(0.0, planes[j].values[i]);
      total += scaled[j];
    }
    if (total <= 0.0) {
      out[k - 1][i] = 65535;
      continue;
    }
    long assigned = 0;
    for (std::size_t j = 0; j < k; ++j) {
      scaled[j] = scaled[j] / total * 65535.0;
      const double floor_value = std::floor(scaled[j]);
      out[j][i] = static_cast<std::uint16_t>(floor_value);
      assigned += static_cast<long>(floor_value);
      scaled[j] -= floor_value;
    }
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return scaled[a] > scaled[b]; });
    for (long r = 0; r < 65535 - assigned; ++r) {
      ++out[order[static_cast<std::size_t>(r) % k]][i];
    }
  }
  return out;
}

std::string sha256_hex(std::string_view data) {
  unsigned char digest[EVP_MAX_MD_SIZE];
  unsigned int length = 0;
  EVP_MD_CTX* ctx = EVP_MD_CTX_new();
  EVP_DigestInit_ex(ctx, EVP_sha256(), nullptr);
  EVP_DigestUpdate(ctx, data.data(), data.size());
  EVP_DigestFinal_ex(ctx, digest, &length);
  EVP_MD_CTX_free(ctx);
  static constexpr char kHex[] = "0123456789abcdef";
  std::string out;
  out.reserve(length * 2);
  for (unsigned int i = 0; i < length; ++i) {
    out.push_back(kHex[digest[i] >> 4]);
    out.push_back(kHex[digest[i] & 0xF]);
  }
  return out;
}

}  // namespace matinfuse
