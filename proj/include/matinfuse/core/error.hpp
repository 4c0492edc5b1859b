// Copyright 2026 The matinfuse Authors.
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <stdexcept>
#include <string>

namespace matinfuse {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Input bytes could not be decoded into an RGB raster.
class DecodeError : public Error {
 public:
  using Error::Error;
};

// An argument violates the operation's preconditions.
class ParameterError : public Error {
 public:
  using Error::Error;
};

// Image is smaller than the minimum the operation needs.
class TooSmallError : public Error {
 public:
  using Error::Error;
};

// Missing pools, catalogs, unreadable roots.
class ConfigError : public Error {
 public:
  using Error::Error;
};

// Malformed file content; message names the file and field.
class FormatError : public Error {
 public:
  using Error::Error;
};

}  // namespace matinfuse
