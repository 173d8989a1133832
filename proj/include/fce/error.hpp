// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace fce {

enum class ErrorCode {
  InvalidArgument,
  InvalidPolygon,
  ZeroPerimeter,
  DegenerateContour,
  DegreeTooLarge,
  ParseError,
  ShapeMismatch,
  ChannelCountMismatch,
  AlignmentMismatch,
  NonFinite,
  Io,
  Config,
};

inline const char* to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::InvalidPolygon: return "InvalidPolygon";
    case ErrorCode::ZeroPerimeter: return "ZeroPerimeter";
    case ErrorCode::DegenerateContour: return "DegenerateContour";
    case ErrorCode::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ShapeMismatch: return "ShapeMismatch";
    case ErrorCode::ChannelCountMismatch: return "ChannelCountMismatch";
    case ErrorCode::AlignmentMismatch: return "AlignmentMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::Io: return "Io";
    case ErrorCode::Config: return "Config";
  }
  return "Unknown";
}

/// Single exception type for the library; `code()` tells callers what went wrong.
/// Input-format errors additionally carry the 1-based line number (0 when unknown).
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message, std::size_t line = 0)
      : std::runtime_error(format(code, message, line)), code_(code), line_(line) {}

  ErrorCode code() const noexcept { return code_; }
  std::size_t line() const noexcept { return line_; }

 private:
  static std::string format(ErrorCode code, const std::string& message, std::size_t line) {
    std::string out = to_string(code);
    if (line > 0) out += " at line " + std::to_string(line);
    out += ": ";
    out += message;
    return out;
  }

  ErrorCode code_;
  std::size_t line_;
};

}  // namespace fce
