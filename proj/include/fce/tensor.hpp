// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>
#include <bit>
#include <cstdint>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>
#include <vector>

#include "fce/error.hpp"

namespace fce {

/// In-memory form of a tensor file:
///   "FCT1" | u32 rank | rank x u32 dims | prod(dims) x f32 payload
/// All integers and reals little-endian; row-major, innermost dimension last.
struct Tensor {
  std::vector<std::uint32_t> dims;
  std::vector<float> values;

  std::size_t element_count() const {
    std::size_t n = 1;
    for (auto d : dims) n *= d;
    return n;
  }

  friend bool operator==(const Tensor&, const Tensor&) = default;
};

inline constexpr std::array<char, 4> kTensorMagic{'F', 'C', 'T', '1'};

namespace detail {

inline void put_u32(std::ostream& out, std::uint32_t v) {
  const char b[4] = {static_cast<char>(v & 0xff), static_cast<char>((v >> 8) & 0xff),
                     static_cast<char>((v >> 16) & 0xff), static_cast<char>((v >> 24) & 0xff)};
  out.write(b, 4);
}

inline std::uint32_t get_u32(std::istream& in) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4)) throw Error(ErrorCode::ParseError, "truncated tensor file");
  return static_cast<std::uint32_t>(b[0]) | (static_cast<std::uint32_t>(b[1]) << 8) |
         (static_cast<std::uint32_t>(b[2]) << 16) | (static_cast<std::uint32_t>(b[3]) << 24);
}

}  // namespace detail

inline void write_tensor(std::ostream& out, const Tensor& t) {
  if (t.dims.empty() || t.dims.size() > 4) throw Error(ErrorCode::InvalidArgument, "tensor rank must be 1..4");
  if (t.values.size() != t.element_count()) {
    throw Error(ErrorCode::InvalidArgument, "tensor payload does not match its dimensions");
  }
  out.write(kTensorMagic.data(), 4);
  detail::put_u32(out, static_cast<std::uint32_t>(t.dims.size()));
  for (auto d : t.dims) detail::put_u32(out, d);
  for (float v : t.values) detail::put_u32(out, std::bit_cast<std::uint32_t>(v));
  if (!out) throw Error(ErrorCode::Io, "failed writing tensor");
}

inline Tensor read_tensor(std::istream& in) {
  std::array<char, 4> magic{};
  if (!in.read(magic.data(), 4) || magic != kTensorMagic) throw Error(ErrorCode::ParseError, "bad tensor magic");
  const std::uint32_t rank = detail::get_u32(in);
  if (rank < 1 || rank > 4) throw Error(ErrorCode::ParseError, "tensor rank must be 1..4");
  Tensor t;
  for (std::uint32_t i = 0; i < rank; ++i) t.dims.push_back(detail::get_u32(in));
  const std::size_t n = t.element_count();
  t.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) t.values[i] = std::bit_cast<float>(detail::get_u32(in));
  if (in.peek() != std::char_traits<char>::eof()) throw Error(ErrorCode::ParseError, "trailing bytes after tensor");
  return t;
}

inline void save_tensor(const std::string& path, const Tensor& t) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::Io, "cannot open " + path + " for writing");
  write_tensor(out, t);
}

inline Tensor load_tensor(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::Io, "cannot open " + path);
  return read_tensor(in);
}

}  // namespace fce
