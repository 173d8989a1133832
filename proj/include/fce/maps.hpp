// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstddef>
#include <vector>

#include "fce/error.hpp"
#include "fce/geometry.hpp"

namespace fce {

/// Dense row-major H x W map.
template <typename T>
class Grid {
 public:
  Grid() = default;
  Grid(std::size_t rows, std::size_t cols, T fill = T{}) : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t size() const noexcept { return data_.size(); }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::vector<T>& data() noexcept { return data_; }
  const std::vector<T>& data() const noexcept { return data_; }

  template <typename U>
  bool same_shape(const Grid<U>& o) const {
    return rows_ == o.rows() && cols_ == o.cols();
  }

  friend bool operator==(const Grid&, const Grid&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

/// Dense C x H x W stack of maps, channel-major.
class ChannelStack {
 public:
  ChannelStack() = default;
  ChannelStack(std::size_t channels, std::size_t rows, std::size_t cols)
      : channels_(channels), rows_(rows), cols_(cols), data_(channels * rows * cols, 0.0) {}

  std::size_t channels() const noexcept { return channels_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  double& operator()(std::size_t ch, std::size_t r, std::size_t c) { return data_[(ch * rows_ + r) * cols_ + c]; }
  double operator()(std::size_t ch, std::size_t r, std::size_t c) const { return data_[(ch * rows_ + r) * cols_ + c]; }

  /// All channels at one cell.
  std::vector<double> cell(std::size_t r, std::size_t c) const {
    std::vector<double> v(channels_);
    for (std::size_t ch = 0; ch < channels_; ++ch) v[ch] = (*this)(ch, r, c);
    return v;
  }

  void set_cell(std::size_t r, std::size_t c, std::span<const double> v) {
    if (v.size() != channels_) throw Error(ErrorCode::ChannelCountMismatch, "cell vector length mismatch");
    for (std::size_t ch = 0; ch < channels_; ++ch) (*this)(ch, r, c) = v[ch];
  }

  std::vector<double>& data() noexcept { return data_; }
  const std::vector<double>& data() const noexcept { return data_; }

  friend bool operator==(const ChannelStack&, const ChannelStack&) = default;

 private:
  std::size_t channels_ = 0;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> data_;
};

/// Image-pixel position of the center of grid cell (row, col) at the given stride.
inline Point2 cell_center(std::size_t row, std::size_t col, int stride) {
  return {(static_cast<double>(col) + 0.5) * stride, (static_cast<double>(row) + 0.5) * stride};
}

}  // namespace fce
