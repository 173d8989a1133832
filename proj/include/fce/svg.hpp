// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <span>
#include <string>

#include "fce/format.hpp"
#include "fce/geometry.hpp"

namespace fce {

inline constexpr const char* kGroundTruthColor = "green";
inline constexpr const char* kFittedColor = "red";

/// Minimal SVG canvas in absolute image-pixel coordinates; outlines only.
class SvgCanvas {
 public:
  SvgCanvas(int width, int height) : width_(width), height_(height) {}

  void polygon(std::span<const Point2> pts, const char* color, double stroke = 1.0) {
    body_ += "  <polygon fill=\"none\" stroke=\"";
    body_ += color;
    body_ += "\" stroke-width=\"" + format_number(stroke) + "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      if (i > 0) body_ += ' ';
      body_ += format_number(pts[i].x) + ',' + format_number(pts[i].y);
    }
    body_ += "\"/>\n";
  }

  std::string str() const {
    const std::string w = std::to_string(width_);
    const std::string h = std::to_string(height_);
    return "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + w + "\" height=\"" + h + "\" viewBox=\"0 0 " + w +
           ' ' + h + "\">\n" + body_ + "</svg>\n";
  }

 private:
  int width_;
  int height_;
  std::string body_;
};

}  // namespace fce
