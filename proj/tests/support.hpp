// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <numbers>
#include <vector>

#include "fce/geometry.hpp"
#include "fce/synthetic.hpp"

namespace fce::test {

/// Simple star-shaped polygon with `n` vertices around `center`, clockwise in the image frame.
inline Contour random_polygon(synthetic::Random& rng, std::size_t n, Point2 center = {150, 150}, double rmin = 20,
                              double rmax = 90) {
  std::vector<double> angles(n);
  for (auto& a : angles) a = rng.uniform(0.0, 2.0 * std::numbers::pi);
  std::sort(angles.begin(), angles.end());
  std::vector<Point2> pts;
  for (double a : angles) {
    const double r = rng.uniform(rmin, rmax);
    pts.push_back({center.x + r * std::cos(a), center.y + r * std::sin(a)});
  }
  return Contour(std::move(pts));
}

/// Smooth closed curve sampled densely (low-frequency radial perturbation of a circle).
inline Contour random_blob(synthetic::Random& rng, std::size_t n, Point2 center = {200, 200}) {
  const double r0 = rng.uniform(50, 80);
  double amp[4], ph[4];
  for (int h = 0; h < 4; ++h) {
    amp[h] = rng.uniform(0, 8);
    ph[h] = rng.uniform(0, 2 * std::numbers::pi);
  }
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < n; ++i) {
    const double a = 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(n);
    double r = r0;
    for (int h = 0; h < 4; ++h) r += amp[h] * std::cos((h + 2) * a + ph[h]);
    pts.push_back({center.x + r * std::cos(a), center.y + r * std::sin(a)});
  }
  return Contour(std::move(pts));
}

inline Contour transformed(const Contour& c, double scale, double angle, Point2 shift, Point2 pivot = {0, 0}) {
  std::vector<Point2> pts;
  const double cs = std::cos(angle), sn = std::sin(angle);
  for (const auto& p : c) {
    const Point2 d = p - pivot;
    pts.push_back({pivot.x + scale * (cs * d.x - sn * d.y) + shift.x, pivot.y + scale * (sn * d.x + cs * d.y) + shift.y});
  }
  return Contour(std::move(pts));
}

inline Contour translated(const Contour& c, Point2 shift) { return transformed(c, 1.0, 0.0, shift); }

inline Contour rotated_list(const Contour& c, std::size_t k) {
  std::vector<Point2> v(c.begin(), c.end());
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(k % v.size()), v.end());
  return Contour(std::move(v));
}

inline Contour reversed(const Contour& c) {
  std::vector<Point2> v(c.begin(), c.end());
  std::reverse(v.begin(), v.end());
  return Contour(std::move(v));
}

inline Contour square(double x0, double y0, double side) {
  return Contour({{x0, y0}, {x0 + side, y0}, {x0 + side, y0 + side}, {x0, y0 + side}});
}

}  // namespace fce::test
