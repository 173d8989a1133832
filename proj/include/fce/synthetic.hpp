// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

#include "fce/annotations.hpp"
#include "fce/geometry.hpp"

// Deterministic synthetic text shapes for benchmarks and tests.
namespace fce::synthetic {

/// Platform-independent uniform draws (std distributions are implementation-defined).
class Random {
 public:
  explicit Random(std::uint64_t seed) : engine_(seed) {}

  double uniform(double lo, double hi) {
    const double u = static_cast<double>(engine_() >> 11) * 0x1.0p-53;
    return lo + (hi - lo) * u;
  }

  int integer(int lo, int hi) { return lo + static_cast<int>(engine_() % static_cast<std::uint64_t>(hi - lo + 1)); }

 private:
  std::mt19937_64 engine_;
};

/// Regular polygon approximating a circle, listed clockwise in the image frame.
inline Contour circle(Point2 center, double radius, std::size_t sides) {
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < sides; ++i) {
    const double a = 2.0 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(sides);
    pts.push_back({center.x + radius * std::cos(a), center.y + radius * std::sin(a)});
  }
  return Contour(std::move(pts));
}

/// Axis-aligned rectangle with `per_side` evenly spaced points along each long
/// side (top left-to-right, then bottom right-to-left), like line-level annotations.
inline Contour rectangle(Point2 top_left, double width, double height, std::size_t per_side = 7) {
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < per_side; ++i) {
    pts.push_back({top_left.x + width * static_cast<double>(i) / static_cast<double>(per_side - 1), top_left.y});
  }
  for (std::size_t i = 0; i < per_side; ++i) {
    pts.push_back({top_left.x + width * static_cast<double>(per_side - 1 - i) / static_cast<double>(per_side - 1),
                   top_left.y + height});
  }
  return Contour(std::move(pts));
}

/// Straight 14-point line box: left-edge midpoint first, six points along the
/// top, right-edge midpoint, six along the bottom. Head and tail are the left
/// midpoint and the bottom-left corner.
inline Contour line_box(Point2 top_left, double width, double height) {
  std::vector<Point2> pts{{top_left.x, top_left.y + 0.5 * height}};
  for (int i = 0; i < 6; ++i) pts.push_back({top_left.x + width * i / 5.0, top_left.y});
  pts.push_back({top_left.x + width, top_left.y + 0.5 * height});
  for (int i = 5; i >= 0; --i) pts.push_back({top_left.x + width * i / 5.0, top_left.y + height});
  return Contour(std::move(pts));
}

struct RibbonShape {
  Point2 origin;            ///< left end of the baseline
  double length = 200.0;    ///< horizontal extent of the baseline
  double height = 40.0;     ///< band thickness measured along the baseline normal
  double amplitude = 20.0;  ///< baseline y = origin.y + amplitude * sin(2 pi x / wavelength + phase)
  double wavelength = 300.0;
  double phase = 0.0;
  std::size_t per_side = 7;
};

/// Text-line band following a sinusoidal baseline: top edge left-to-right,
/// bottom edge right-to-left.
inline Contour ribbon(const RibbonShape& s) {
  std::vector<Point2> top, bottom;
  const double w = 2.0 * std::numbers::pi / s.wavelength;
  for (std::size_t i = 0; i < s.per_side; ++i) {
    const double dx = s.length * static_cast<double>(i) / static_cast<double>(s.per_side - 1);
    const Point2 base{s.origin.x + dx, s.origin.y + s.amplitude * std::sin(w * dx + s.phase)};
    const double slope = s.amplitude * w * std::cos(w * dx + s.phase);
    const double len = std::hypot(slope, 1.0);
    const Point2 normal{-slope / len, 1.0 / len};
    top.push_back(base - normal * (0.5 * s.height));
    bottom.push_back(base + normal * (0.5 * s.height));
  }
  std::vector<Point2> pts(top);
  pts.insert(pts.end(), bottom.rbegin(), bottom.rend());
  return Contour(std::move(pts));
}

/// Annular sector: outer arc from `start` to `start + sweep` radians, inner arc back.
inline Contour arc_band(Point2 center, double inner, double outer, double start, double sweep,
                        std::size_t per_side = 4) {
  std::vector<Point2> pts;
  for (std::size_t i = 0; i < per_side; ++i) {
    const double a = start + sweep * static_cast<double>(i) / static_cast<double>(per_side - 1);
    pts.push_back({center.x + outer * std::cos(a), center.y + outer * std::sin(a)});
  }
  for (std::size_t i = 0; i < per_side; ++i) {
    const double a = start + sweep * static_cast<double>(per_side - 1 - i) / static_cast<double>(per_side - 1);
    pts.push_back({center.x + inner * std::cos(a), center.y + inner * std::sin(a)});
  }
  return Contour(std::move(pts));
}

/// Random curved text line fitted in a width x height image.
inline RibbonShape random_ribbon(Random& rng, double width, double height) {
  RibbonShape s;
  s.length = rng.uniform(0.45, 0.8) * width;
  s.height = rng.uniform(0.12, 0.2) * s.length;
  s.amplitude = rng.uniform(0.06, 0.16) * s.length;
  s.wavelength = s.length * rng.uniform(1.2, 2.2);
  s.phase = rng.uniform(0.0, 2.0 * std::numbers::pi);
  s.origin = {0.5 * (width - s.length), 0.5 * height};
  return s;
}

/// One curved ribbon per image.
inline std::vector<AnnotatedImage> ribbon_corpus(std::size_t count, std::uint64_t seed = 7) {
  Random rng(seed);
  std::vector<AnnotatedImage> out;
  for (std::size_t i = 0; i < count; ++i) {
    AnnotatedImage img{"ribbon_" + std::to_string(i), 640, 640, {}};
    img.instances.push_back({ribbon(random_ribbon(rng, 640.0, 640.0)), false, "0"});
    out.push_back(std::move(img));
  }
  return out;
}

/// Circles of assorted radii, one per image.
inline std::vector<AnnotatedImage> circle_corpus(std::size_t count, std::uint64_t seed = 11) {
  Random rng(seed);
  std::vector<AnnotatedImage> out;
  for (std::size_t i = 0; i < count; ++i) {
    AnnotatedImage img{"circle_" + std::to_string(i), 256, 256, {}};
    const double r = rng.uniform(30.0, 100.0);
    img.instances.push_back({circle({128.0 + rng.uniform(-20, 20), 128.0 + rng.uniform(-20, 20)}, r, 360), false, "0"});
    out.push_back(std::move(img));
  }
  return out;
}

/// Straight 14-point text lines (10 images) followed by strongly bent 8-point
/// arcs (10 images).
inline std::vector<AnnotatedImage> subset_corpus(std::uint64_t seed = 13) {
  Random rng(seed);
  std::vector<AnnotatedImage> out;
  for (int i = 0; i < 10; ++i) {
    AnnotatedImage img{"rect_" + std::to_string(i), 640, 640, {}};
    const double w = rng.uniform(150, 450);
    const double h = rng.uniform(30, 80);
    img.instances.push_back({line_box({rng.uniform(10, 150), rng.uniform(10, 500)}, w, h), false, "0"});
    out.push_back(std::move(img));
  }
  for (int i = 0; i < 10; ++i) {
    AnnotatedImage img{"arc_" + std::to_string(i), 640, 640, {}};
    const double outer = rng.uniform(150, 250);
    const double inner = outer - rng.uniform(40, 70);
    const double sweep = rng.uniform(0.9, 1.3) * std::numbers::pi;
    img.instances.push_back({arc_band({320, 320}, inner, outer, rng.uniform(0, 2 * std::numbers::pi), sweep), false, "0"});
    out.push_back(std::move(img));
  }
  return out;
}

/// Multi-instance detection scenes. Each image holds a large line in the top
/// half (relative scale drawn across the P4/P5 overlap), a smaller line in the
/// bottom half (often inside the P3/P4 overlap), and on odd images an ignored
/// region in a corner.
inline std::vector<AnnotatedImage> scene_corpus(std::size_t count, std::uint64_t seed = 17) {
  Random rng(seed);
  std::vector<AnnotatedImage> out;
  const double size = 640.0;
  for (std::size_t i = 0; i < count; ++i) {
    AnnotatedImage img{"scene_" + std::to_string(i), 640, 640, {}};

    RibbonShape big;
    big.length = size * rng.uniform(0.42, 0.72);
    big.height = rng.uniform(50, 70);
    big.amplitude = rng.uniform(10, 30);
    big.wavelength = big.length * rng.uniform(1.2, 2.0);
    big.phase = rng.uniform(0, 2 * std::numbers::pi);
    big.origin = {rng.uniform(20, size - 20 - big.length), 150};
    img.instances.push_back({ribbon(big), false, "0"});

    RibbonShape small;
    small.length = size * rng.uniform(0.15, 0.4);
    small.height = rng.uniform(36, 50);
    small.amplitude = rng.uniform(5, 20);
    small.wavelength = small.length * rng.uniform(1.2, 2.0);
    small.phase = rng.uniform(0, 2 * std::numbers::pi);
    small.origin = {rng.uniform(20, size - 20 - small.length), 420};
    img.instances.push_back({ribbon(small), false, "1"});

    if (i % 2 == 1) {
      img.instances.push_back({rectangle({10, 560}, 60, 40, 2), true, "2"});
    }
    out.push_back(std::move(img));
  }
  return out;
}

}  // namespace fce::synthetic
