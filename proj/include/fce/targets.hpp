// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "fce/annotations.hpp"
#include "fce/fourier.hpp"
#include "fce/geometry.hpp"
#include "fce/maps.hpp"

namespace fce {

inline constexpr double kDefaultShrinkFactor = 0.3;

/// One pyramid level: cells of `stride` pixels, responsible for instances whose
/// relative scale lies in [lo, hi].
struct LevelSpec {
  std::string name;
  int stride = 8;
  double lo = 0.0;
  double hi = 1.0;

  friend bool operator==(const LevelSpec&, const LevelSpec&) = default;
};

inline std::vector<LevelSpec> default_levels() {
  return {{"P3", 8, 0.0, 0.4}, {"P4", 16, 0.3, 0.7}, {"P5", 32, 0.6, 1.0}};
}

inline void validate_levels(std::span<const LevelSpec> specs) {
  if (specs.empty()) throw Error(ErrorCode::Config, "at least one level is required");
  for (std::size_t i = 0; i < specs.size(); ++i) {
    const auto& s = specs[i];
    if (s.stride <= 0) throw Error(ErrorCode::Config, "level " + s.name + ": stride must be positive");
    if (!(0.0 <= s.lo && s.lo < s.hi && s.hi <= 1.0)) {
      throw Error(ErrorCode::Config, "level " + s.name + ": need 0 <= lo < hi <= 1");
    }
    if (i > 0 && s.stride <= specs[i - 1].stride) {
      throw Error(ErrorCode::Config, "level strides must ascend");
    }
  }
}

/// Longest side of the instance's bounding box over the longest image side.
inline double instance_scale(const TextInstance& inst, int width, int height) {
  const Box b = bounding_box(inst.polygon);
  return std::max(b.width(), b.height()) / static_cast<double>(std::max(width, height));
}

inline std::vector<std::string> assign_levels(const TextInstance& inst, int width, int height,
                                              std::span<const LevelSpec> specs) {
  const double scale = instance_scale(inst, width, height);
  std::vector<std::string> out;
  for (const auto& s : specs) {
    if (s.lo <= scale && scale <= s.hi) out.push_back(s.name);
  }
  return out;
}

struct TargetParams {
  std::size_t degree = kDefaultDegree;
  std::size_t samples = kDefaultSamples;
  double shrink = kDefaultShrinkFactor;
};

struct TargetLevel {
  LevelSpec spec;
  Grid<std::uint8_t> tr;      ///< text region
  Grid<std::uint8_t> tcr;     ///< text center region, subset of tr
  Grid<std::uint8_t> ignore;  ///< cells covered by do-not-care instances
  Grid<double> weight;        ///< 1 on tcr, 0.5 on tr \ tcr, 0 elsewhere
  ChannelStack regression;    ///< 2(2K+1) channels, recentered on each cell, image pixels
  std::vector<std::string> owner;  ///< instance id owning each tr cell (row-major), empty otherwise
};

struct SkippedInstance {
  std::string id;
  std::string reason;
};

struct TargetMaps {
  std::size_t degree = kDefaultDegree;
  std::vector<TargetLevel> levels;
  std::vector<SkippedInstance> skipped;
};

/// Builds per-level supervision for one image.
///
/// A cell belongs to the smallest-area instance whose polygon contains its
/// center. Cells inside ignored instances are cleared and flagged in `ignore`.
/// Instances whose geometry cannot be embedded or shrunk are skipped and listed.
inline TargetMaps generate_targets(const AnnotatedImage& img, std::span<const LevelSpec> specs,
                                   const TargetParams& params = {}) {
  validate_levels(specs);
  TargetMaps out;
  out.degree = params.degree;
  const std::size_t channels = FourierSignature::flat_size(params.degree);

  struct Prepared {
    std::size_t index;
    double area;
    FourierSignature signature;
    Contour center_region;
  };
  std::vector<std::optional<Prepared>> prepared(img.instances.size());
  for (std::size_t k = 0; k < img.instances.size(); ++k) {
    const auto& inst = img.instances[k];
    if (inst.ignore) continue;
    try {
      prepared[k] = Prepared{k, std::abs(signed_area(inst.polygon)), embed(inst.polygon, params.degree, params.samples),
                             shrink_polygon(inst.polygon, params.shrink)};
    } catch (const Error& e) {
      out.skipped.push_back({inst.id, e.what()});
    }
  }

  for (const auto& spec : specs) {
    TargetLevel lv;
    lv.spec = spec;
    const auto rows = static_cast<std::size_t>(std::ceil(static_cast<double>(img.height) / spec.stride));
    const auto cols = static_cast<std::size_t>(std::ceil(static_cast<double>(img.width) / spec.stride));
    lv.tr = Grid<std::uint8_t>(rows, cols);
    lv.tcr = Grid<std::uint8_t>(rows, cols);
    lv.ignore = Grid<std::uint8_t>(rows, cols);
    lv.weight = Grid<double>(rows, cols);
    lv.regression = ChannelStack(channels, rows, cols);
    lv.owner.assign(rows * cols, {});

    // Cell range whose centers may fall inside the box.
    auto cell_range = [&](const Box& b, std::size_t& r0, std::size_t& r1, std::size_t& c0, std::size_t& c1) {
      auto lo = [&](double v, std::size_t n) {
        const double x = std::floor(v / spec.stride - 0.5);
        return static_cast<std::size_t>(std::clamp(x, 0.0, static_cast<double>(n)));
      };
      auto hi = [&](double v, std::size_t n) {
        const double x = std::ceil(v / spec.stride - 0.5) + 1.0;
        return static_cast<std::size_t>(std::clamp(x, 0.0, static_cast<double>(n)));
      };
      r0 = lo(b.min.y, rows);
      r1 = hi(b.max.y, rows);
      c0 = lo(b.min.x, cols);
      c1 = hi(b.max.x, cols);
    };

    std::vector<std::int64_t> owner(rows * cols, -1);
    for (std::size_t k = 0; k < img.instances.size(); ++k) {
      if (!prepared[k]) continue;
      const auto levels = assign_levels(img.instances[k], img.width, img.height, std::span(&spec, 1));
      if (levels.empty()) continue;
      const Contour& poly = img.instances[k].polygon;
      std::size_t r0, r1, c0, c1;
      cell_range(bounding_box(poly), r0, r1, c0, c1);
      for (std::size_t r = r0; r < r1; ++r) {
        for (std::size_t c = c0; c < c1; ++c) {
          if (!point_in_polygon(cell_center(r, c, spec.stride), poly)) continue;
          std::int64_t& o = owner[r * cols + c];
          if (o < 0 || prepared[k]->area < prepared[static_cast<std::size_t>(o)]->area) {
            o = static_cast<std::int64_t>(k);
          }
        }
      }
    }

    for (const auto& inst : img.instances) {
      if (!inst.ignore) continue;
      std::size_t r0, r1, c0, c1;
      cell_range(bounding_box(inst.polygon), r0, r1, c0, c1);
      for (std::size_t r = r0; r < r1; ++r) {
        for (std::size_t c = c0; c < c1; ++c) {
          if (point_in_polygon(cell_center(r, c, spec.stride), inst.polygon)) {
            lv.ignore(r, c) = 1;
            owner[r * cols + c] = -1;
          }
        }
      }
    }

    for (std::size_t r = 0; r < rows; ++r) {
      for (std::size_t c = 0; c < cols; ++c) {
        const std::int64_t o = owner[r * cols + c];
        if (o < 0) continue;
        const Prepared& p = *prepared[static_cast<std::size_t>(o)];
        const Point2 center = cell_center(r, c, spec.stride);
        lv.tr(r, c) = 1;
        lv.tcr(r, c) = point_in_polygon(center, p.center_region) ? 1 : 0;
        lv.weight(r, c) = lv.tcr(r, c) ? 1.0 : 0.5;
        lv.regression.set_cell(r, c, recenter(p.signature, center).flat());
        lv.owner[r * cols + c] = img.instances[p.index].id;
      }
    }
    out.levels.push_back(std::move(lv));
  }
  return out;
}

}  // namespace fce
