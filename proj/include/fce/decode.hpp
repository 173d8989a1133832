// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "fce/fourier.hpp"
#include "fce/maps.hpp"
#include "fce/parallel.hpp"
#include "fce/targets.hpp"

namespace fce {

inline constexpr double kDefaultScoreThreshold = 0.3;
inline constexpr double kDefaultNmsIou = 0.1;

/// Network output for one pyramid level.
struct PredictionLevel {
  std::string name;
  int stride = 8;
  Grid<double> tr_prob;
  Grid<double> tcr_prob;
  ChannelStack regression;
};

struct PredictionMaps {
  std::vector<PredictionLevel> levels;
};

/// Checks shapes, probability ranges and the 2(2K+1) channel layout; returns K.
inline std::size_t validate_level(const PredictionLevel& lv) {
  if (!lv.tr_prob.same_shape(lv.tcr_prob) || lv.regression.rows() != lv.tr_prob.rows() ||
      lv.regression.cols() != lv.tr_prob.cols()) {
    throw Error(ErrorCode::ShapeMismatch, "level " + lv.name + ": map shapes differ");
  }
  if (lv.stride <= 0) throw Error(ErrorCode::InvalidArgument, "level " + lv.name + ": stride must be positive");
  for (const auto* g : {&lv.tr_prob, &lv.tcr_prob}) {
    for (double v : g->data()) {
      if (!(v >= 0.0 && v <= 1.0)) {
        throw Error(ErrorCode::InvalidArgument, "level " + lv.name + ": probability outside [0, 1]");
      }
    }
  }
  const std::size_t ch = lv.regression.channels();
  if (ch < 2 || ch % 4 != 2) {
    throw Error(ErrorCode::ChannelCountMismatch,
                "level " + lv.name + ": " + std::to_string(ch) + " regression channels is not 2(2K+1)");
  }
  return (ch / 2 - 1) / 2;
}

struct Detection {
  Contour contour;
  double score = 0.0;
  std::string level;
  // Origin cell; orders equal-score detections.
  std::size_t level_index = 0;
  std::size_t row = 0;
  std::size_t col = 0;
};

/// Pixel-wise product of region and center-region probabilities.
inline Grid<double> score_map(const Grid<double>& tr, const Grid<double>& tcr) {
  if (!tr.same_shape(tcr)) throw Error(ErrorCode::ShapeMismatch, "tr and tcr maps differ in shape");
  Grid<double> out(tr.rows(), tr.cols());
  for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] = tr.data()[i] * tcr.data()[i];
  return out;
}

/// Reconstructs a contour for every cell scoring at least `score_thresh`, in row-major order.
inline std::vector<Detection> decode_level(const PredictionLevel& lv, double score_thresh,
                                           std::size_t points = kDefaultReconstructionPoints,
                                           std::size_t level_index = 0) {
  if (!(score_thresh > 0.0 && score_thresh < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "score threshold must lie in (0, 1)");
  }
  validate_level(lv);
  const Grid<double> score = score_map(lv.tr_prob, lv.tcr_prob);
  std::vector<Detection> out;
  for (std::size_t r = 0; r < score.rows(); ++r) {
    for (std::size_t c = 0; c < score.cols(); ++c) {
      const double s = score(r, c);
      if (!(s >= score_thresh)) continue;
      const std::vector<double> flat = lv.regression.cell(r, c);
      const FourierSignature sig = recenter(FourierSignature::from_flat(flat), cell_center(r, c, lv.stride) * -1.0);
      out.push_back({reconstruct(sig, points), s, lv.name, level_index, r, c});
    }
  }
  return out;
}

inline bool detection_precedes(const Detection& a, const Detection& b) {
  if (a.score != b.score) return a.score > b.score;
  if (a.level_index != b.level_index) return a.level_index < b.level_index;
  if (a.row != b.row) return a.row < b.row;
  return a.col < b.col;
}

/// Greedy suppression: visit by descending score and keep a detection only if
/// its IoU with every kept one is below `iou_thresh`.
inline std::vector<Detection> poly_nms(std::vector<Detection> dets, double iou_thresh = kDefaultNmsIou,
                                       int supersample = 4) {
  if (!(iou_thresh > 0.0 && iou_thresh < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "NMS IoU threshold must lie in (0, 1)");
  }
  std::stable_sort(dets.begin(), dets.end(), detection_precedes);
  std::vector<Detection> kept;
  for (auto& d : dets) {
    const bool clear = std::all_of(kept.begin(), kept.end(), [&](const Detection& k) {
      return polygon_iou(k.contour, d.contour, supersample) < iou_thresh;
    });
    if (clear) kept.push_back(std::move(d));
  }
  return kept;
}

struct DecodeParams {
  double score_thresh = kDefaultScoreThreshold;
  double nms_iou = kDefaultNmsIou;
  std::size_t points = kDefaultReconstructionPoints;
  int supersample = 4;
  unsigned threads = 1;
};

/// Decodes every level, then runs one NMS over the merged candidates.
inline std::vector<Detection> decode_all(const PredictionMaps& maps, const DecodeParams& params = {}) {
  std::vector<std::vector<Detection>> per_level(maps.levels.size());
  parallel_for(maps.levels.size(), params.threads, [&](std::size_t i) {
    per_level[i] = decode_level(maps.levels[i], params.score_thresh, params.points, i);
  });
  std::vector<Detection> all;
  for (auto& lv : per_level) std::move(lv.begin(), lv.end(), std::back_inserter(all));
  return poly_nms(std::move(all), params.nms_iou, params.supersample);
}

/// Perfect network output for a set of targets: probabilities equal the masks
/// and regression equals the target channels.
inline PredictionMaps ideal_predictions(const TargetMaps& targets) {
  PredictionMaps out;
  for (const auto& lv : targets.levels) {
    PredictionLevel p;
    p.name = lv.spec.name;
    p.stride = lv.spec.stride;
    p.tr_prob = Grid<double>(lv.tr.rows(), lv.tr.cols());
    p.tcr_prob = Grid<double>(lv.tr.rows(), lv.tr.cols());
    for (std::size_t i = 0; i < lv.tr.size(); ++i) {
      p.tr_prob.data()[i] = lv.tr.data()[i];
      p.tcr_prob.data()[i] = lv.tcr.data()[i];
    }
    p.regression = lv.regression;
    out.levels.push_back(std::move(p));
  }
  return out;
}

}  // namespace fce
