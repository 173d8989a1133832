// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <span>
#include <string>
#include <vector>

#include "fce/annotations.hpp"
#include "fce/decode.hpp"
#include "fce/geometry.hpp"

namespace fce {

inline constexpr double kDefaultEvalIou = 0.5;

struct Match {
  std::size_t detection = 0;  ///< index into the detection list passed to evaluate()
  std::string gt_id;
  double iou = 0.0;
};

struct EvalReport {
  double precision = 1.0;
  double recall = 1.0;
  double hmean = 1.0;
  std::size_t tp = 0;
  std::size_t fp = 0;
  std::size_t fn = 0;
  std::size_t discarded = 0;  ///< detections absorbed by do-not-care regions
  std::vector<Match> matches;
};

/// Fills precision / recall / h-mean from the counts. An empty detection set
/// has precision 1; an empty ground-truth set has recall 1.
inline void finalize(EvalReport& r) {
  r.precision = r.tp + r.fp > 0 ? static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fp) : 1.0;
  r.recall = r.tp + r.fn > 0 ? static_cast<double>(r.tp) / static_cast<double>(r.tp + r.fn) : 1.0;
  r.hmean = r.precision > 0.0 && r.recall > 0.0 ? 2.0 * r.precision * r.recall / (r.precision + r.recall) : 0.0;
}

/// Greedy one-to-one matching in descending score order (ties by input index).
///
/// Each detection takes the unmatched, non-ignored ground truth with the highest
/// IoU >= iou_thresh (ties by ground-truth id). A detection whose best overlap
/// is an ignored region at IoU >= iou_thresh is dropped from scoring.
inline EvalReport evaluate(std::span<const Detection> dets, std::span<const TextInstance> gts,
                           double iou_thresh = kDefaultEvalIou, int supersample = 4) {
  if (!(iou_thresh > 0.0 && iou_thresh < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "evaluation IoU threshold must lie in (0, 1)");
  }
  std::vector<std::size_t> order(dets.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return dets[a].score > dets[b].score; });

  EvalReport r;
  std::vector<bool> matched(gts.size(), false);
  for (std::size_t d : order) {
    double best_ignored = 0.0;
    double best_cared = 0.0;
    std::ptrdiff_t candidate = -1;
    double candidate_iou = 0.0;
    for (std::size_t g = 0; g < gts.size(); ++g) {
      const double iou = polygon_iou(dets[d].contour, gts[g].polygon, supersample);
      if (gts[g].ignore) {
        best_ignored = std::max(best_ignored, iou);
        continue;
      }
      best_cared = std::max(best_cared, iou);
      if (matched[g] || iou < iou_thresh) continue;
      if (candidate < 0 || iou > candidate_iou ||
          (iou == candidate_iou && gts[g].id < gts[static_cast<std::size_t>(candidate)].id)) {
        candidate = static_cast<std::ptrdiff_t>(g);
        candidate_iou = iou;
      }
    }
    if (best_ignored >= iou_thresh && best_ignored > best_cared) {
      ++r.discarded;
    } else if (candidate >= 0) {
      matched[static_cast<std::size_t>(candidate)] = true;
      r.matches.push_back({d, gts[static_cast<std::size_t>(candidate)].id, candidate_iou});
      ++r.tp;
    } else {
      ++r.fp;
    }
  }
  for (std::size_t g = 0; g < gts.size(); ++g) {
    if (!gts[g].ignore && !matched[g]) ++r.fn;
  }
  finalize(r);
  return r;
}

/// Corpus totals from per-image reports (counts are summed; matches are not kept).
inline EvalReport combine(std::span<const EvalReport> reports) {
  EvalReport total;
  for (const auto& r : reports) {
    total.tp += r.tp;
    total.fp += r.fp;
    total.fn += r.fn;
    total.discarded += r.discarded;
  }
  finalize(total);
  return total;
}

}  // namespace fce
