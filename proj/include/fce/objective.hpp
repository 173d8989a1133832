// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <vector>

#include "fce/decode.hpp"
#include "fce/losses.hpp"
#include "fce/targets.hpp"

namespace fce {

struct ObjectiveParams {
  std::size_t points = kDefaultReconstructionPoints;
  std::size_t ohem_ratio = kDefaultOhemRatio;
  double lambda = kDefaultLambda;
};

/// Loss components for one level. Ignored cells take no part in any term.
///  - l_tr: mean cross entropy of the text-region map over the OHEM selection
///  - l_tcr: mean cross entropy of the center-region map over text-region cells
///  - l_reg: regression_loss over text-region cells
inline LossComponents level_losses(const TargetLevel& gt, const PredictionLevel& pred, const ObjectiveParams& p) {
  validate_level(pred);
  if (!gt.tr.same_shape(pred.tr_prob)) {
    throw Error(ErrorCode::ShapeMismatch, "level " + gt.spec.name + ": target and prediction shapes differ");
  }
  if (gt.regression.channels() != pred.regression.channels()) {
    throw Error(ErrorCode::ChannelCountMismatch, "level " + gt.spec.name + ": regression channel counts differ");
  }

  std::vector<double> tr_loss;
  std::vector<std::uint8_t> tr_pos;
  std::vector<double> tcr_loss;
  std::vector<FourierSignature> gt_sig, pred_sig;
  std::vector<std::uint8_t> in_center;
  for (std::size_t r = 0; r < gt.tr.rows(); ++r) {
    for (std::size_t c = 0; c < gt.tr.cols(); ++c) {
      if (gt.ignore(r, c)) continue;
      const int tr = gt.tr(r, c);
      tr_loss.push_back(cross_entropy(pred.tr_prob(r, c), tr));
      tr_pos.push_back(static_cast<std::uint8_t>(tr));
      if (!tr) continue;
      tcr_loss.push_back(cross_entropy(pred.tcr_prob(r, c), gt.tcr(r, c)));
      gt_sig.push_back(FourierSignature::from_flat(gt.regression.cell(r, c)));
      pred_sig.push_back(FourierSignature::from_flat(pred.regression.cell(r, c)));
      in_center.push_back(gt.tcr(r, c));
    }
  }

  LossComponents out;
  const auto selected = ohem_select(tr_loss, tr_pos, p.ohem_ratio);
  std::vector<double> picked;
  for (std::size_t i = 0; i < selected.size(); ++i) {
    if (selected[i]) picked.push_back(tr_loss[i]);
  }
  if (!picked.empty()) out.l_tr = pairwise_sum(picked) / static_cast<double>(picked.size());
  if (!tcr_loss.empty()) out.l_tcr = pairwise_sum(tcr_loss) / static_cast<double>(tcr_loss.size());
  out.l_reg = regression_loss(gt_sig, pred_sig, in_center, p.points);
  return out;
}

/// Sums level components (levels matched by position and name) and assembles the total.
inline LossBreakdown map_losses(const TargetMaps& gt, const PredictionMaps& pred, const ObjectiveParams& p = {}) {
  if (gt.levels.size() != pred.levels.size()) {
    throw Error(ErrorCode::ShapeMismatch, "target and prediction level counts differ");
  }
  LossComponents sum;
  for (std::size_t i = 0; i < gt.levels.size(); ++i) {
    if (gt.levels[i].spec.name != pred.levels[i].name) {
      throw Error(ErrorCode::ShapeMismatch, "level names differ: " + gt.levels[i].spec.name + " vs " +
                                                pred.levels[i].name);
    }
    const LossComponents c = level_losses(gt.levels[i], pred.levels[i], p);
    sum.l_tr += c.l_tr;
    sum.l_tcr += c.l_tcr;
    sum.l_reg += c.l_reg;
  }
  return total_loss(sum, p.lambda);
}

}  // namespace fce
