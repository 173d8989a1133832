// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <span>
#include <vector>

#include "fce/error.hpp"
#include "fce/fourier.hpp"

namespace fce {

inline constexpr double kDefaultSmoothL1Beta = 1.0;
inline constexpr double kProbabilityEpsilon = 1e-7;
inline constexpr double kDefaultLambda = 1.0;
inline constexpr std::size_t kDefaultOhemRatio = 3;
inline constexpr std::size_t kOhemNegativeFloor = 100;
inline constexpr double kCenterRegionWeight = 1.0;
inline constexpr double kBorderRegionWeight = 0.5;

inline double smooth_l1(double x, double beta = kDefaultSmoothL1Beta) {
  if (!(beta > 0.0)) throw Error(ErrorCode::InvalidArgument, "smooth-L1 beta must be positive");
  const double a = std::abs(x);
  return a < beta ? 0.5 * x * x / beta : a - 0.5 * beta;
}

inline double smooth_l1_derivative(double x, double beta = kDefaultSmoothL1Beta) {
  if (std::abs(x) < beta) return x / beta;
  return x > 0.0 ? 1.0 : -1.0;
}

/// Loss between two reconstructed contour points: smooth-L1 summed over the two axes.
inline double point_loss(Point2 gt, Point2 pred, double beta = kDefaultSmoothL1Beta) {
  return smooth_l1(gt.x - pred.x, beta) + smooth_l1(gt.y - pred.y, beta);
}

/// Pairwise (tree) summation; the result depends only on the input order.
inline double pairwise_sum(std::span<const double> v) {
  if (v.size() <= 8) {
    double acc = 0.0;
    for (double x : v) acc += x;
    return acc;
  }
  const std::size_t mid = v.size() / 2;
  return pairwise_sum(v.first(mid)) + pairwise_sum(v.subspan(mid));
}

namespace detail {

inline void check_alignment(std::span<const FourierSignature> gt, std::span<const FourierSignature> pred,
                            std::span<const std::uint8_t> in_center) {
  if (gt.size() != pred.size() || gt.size() != in_center.size()) {
    throw Error(ErrorCode::AlignmentMismatch, "gt, prediction and center-membership lengths differ");
  }
  for (std::size_t i = 0; i < gt.size(); ++i) {
    if (gt[i].degree() != pred[i].degree()) {
      throw Error(ErrorCode::AlignmentMismatch, "pixel " + std::to_string(i) + ": signature degrees differ");
    }
  }
}

}  // namespace detail

/// Reconstruction-space regression loss over the text-region pixels:
///   (1 / N') * sum_i w_i * sum_{n=1..N'} l(F^-1(n/N', gt_i), F^-1(n/N', pred_i))
/// with w_i = 1 inside the center region and 0.5 otherwise.
inline double regression_loss(std::span<const FourierSignature> gt, std::span<const FourierSignature> pred,
                              std::span<const std::uint8_t> in_center,
                              std::size_t points = kDefaultReconstructionPoints,
                              double beta = kDefaultSmoothL1Beta) {
  detail::check_alignment(gt, pred, in_center);
  if (points == 0) throw Error(ErrorCode::InvalidArgument, "need at least one sample point");
  std::vector<double> terms(gt.size());
  for (std::size_t i = 0; i < gt.size(); ++i) {
    const auto g = detail::evaluate(gt[i], points);
    const auto p = detail::evaluate(pred[i], points);
    double acc = 0.0;
    for (std::size_t n = 1; n <= points; ++n) acc += point_loss(g[n % points], p[n % points], beta);
    terms[i] = (in_center[i] ? kCenterRegionWeight : kBorderRegionWeight) * acc;
  }
  return pairwise_sum(terms) / static_cast<double>(points);
}

/// Analytic gradient of regression_loss with respect to each predicted
/// coefficient; entry k of result i holds (dL/du_k, dL/dv_k) as a complex number.
inline std::vector<FourierSignature> regression_loss_gradient(std::span<const FourierSignature> gt,
                                                              std::span<const FourierSignature> pred,
                                                              std::span<const std::uint8_t> in_center,
                                                              std::size_t points = kDefaultReconstructionPoints,
                                                              double beta = kDefaultSmoothL1Beta) {
  detail::check_alignment(gt, pred, in_center);
  if (points == 0) throw Error(ErrorCode::InvalidArgument, "need at least one sample point");
  const detail::Twiddles tw(points);
  std::vector<FourierSignature> out;
  out.reserve(gt.size());
  for (std::size_t i = 0; i < gt.size(); ++i) {
    const auto g = detail::evaluate(gt[i], points);
    const auto p = detail::evaluate(pred[i], points);
    const double w = (in_center[i] ? kCenterRegionWeight : kBorderRegionWeight) / static_cast<double>(points);
    const auto K = static_cast<std::int64_t>(pred[i].degree());
    FourierSignature grad(pred[i].degree());
    for (std::size_t j = 0; j < points; ++j) {
      const double gx = smooth_l1_derivative(g[j].x - p[j].x, beta);
      const double gy = smooth_l1_derivative(g[j].y - p[j].y, beta);
      for (std::int64_t k = -K; k <= K; ++k) {
        const Complex e = tw(k, static_cast<std::int64_t>(j));
        // x = sum(u cos - v sin), y = sum(u sin + v cos); d(gt - pred) / d(pred) = -1.
        grad[k] += Complex{w * (-gx * e.real() - gy * e.imag()), w * (gx * e.imag() - gy * e.real())};
      }
    }
    out.push_back(std::move(grad));
  }
  return out;
}

/// Binary cross entropy with the probability clamped to [eps, 1 - eps].
inline double cross_entropy(double prob, int label) {
  const double p = std::clamp(prob, kProbabilityEpsilon, 1.0 - kProbabilityEpsilon);
  return label ? -std::log(p) : -std::log(1.0 - p);
}

/// Online hard example mining: every positive plus the hardest negatives, up to
/// `ratio` negatives per positive (ties go to the lower index). With no
/// positives the kOhemNegativeFloor hardest negatives are kept.
inline std::vector<std::uint8_t> ohem_select(std::span<const double> losses, std::span<const std::uint8_t> positive,
                                             std::size_t ratio = kDefaultOhemRatio) {
  if (losses.size() != positive.size()) throw Error(ErrorCode::AlignmentMismatch, "loss and mask lengths differ");
  if (ratio < 1) throw Error(ErrorCode::InvalidArgument, "OHEM ratio must be >= 1");
  std::vector<std::uint8_t> keep(losses.size(), 0);
  std::vector<std::size_t> negatives;
  std::size_t n_pos = 0;
  for (std::size_t i = 0; i < losses.size(); ++i) {
    if (positive[i]) {
      keep[i] = 1;
      ++n_pos;
    } else {
      negatives.push_back(i);
    }
  }
  const std::size_t quota =
      std::min(negatives.size(), n_pos > 0 ? ratio * n_pos : kOhemNegativeFloor);
  std::partial_sort(negatives.begin(), negatives.begin() + static_cast<std::ptrdiff_t>(quota), negatives.end(),
                    [&](std::size_t a, std::size_t b) {
                      if (losses[a] != losses[b]) return losses[a] > losses[b];
                      return a < b;
                    });
  for (std::size_t k = 0; k < quota; ++k) keep[negatives[k]] = 1;
  return keep;
}

struct LossComponents {
  double l_tr = 0.0;
  double l_tcr = 0.0;
  double l_reg = 0.0;
};

struct LossBreakdown {
  double l_tr = 0.0;
  double l_tcr = 0.0;
  double l_reg = 0.0;
  double lambda = kDefaultLambda;
  double total = 0.0;
};

/// total = l_tr + l_tcr + lambda * l_reg
inline LossBreakdown total_loss(const LossComponents& c, double lambda = kDefaultLambda) {
  for (double v : {c.l_tr, c.l_tcr, c.l_reg, lambda}) {
    if (!std::isfinite(v)) throw Error(ErrorCode::NonFinite, "loss component is not finite");
    if (v < 0.0) throw Error(ErrorCode::InvalidArgument, "loss components and lambda must be non-negative");
  }
  return {c.l_tr, c.l_tcr, c.l_reg, lambda, c.l_tr + c.l_tcr + lambda * c.l_reg};
}

}  // namespace fce
