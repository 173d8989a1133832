// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0
//
// Brute-force reference implementations. They restate each rule directly and
// share no code with the library beyond plain value types (and polygon_iou for
// the NMS oracle, whose subject is the suppression rule, not the overlap).

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <numeric>
#include <optional>
#include <tuple>
#include <vector>

#include "fce/decode.hpp"
#include "fce/fourier.hpp"
#include "fce/geometry.hpp"

namespace fce::oracle {

inline double shoelace(const std::vector<Point2>& v) {
  double s = 0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    const auto& a = v[i];
    const auto& b = v[(i + 1) % v.size()];
    s += a.x * b.y - b.x * a.y;
  }
  return 0.5 * s;
}

/// Largest relative area change from deleting one vertex other than the first and last.
inline double max_removal_delta(const Contour& c) {
  const std::vector<Point2> v(c.begin(), c.end());
  const double before = std::abs(shoelace(v));
  double best = 0;
  for (std::size_t i = 1; i + 1 < v.size(); ++i) {
    auto w = v;
    w.erase(w.begin() + static_cast<std::ptrdiff_t>(i));
    best = std::max(best, std::abs(before - std::abs(shoelace(w))) / before);
  }
  return best;
}

/// Materializes every reconstructed point with std::polar and sums the weighted
/// smooth-L1 terms one at a time.
inline double regression_loss(const std::vector<FourierSignature>& gt, const std::vector<FourierSignature>& pred,
                              const std::vector<std::uint8_t>& tcr, std::size_t points) {
  auto at = [](const FourierSignature& s, double t) {
    std::complex<double> f = 0;
    const auto K = static_cast<int>(s.degree());
    for (int k = -K; k <= K; ++k) f += s[k] * std::polar(1.0, 2 * std::numbers::pi * k * t);
    return f;
  };
  auto l1 = [](double x) { return std::abs(x) < 1 ? 0.5 * x * x : std::abs(x) - 0.5; };
  double total = 0;
  for (std::size_t i = 0; i < gt.size(); ++i) {
    const double w = tcr[i] ? 1.0 : 0.5;
    for (std::size_t n = 1; n <= points; ++n) {
      const double t = static_cast<double>(n) / static_cast<double>(points);
      const auto d = at(gt[i], t) - at(pred[i], t);
      total += w * (l1(d.real()) + l1(d.imag()));
    }
  }
  return total / static_cast<double>(points);
}

/// Rank-based restatement of hard example mining: a negative is kept when fewer
/// than `quota` negatives are harder (or equally hard with a lower index).
inline std::vector<std::uint8_t> ohem(const std::vector<double>& loss, const std::vector<std::uint8_t>& pos,
                                      std::size_t ratio, std::size_t floor = 100) {
  const std::size_t n = loss.size();
  std::size_t n_pos = 0, n_neg = 0;
  for (auto p : pos) (p ? n_pos : n_neg)++;
  const std::size_t quota = std::min(n_neg, n_pos ? ratio * n_pos : floor);
  std::vector<std::uint8_t> keep(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (pos[i]) {
      keep[i] = 1;
      continue;
    }
    std::size_t ahead = 0;
    for (std::size_t j = 0; j < n; ++j) {
      if (!pos[j] && (loss[j] > loss[i] || (loss[j] == loss[i] && j < i))) ++ahead;
    }
    keep[i] = ahead < quota;
  }
  return keep;
}

/// Greedy NMS characterized without a running kept list: the kept set is the
/// subset S such that, in precedence order, each detection belongs to S exactly
/// when it overlaps no earlier member of S at or above the threshold. Every
/// subset is tested; returns the indices of the unique solution in precedence
/// order, or nothing if the characterization is not met by exactly one subset.
inline std::optional<std::vector<std::size_t>> nms(const std::vector<Detection>& dets, double thresh) {
  const std::size_t n = dets.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const auto ka = std::make_tuple(-dets[a].score, dets[a].level_index, dets[a].row, dets[a].col, a);
    const auto kb = std::make_tuple(-dets[b].score, dets[b].level_index, dets[b].row, dets[b].col, b);
    return ka < kb;
  });
  std::vector<std::vector<double>> iou(n, std::vector<double>(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) iou[i][j] = polygon_iou(dets[i].contour, dets[j].contour);
  }
  std::vector<std::vector<std::size_t>> solutions;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool ok = true;
    for (std::size_t pos = 0; pos < n && ok; ++pos) {
      const std::size_t d = order[pos];
      bool clear = true;
      for (std::size_t q = 0; q < pos; ++q) {
        if (((mask >> order[q]) & 1u) && iou[order[q]][d] >= thresh) clear = false;
      }
      ok = clear == static_cast<bool>((mask >> d) & 1u);
    }
    if (!ok) continue;
    std::vector<std::size_t> s;
    for (std::size_t pos = 0; pos < n; ++pos) {
      if ((mask >> order[pos]) & 1u) s.push_back(order[pos]);
    }
    solutions.push_back(std::move(s));
  }
  if (solutions.size() != 1) return std::nullopt;
  return solutions.front();
}

}  // namespace fce::oracle
