// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <cstdlib>
#include <istream>
#include <string>
#include <vector>

#include "fce/annotations.hpp"
#include "fce/decode.hpp"
#include "fce/error.hpp"
#include "fce/eval.hpp"
#include "fce/format.hpp"
#include "fce/fourier.hpp"
#include "fce/losses.hpp"
#include "fce/targets.hpp"

namespace fce {

/// Every tunable constant of the pipeline. Defaults are the published settings
/// where those exist (K, N, N', lambda, shrink factor, level ranges, subset
/// threshold) and engineering choices otherwise.
struct Config {
  std::size_t degree = kDefaultDegree;
  std::size_t samples = kDefaultSamples;
  std::size_t points = kDefaultReconstructionPoints;
  double lambda = kDefaultLambda;
  double shrink = kDefaultShrinkFactor;
  std::vector<LevelSpec> levels = default_levels();
  double score_thresh = kDefaultScoreThreshold;
  double nms_iou = kDefaultNmsIou;
  double eval_iou = kDefaultEvalIou;
  double subset_threshold = kDefaultSubsetThreshold;
  int supersample = 4;

  TargetParams target_params() const { return {degree, samples, shrink}; }
  DecodeParams decode_params(unsigned threads = 1) const {
    return {score_thresh, nms_iou, points, supersample, threads};
  }
};

namespace detail {

inline double config_real(const std::string& key, const std::string& value) {
  double v;
  if (!parse_real(trim(value), v)) throw Error(ErrorCode::Config, key + ": '" + value + "' is not a number");
  return v;
}

inline long config_int(const std::string& key, const std::string& value) {
  const std::string s = trim(value);
  char* end = nullptr;
  const long v = std::strtol(s.c_str(), &end, 10);
  if (s.empty() || end != s.c_str() + s.size()) {
    throw Error(ErrorCode::Config, key + ": '" + value + "' is not an integer");
  }
  return v;
}

inline std::vector<LevelSpec> parse_levels(const std::string& value) {
  // name:stride:lo:hi[,name:stride:lo:hi...]
  std::vector<LevelSpec> out;
  std::size_t pos = 0;
  while (pos <= value.size()) {
    const std::size_t comma = value.find(',', pos);
    const std::string item = trim(value.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos));
    std::vector<std::string> f;
    std::size_t p = 0;
    while (true) {
      const std::size_t colon = item.find(':', p);
      f.push_back(item.substr(p, colon == std::string::npos ? std::string::npos : colon - p));
      if (colon == std::string::npos) break;
      p = colon + 1;
    }
    if (f.size() != 4 || trim(f[0]).empty()) {
      throw Error(ErrorCode::Config, "levels: expected name:stride:lo:hi, got '" + item + "'");
    }
    out.push_back({trim(f[0]), static_cast<int>(config_int("levels", f[1])), config_real("levels", f[2]),
                   config_real("levels", f[3])});
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

inline std::size_t config_count(const std::string& key, const std::string& value) {
  const long v = config_int(key, value);
  if (v < 0) throw Error(ErrorCode::Config, key + " must be non-negative");
  return static_cast<std::size_t>(v);
}

}  // namespace detail

inline void set_config_value(Config& c, const std::string& raw_key, const std::string& value) {
  const std::string key = detail::trim(raw_key);
  if (key == "K") c.degree = detail::config_count(key, value);
  else if (key == "N") c.samples = detail::config_count(key, value);
  else if (key == "N_prime") c.points = detail::config_count(key, value);
  else if (key == "lambda") c.lambda = detail::config_real(key, value);
  else if (key == "shrink_factor") c.shrink = detail::config_real(key, value);
  else if (key == "levels") c.levels = detail::parse_levels(value);
  else if (key == "score_thresh") c.score_thresh = detail::config_real(key, value);
  else if (key == "nms_iou") c.nms_iou = detail::config_real(key, value);
  else if (key == "eval_iou") c.eval_iou = detail::config_real(key, value);
  else if (key == "subset_threshold") c.subset_threshold = detail::config_real(key, value);
  else if (key == "iou_supersample") c.supersample = static_cast<int>(detail::config_int(key, value));
  else throw Error(ErrorCode::Config, "unknown key '" + key + "'");
}

/// Applies "key=value".
inline void apply_override(Config& c, const std::string& assignment) {
  const std::size_t eq = assignment.find('=');
  if (eq == std::string::npos) throw Error(ErrorCode::Config, "expected key=value, got '" + assignment + "'");
  set_config_value(c, assignment.substr(0, eq), assignment.substr(eq + 1));
}

inline void validate_config(const Config& c) {
  auto open_unit = [](double v) { return v > 0.0 && v < 1.0; };
  if (c.samples < 3) throw Error(ErrorCode::Config, "N must be >= 3");
  if (2 * c.degree + 1 > c.samples) throw Error(ErrorCode::Config, "2K+1 must not exceed N");
  if (c.points < 3) throw Error(ErrorCode::Config, "N_prime must be >= 3");
  if (!(std::isfinite(c.lambda) && c.lambda >= 0.0)) throw Error(ErrorCode::Config, "lambda must be >= 0");
  if (!open_unit(c.shrink)) throw Error(ErrorCode::Config, "shrink_factor must lie in (0, 1)");
  if (!open_unit(c.score_thresh)) throw Error(ErrorCode::Config, "score_thresh must lie in (0, 1)");
  if (!open_unit(c.nms_iou)) throw Error(ErrorCode::Config, "nms_iou must lie in (0, 1)");
  if (!open_unit(c.eval_iou)) throw Error(ErrorCode::Config, "eval_iou must lie in (0, 1)");
  if (!(std::isfinite(c.subset_threshold) && c.subset_threshold >= 0.0)) {
    throw Error(ErrorCode::Config, "subset_threshold must be >= 0");
  }
  if (c.supersample < 1) throw Error(ErrorCode::Config, "iou_supersample must be >= 1");
  validate_levels(c.levels);
}

/// Flat "key = value" file; '#' starts a comment.
inline Config parse_config(std::istream& in, Config base = {}) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const std::size_t hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    if (detail::trim(line).empty()) continue;
    const std::size_t eq = line.find('=');
    if (eq == std::string::npos) throw Error(ErrorCode::Config, "expected key = value", lineno);
    try {
      set_config_value(base, line.substr(0, eq), line.substr(eq + 1));
    } catch (const Error& e) {
      throw Error(ErrorCode::Config, e.what(), lineno);
    }
  }
  validate_config(base);
  return base;
}

inline std::string format_levels(const std::vector<LevelSpec>& levels) {
  std::string s;
  for (std::size_t i = 0; i < levels.size(); ++i) {
    if (i > 0) s += ',';
    s += levels[i].name + ':' + std::to_string(levels[i].stride) + ':' + format_number(levels[i].lo) + ':' +
         format_number(levels[i].hi);
  }
  return s;
}

/// One-line "key=value ..." summary, echoed into output headers.
inline std::string describe(const Config& c) {
  return "K=" + std::to_string(c.degree) + " N=" + std::to_string(c.samples) + " N_prime=" + std::to_string(c.points) +
         " lambda=" + format_number(c.lambda) + " shrink_factor=" + format_number(c.shrink) +
         " levels=" + format_levels(c.levels) + " score_thresh=" + format_number(c.score_thresh) +
         " nms_iou=" + format_number(c.nms_iou) + " eval_iou=" + format_number(c.eval_iou) +
         " subset_threshold=" + format_number(c.subset_threshold) +
         " iou_supersample=" + std::to_string(c.supersample);
}

}  // namespace fce
