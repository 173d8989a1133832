// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <istream>
#include <string>
#include <vector>

#include "fce/decode.hpp"
#include "fce/targets.hpp"
#include "fce/tensor.hpp"
#include "json.hpp"

namespace fce {

// Channel layout of per-level tensor files (shape C x H x W):
//   targets:     tr, tcr, weight, ignore, regression...
//   predictions: tr_prob, tcr_prob, regression...
inline constexpr std::size_t kTargetHeaderChannels = 4;
inline constexpr std::size_t kPredictionHeaderChannels = 2;

enum class MapKind { Targets, Predictions };

inline const char* to_string(MapKind k) { return k == MapKind::Targets ? "targets" : "predictions"; }

namespace detail {

inline Tensor stack_tensor(std::size_t header, std::size_t rows, std::size_t cols, const ChannelStack& reg) {
  Tensor t;
  t.dims = {static_cast<std::uint32_t>(header + reg.channels()), static_cast<std::uint32_t>(rows),
            static_cast<std::uint32_t>(cols)};
  t.values.assign(t.element_count(), 0.0f);
  const std::size_t plane = rows * cols;
  for (std::size_t i = 0; i < reg.data().size(); ++i) t.values[header * plane + i] = static_cast<float>(reg.data()[i]);
  return t;
}

inline void check_stack(const Tensor& t, std::size_t header) {
  if (t.dims.size() != 3) throw Error(ErrorCode::ShapeMismatch, "level tensor must have rank 3");
  const std::size_t ch = t.dims[0];
  if (ch < header + 2 || (ch - header) % 4 != 2) {
    throw Error(ErrorCode::ChannelCountMismatch, "level tensor has " + std::to_string(ch) + " channels");
  }
}

inline ChannelStack regression_from(const Tensor& t, std::size_t header) {
  const std::size_t rows = t.dims[1], cols = t.dims[2];
  ChannelStack reg(t.dims[0] - header, rows, cols);
  const std::size_t plane = rows * cols;
  for (std::size_t i = 0; i < reg.data().size(); ++i) reg.data()[i] = t.values[header * plane + i];
  return reg;
}

}  // namespace detail

inline Tensor to_tensor(const TargetLevel& lv) {
  const std::size_t rows = lv.tr.rows(), cols = lv.tr.cols(), plane = rows * cols;
  Tensor t = detail::stack_tensor(kTargetHeaderChannels, rows, cols, lv.regression);
  for (std::size_t i = 0; i < plane; ++i) {
    t.values[i] = lv.tr.data()[i];
    t.values[plane + i] = lv.tcr.data()[i];
    t.values[2 * plane + i] = static_cast<float>(lv.weight.data()[i]);
    t.values[3 * plane + i] = lv.ignore.data()[i];
  }
  return t;
}

inline Tensor to_tensor(const PredictionLevel& lv) {
  const std::size_t rows = lv.tr_prob.rows(), cols = lv.tr_prob.cols(), plane = rows * cols;
  Tensor t = detail::stack_tensor(kPredictionHeaderChannels, rows, cols, lv.regression);
  for (std::size_t i = 0; i < plane; ++i) {
    t.values[i] = static_cast<float>(lv.tr_prob.data()[i]);
    t.values[plane + i] = static_cast<float>(lv.tcr_prob.data()[i]);
  }
  return t;
}

inline TargetLevel target_level_from_tensor(const Tensor& t, const LevelSpec& spec) {
  detail::check_stack(t, kTargetHeaderChannels);
  const std::size_t rows = t.dims[1], cols = t.dims[2], plane = rows * cols;
  TargetLevel lv;
  lv.spec = spec;
  lv.tr = Grid<std::uint8_t>(rows, cols);
  lv.tcr = Grid<std::uint8_t>(rows, cols);
  lv.ignore = Grid<std::uint8_t>(rows, cols);
  lv.weight = Grid<double>(rows, cols);
  lv.owner.assign(plane, {});
  for (std::size_t i = 0; i < plane; ++i) {
    lv.tr.data()[i] = t.values[i] != 0.0f;
    lv.tcr.data()[i] = t.values[plane + i] != 0.0f;
    lv.weight.data()[i] = t.values[2 * plane + i];
    lv.ignore.data()[i] = t.values[3 * plane + i] != 0.0f;
  }
  lv.regression = detail::regression_from(t, kTargetHeaderChannels);
  return lv;
}

/// Reads a prediction tensor; a targets tensor is promoted to ideal predictions.
inline PredictionLevel prediction_level_from_tensor(const Tensor& t, const std::string& name, int stride,
                                                    MapKind kind) {
  const std::size_t header = kind == MapKind::Targets ? kTargetHeaderChannels : kPredictionHeaderChannels;
  detail::check_stack(t, header);
  const std::size_t rows = t.dims[1], cols = t.dims[2], plane = rows * cols;
  PredictionLevel lv;
  lv.name = name;
  lv.stride = stride;
  lv.tr_prob = Grid<double>(rows, cols);
  lv.tcr_prob = Grid<double>(rows, cols);
  for (std::size_t i = 0; i < plane; ++i) {
    lv.tr_prob.data()[i] = t.values[i];
    lv.tcr_prob.data()[i] = t.values[plane + i];
  }
  lv.regression = detail::regression_from(t, header);
  validate_level(lv);
  return lv;
}

/// One line of a map directory's index.jsonl.
struct MapIndexEntry {
  std::string image_id;
  std::string level;
  int stride = 0;
  std::string file;  ///< relative to the index directory
  MapKind kind = MapKind::Targets;
  std::size_t degree = 0;
};

inline std::string to_jsonl(const MapIndexEntry& e) {
  return "{\"image_id\":" + json_string(e.image_id) + ",\"level\":" + json_string(e.level) +
         ",\"stride\":" + std::to_string(e.stride) + ",\"file\":" + json_string(e.file) +
         ",\"kind\":" + json_string(to_string(e.kind)) + ",\"K\":" + std::to_string(e.degree) + "}";
}

inline std::vector<MapIndexEntry> parse_map_index(std::istream& in) {
  std::vector<MapIndexEntry> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    try {
      const auto j = nlohmann::json::parse(line);
      MapIndexEntry e;
      e.image_id = j.at("image_id").get<std::string>();
      e.level = j.at("level").get<std::string>();
      e.stride = j.at("stride").get<int>();
      e.file = j.at("file").get<std::string>();
      const auto kind = j.at("kind").get<std::string>();
      if (kind == "targets") e.kind = MapKind::Targets;
      else if (kind == "predictions") e.kind = MapKind::Predictions;
      else throw Error(ErrorCode::ParseError, "unknown map kind '" + kind + "'", lineno);
      e.degree = j.at("K").get<std::size_t>();
      if (e.file.find("..") != std::string::npos || (!e.file.empty() && e.file.front() == '/')) {
        throw Error(ErrorCode::ParseError, "map file must be a plain relative path", lineno);
      }
      out.push_back(std::move(e));
    } catch (const nlohmann::json::exception& ex) {
      throw Error(ErrorCode::ParseError, ex.what(), lineno);
    }
  }
  return out;
}

}  // namespace fce
