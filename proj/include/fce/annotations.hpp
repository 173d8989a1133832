// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdlib>
#include <istream>
#include <ostream>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "fce/error.hpp"
#include "fce/format.hpp"
#include "fce/geometry.hpp"
#include "json.hpp"

namespace fce {

inline constexpr double kDefaultSubsetThreshold = 0.07;

struct TextInstance {
  Contour polygon;
  bool ignore = false;  ///< do-not-care region
  std::string id;
};

struct AnnotatedImage {
  std::string image_id;
  int width = 0;
  int height = 0;
  std::vector<TextInstance> instances;
};

struct AnnotationSet {
  std::vector<AnnotatedImage> images;
  std::size_t clamped_points = 0;  ///< points moved into the image rectangle
};

/// One JSON object per line:
///   {"image_id": str, "width": int, "height": int,
///    "instances": [{"points": [x, y, ...], "ignore": bool, "id": str?}]}
/// Blank lines are skipped. Missing instance ids default to the instance index.
inline AnnotationSet parse_jsonl(std::istream& in) {
  AnnotationSet out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(line);
    } catch (const nlohmann::json::parse_error& e) {
      throw Error(ErrorCode::ParseError, e.what(), lineno);
    }
    AnnotatedImage img;
    try {
      if (!j.is_object()) throw Error(ErrorCode::ParseError, "expected a JSON object", lineno);
      img.image_id = j.at("image_id").get<std::string>();
      img.width = j.at("width").get<int>();
      img.height = j.at("height").get<int>();
      if (img.width <= 0 || img.height <= 0) {
        throw Error(ErrorCode::ParseError, "image size must be positive", lineno);
      }
      std::set<std::string> ids;
      const auto& instances = j.at("instances");
      if (!instances.is_array()) throw Error(ErrorCode::ParseError, "instances must be an array", lineno);
      for (std::size_t k = 0; k < instances.size(); ++k) {
        const auto& inst = instances[k];
        const auto coords = inst.at("points").get<std::vector<double>>();
        if (coords.size() % 2 != 0) {
          throw Error(ErrorCode::InvalidPolygon, "odd number of coordinates in instance " + std::to_string(k), lineno);
        }
        if (coords.size() < 6) {
          throw Error(ErrorCode::InvalidPolygon, "fewer than 3 points in instance " + std::to_string(k), lineno);
        }
        std::vector<Point2> pts;
        pts.reserve(coords.size() / 2);
        for (std::size_t i = 0; i < coords.size(); i += 2) {
          Point2 p{coords[i], coords[i + 1]};
          if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
            throw Error(ErrorCode::InvalidPolygon, "non-finite coordinate", lineno);
          }
          const Point2 q{std::clamp(p.x, 0.0, static_cast<double>(img.width)),
                         std::clamp(p.y, 0.0, static_cast<double>(img.height))};
          if (!(q == p)) ++out.clamped_points;
          pts.push_back(q);
        }
        TextInstance ti{Contour(std::move(pts)), inst.value("ignore", false),
                        inst.contains("id") ? inst.at("id").get<std::string>() : std::to_string(k)};
        if (!ids.insert(ti.id).second) {
          throw Error(ErrorCode::ParseError, "duplicate instance id '" + ti.id + "'", lineno);
        }
        img.instances.push_back(std::move(ti));
      }
    } catch (const nlohmann::json::exception& e) {
      throw Error(ErrorCode::ParseError, e.what(), lineno);
    }
    out.images.push_back(std::move(img));
  }
  return out;
}

inline std::vector<double> flatten(std::span<const Point2> pts) {
  std::vector<double> flat;
  flat.reserve(2 * pts.size());
  for (const auto& p : pts) {
    flat.push_back(p.x);
    flat.push_back(p.y);
  }
  return flat;
}

inline std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

inline std::string to_jsonl(const AnnotatedImage& img) {
  std::string s = "{\"image_id\":" + json_string(img.image_id) + ",\"width\":" + std::to_string(img.width) +
                  ",\"height\":" + std::to_string(img.height) + ",\"instances\":[";
  for (std::size_t k = 0; k < img.instances.size(); ++k) {
    const auto& inst = img.instances[k];
    if (k > 0) s += ',';
    s += "{\"id\":" + json_string(inst.id) + ",\"ignore\":" + (inst.ignore ? "true" : "false") + ",\"points\":[" +
         format_numbers(flatten(inst.polygon.vertices())) + "]}";
  }
  s += "]}";
  return s;
}

inline void write_jsonl(std::ostream& out, std::span<const AnnotatedImage> images) {
  for (const auto& img : images) out << to_jsonl(img) << '\n';
}

struct DelimitedOptions {
  /// Drop a trailing non-numeric transcription field instead of rejecting the line.
  bool drop_trailing_text = true;
  std::string ignore_marker = "###";
};

namespace detail {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

inline bool parse_real(const std::string& tok, double& v) {
  if (tok.empty()) return false;
  char* end = nullptr;
  v = std::strtod(tok.c_str(), &end);
  return end == tok.c_str() + tok.size() && std::isfinite(v);
}

}  // namespace detail

/// Comma-separated polygons, one per line: x1,y1,x2,y2,...[,transcription].
/// A transcription equal to the ignore marker flags the instance as ignored.
inline std::vector<TextInstance> parse_delimited(std::istream& in, const DelimitedOptions& opts = {}) {
  std::vector<TextInstance> out;
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (lineno == 1 && line.rfind("\xEF\xBB\xBF", 0) == 0) line.erase(0, 3);
    if (detail::trim(line).empty()) continue;

    std::vector<std::string> tokens;
    std::size_t pos = 0;
    while (true) {
      const std::size_t comma = line.find(',', pos);
      tokens.push_back(detail::trim(line.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos)));
      if (comma == std::string::npos) break;
      pos = comma + 1;
    }

    std::vector<double> coords;
    std::size_t i = 0;
    for (double v; i < tokens.size() && detail::parse_real(tokens[i], v); ++i) coords.push_back(v);
    bool ignore = false;
    if (i < tokens.size()) {
      // Everything after the numeric prefix is the transcription (it may contain commas).
      std::string text = tokens[i];
      for (std::size_t k = i + 1; k < tokens.size(); ++k) text += "," + tokens[k];
      text = detail::trim(text);
      if (text == opts.ignore_marker) {
        ignore = true;
      } else if (!opts.drop_trailing_text) {
        throw Error(ErrorCode::ParseError, "non-numeric field '" + text + "'", lineno);
      }
    }
    if (coords.size() % 2 != 0) throw Error(ErrorCode::ParseError, "odd number of coordinates", lineno);
    if (coords.size() < 6) throw Error(ErrorCode::ParseError, "fewer than 3 points", lineno);
    out.push_back({Contour::from_flat(coords), ignore, std::to_string(out.size())});
  }
  return out;
}

/// Largest vertex_removal_delta over all vertices except the first and last
/// (the annotation's head and tail). Negative when the polygon cannot be scored.
inline double max_interior_removal_delta(const Contour& c) {
  if (c.size() < 4 || signed_area(c) == 0.0) return -1.0;
  double best = 0.0;
  for (std::size_t i = 1; i + 1 < c.size(); ++i) best = std::max(best, vertex_removal_delta(c, i));
  return best;
}

/// Keeps instances for which deleting some interior annotation vertex changes the
/// polygon area by at least `threshold` (relative).
inline std::vector<TextInstance> curved_subset_select(std::span<const TextInstance> instances,
                                                      double threshold = kDefaultSubsetThreshold) {
  std::vector<TextInstance> out;
  for (const auto& inst : instances) {
    const double delta = max_interior_removal_delta(inst.polygon);
    if (delta >= 0.0 && delta >= threshold) out.push_back(inst);
  }
  return out;
}

}  // namespace fce
