// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>
#include <utility>
#include <vector>

#include "fce/error.hpp"

namespace fce {

/// Image-frame point in pixels; y grows downward.
struct Point2 {
  double x = 0.0;
  double y = 0.0;

  friend Point2 operator+(Point2 a, Point2 b) { return {a.x + b.x, a.y + b.y}; }
  friend Point2 operator-(Point2 a, Point2 b) { return {a.x - b.x, a.y - b.y}; }
  friend Point2 operator*(Point2 a, double s) { return {a.x * s, a.y * s}; }
  friend Point2 operator*(double s, Point2 a) { return {a.x * s, a.y * s}; }
  friend bool operator==(Point2 a, Point2 b) = default;
};

inline double cross(Point2 a, Point2 b) { return a.x * b.y - a.y * b.x; }
inline double dot(Point2 a, Point2 b) { return a.x * b.x + a.y * b.y; }
inline double norm(Point2 a) { return std::hypot(a.x, a.y); }

/// Closed polygon; the last vertex connects back to the first.
///
/// Construction enforces at least three vertices and finite coordinates.
/// A positive perimeter is checked by the operations that need one, so that
/// degenerate shapes (for instance a reconstruction of a constant signature)
/// remain representable.
class Contour {
 public:
  explicit Contour(std::vector<Point2> vertices) : vertices_(std::move(vertices)) {
    if (vertices_.size() < 3) {
      throw Error(ErrorCode::InvalidPolygon,
                  "contour needs at least 3 vertices, got " + std::to_string(vertices_.size()));
    }
    for (const auto& p : vertices_) {
      if (!std::isfinite(p.x) || !std::isfinite(p.y)) {
        throw Error(ErrorCode::InvalidPolygon, "contour has a non-finite coordinate");
      }
    }
  }

  /// Builds a contour from interleaved x,y values.
  static Contour from_flat(std::span<const double> xy) {
    if (xy.size() % 2 != 0) {
      throw Error(ErrorCode::InvalidPolygon, "odd number of coordinates");
    }
    std::vector<Point2> pts;
    pts.reserve(xy.size() / 2);
    for (std::size_t i = 0; i + 1 < xy.size(); i += 2) pts.push_back({xy[i], xy[i + 1]});
    return Contour(std::move(pts));
  }

  std::size_t size() const noexcept { return vertices_.size(); }
  const Point2& operator[](std::size_t i) const { return vertices_[i]; }
  std::span<const Point2> vertices() const noexcept { return vertices_; }
  auto begin() const noexcept { return vertices_.begin(); }
  auto end() const noexcept { return vertices_.end(); }

  friend bool operator==(const Contour&, const Contour&) = default;

 private:
  std::vector<Point2> vertices_;
};

/// Uniformly resampled closed contour. Element j sits at parameter t = j / N,
/// so element 0 is the canonical start point f(0) = f(1).
class ResampledContour {
 public:
  explicit ResampledContour(std::vector<Point2> points) : points_(std::move(points)) {
    if (points_.empty()) throw Error(ErrorCode::InvalidArgument, "resampled contour is empty");
  }

  std::size_t size() const noexcept { return points_.size(); }
  const Point2& operator[](std::size_t i) const { return points_[i]; }
  std::span<const Point2> points() const noexcept { return points_; }
  auto begin() const noexcept { return points_.begin(); }
  auto end() const noexcept { return points_.end(); }

 private:
  std::vector<Point2> points_;
};

struct Box {
  Point2 min;
  Point2 max;
  double width() const { return max.x - min.x; }
  double height() const { return max.y - min.y; }
};

inline Box bounding_box(std::span<const Point2> pts) {
  Box b{{std::numeric_limits<double>::infinity(), std::numeric_limits<double>::infinity()},
        {-std::numeric_limits<double>::infinity(), -std::numeric_limits<double>::infinity()}};
  for (const auto& p : pts) {
    b.min.x = std::min(b.min.x, p.x);
    b.min.y = std::min(b.min.y, p.y);
    b.max.x = std::max(b.max.x, p.x);
    b.max.y = std::max(b.max.y, p.y);
  }
  return b;
}

inline Box bounding_box(const Contour& c) { return bounding_box(c.vertices()); }

/// Shoelace sum; positive iff the polygon is visually clockwise in the y-down frame.
inline double signed_area(std::span<const Point2> pts) {
  const std::size_t n = pts.size();
  if (n < 3) return 0.0;
  double acc = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % n];
    acc += a.x * b.y - b.x * a.y;
  }
  return 0.5 * acc;
}

inline double signed_area(const Contour& c) { return signed_area(c.vertices()); }

inline double perimeter(std::span<const Point2> pts) {
  double acc = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i) acc += norm(pts[(i + 1) % pts.size()] - pts[i]);
  return acc;
}

inline double perimeter(const Contour& c) { return perimeter(c.vertices()); }

/// Arc-length weighted centroid of the polygon boundary.
inline Point2 contour_center(std::span<const Point2> pts) {
  const std::size_t n = pts.size();
  double total = 0.0;
  Point2 acc;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % n];
    const double len = norm(b - a);
    acc = acc + (a + b) * (0.5 * len);
    total += len;
  }
  if (!(total > 0.0)) throw Error(ErrorCode::ZeroPerimeter, "all contour vertices coincide");
  return acc * (1.0 / total);
}

inline Point2 contour_center(const Contour& c) { return contour_center(c.vertices()); }

/// Location on a contour: edge `edge` runs from vertex `edge` to vertex `edge + 1`
/// (cyclically) and `t` in [0, 1) is the fraction along it.
struct EdgePoint {
  std::size_t edge = 0;
  double t = 0.0;
  Point2 point;
};

/// Rightmost crossing of the horizontal line through the contour center.
///
/// Edges are half-open [start, end): a vertex lying on the line is reported
/// once, by the edge that starts there.
inline EdgePoint canonical_start(std::span<const Point2> pts) {
  const Point2 center = contour_center(pts);
  const double y = center.y;
  const std::size_t n = pts.size();
  bool found = false;
  EdgePoint best;
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % n];
    double t;
    if (a.y == y) {
      t = 0.0;
    } else if ((a.y < y && y < b.y) || (b.y < y && y < a.y)) {
      t = (y - a.y) / (b.y - a.y);
      if (!(t < 1.0)) continue;
    } else {
      continue;
    }
    const Point2 p = t == 0.0 ? a : Point2{a.x + (b.x - a.x) * t, y};
    if (!found || p.x > best.point.x) {
      best = {i, t, p};
      found = true;
    }
  }
  if (!found) {
    throw Error(ErrorCode::DegenerateContour, "horizontal line through the center misses the contour");
  }
  return best;
}

inline EdgePoint canonical_start(const Contour& c) { return canonical_start(c.vertices()); }

namespace detail {

// Orientation made positive and vertex list rotated to a canonical first vertex,
// so that every cyclic rotation or reversal of the input yields identical lists.
inline std::vector<Point2> canonical_vertex_order(std::span<const Point2> pts) {
  std::vector<Point2> v(pts.begin(), pts.end());
  if (signed_area(v) < 0.0) std::reverse(v.begin(), v.end());
  const std::size_t n = v.size();
  auto less = [](Point2 a, Point2 b) { return a.x < b.x || (a.x == b.x && a.y < b.y); };
  std::size_t best = 0;
  for (std::size_t i = 1; i < n; ++i) {
    if (less(v[i], v[best])) {
      best = i;
    } else if (v[i] == v[best]) {
      // Repeated minimum vertex: pick the rotation whose sequence compares smallest.
      for (std::size_t k = 1; k < n; ++k) {
        const Point2& a = v[(i + k) % n];
        const Point2& b = v[(best + k) % n];
        if (less(a, b)) {
          best = i;
          break;
        }
        if (less(b, a)) break;
      }
    }
  }
  std::rotate(v.begin(), v.begin() + static_cast<std::ptrdiff_t>(best), v.end());
  return v;
}

}  // namespace detail

/// N points at equal arc-length spacing, clockwise from the canonical start.
inline ResampledContour resample_equidistant(const Contour& c, std::size_t count) {
  if (count < 3) throw Error(ErrorCode::InvalidArgument, "resample count must be at least 3");
  const std::vector<Point2> v = detail::canonical_vertex_order(c.vertices());
  const std::size_t n = v.size();

  std::vector<double> cum(n + 1, 0.0);
  for (std::size_t i = 0; i < n; ++i) cum[i + 1] = cum[i] + norm(v[(i + 1) % n] - v[i]);
  const double length = cum[n];
  if (!(length > 0.0)) throw Error(ErrorCode::ZeroPerimeter, "contour has zero perimeter");

  const EdgePoint start = canonical_start(v);
  const double s0 = cum[start.edge] + start.t * (cum[start.edge + 1] - cum[start.edge]);

  std::vector<Point2> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    double a = s0 + length * static_cast<double>(j) / static_cast<double>(count);
    if (a >= length) a -= length;
    auto it = std::upper_bound(cum.begin(), cum.end(), a);
    std::size_t e = static_cast<std::size_t>(it - cum.begin());
    e = e == 0 ? 0 : e - 1;
    if (e >= n) e = n - 1;
    const double len = cum[e + 1] - cum[e];
    const double u = len > 0.0 ? std::clamp((a - cum[e]) / len, 0.0, 1.0) : 0.0;
    const Point2& p = v[e];
    const Point2& q = v[(e + 1) % n];
    out.push_back({p.x + (q.x - p.x) * u, p.y + (q.y - p.y) * u});
  }
  return ResampledContour(std::move(out));
}

namespace detail {

inline bool segments_cross(Point2 a, Point2 b, Point2 c, Point2 d) {
  const double d1 = cross(b - a, c - a);
  const double d2 = cross(b - a, d - a);
  const double d3 = cross(d - c, a - c);
  const double d4 = cross(d - c, b - c);
  return ((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) && ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0));
}

inline bool self_intersects(std::span<const Point2> v) {
  const std::size_t n = v.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 2; j < n; ++j) {
      if (i == 0 && j == n - 1) continue;
      if (segments_cross(v[i], v[(i + 1) % n], v[j], v[(j + 1) % n])) return true;
    }
  }
  return false;
}

}  // namespace detail

/// Inward offset of every edge by factor * |area| / perimeter.
///
/// Vertices are rebuilt from intersections of adjacent offset lines. When the
/// offset polygon flips an edge, self-intersects, or fails to shrink, the
/// vertices are instead scaled toward the contour center by (1 - factor).
inline Contour shrink_polygon(const Contour& c, double factor) {
  if (!(factor > 0.0 && factor < 1.0)) {
    throw Error(ErrorCode::InvalidArgument, "shrink factor must lie in (0, 1)");
  }
  const double area = signed_area(c);
  if (area == 0.0) throw Error(ErrorCode::DegenerateContour, "cannot shrink a zero-area contour");
  const double offset = factor * std::abs(area) / perimeter(c);
  const double side = area > 0.0 ? 1.0 : -1.0;

  std::vector<Point2> v;
  v.reserve(c.size());
  for (const auto& p : c) {
    if (v.empty() || !(p == v.back())) v.push_back(p);
  }
  while (v.size() > 1 && v.front() == v.back()) v.pop_back();

  auto scaled = [&] {
    const Point2 center = contour_center(c);
    std::vector<Point2> out;
    out.reserve(c.size());
    for (const auto& p : c) out.push_back(center + (p - center) * (1.0 - factor));
    return Contour(std::move(out));
  };
  if (v.size() < 3) return scaled();

  const std::size_t n = v.size();
  std::vector<Point2> dir(n), base(n);
  for (std::size_t i = 0; i < n; ++i) {
    const Point2 e = v[(i + 1) % n] - v[i];
    const double len = norm(e);
    const Point2 normal{-e.y * side / len, e.x * side / len};
    dir[i] = e;
    base[i] = v[i] + normal * offset;
  }

  std::vector<Point2> out(n);
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t prev = (i + n - 1) % n;
    const Point2 e0 = dir[prev];
    const Point2 e1 = dir[i];
    const double den = cross(e0, e1);
    if (std::abs(den) <= 1e-12 * norm(e0) * norm(e1)) {
      out[i] = base[i];
    } else {
      const double s = cross(base[i] - base[prev], e1) / den;
      out[i] = base[prev] + e0 * s;
    }
  }

  bool ok = true;
  for (std::size_t i = 0; i < n && ok; ++i) {
    if (!std::isfinite(out[i].x) || !std::isfinite(out[i].y)) ok = false;
    else if (dot(out[(i + 1) % n] - out[i], dir[i]) <= 0.0) ok = false;
  }
  if (ok) {
    const double shrunk = signed_area(out);
    ok = shrunk * side > 0.0 && std::abs(shrunk) < std::abs(area) && !detail::self_intersects(out);
  }
  return ok ? Contour(std::move(out)) : scaled();
}

/// Even-odd rule; a point is inside when an odd number of edge crossings lie
/// strictly to its right. Edges are half-open in y.
inline bool point_in_polygon(Point2 p, std::span<const Point2> pts) {
  bool inside = false;
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % n];
    if ((a.y > p.y) != (b.y > p.y)) {
      const double x = a.x + (p.y - a.y) * (b.x - a.x) / (b.y - a.y);
      if (p.x < x) inside = !inside;
    }
  }
  return inside;
}

inline bool point_in_polygon(Point2 p, const Contour& c) { return point_in_polygon(p, c.vertices()); }

namespace detail {

// Sub-pixel raster of the joint bounding box: sample (col, row) has center
// (x0 + (col + 0.5) / s, y0 + (row + 0.5) / s).
struct SampleGrid {
  double x0 = 0.0;
  double y0 = 0.0;
  int s = 1;
  std::int64_t cols = 0;
  std::int64_t rows = 0;

  double cx(std::int64_t col) const { return x0 + (static_cast<double>(col) + 0.5) / s; }
  double cy(std::int64_t row) const { return y0 + (static_cast<double>(row) + 0.5) / s; }

  // First column whose center is >= x.
  std::int64_t first_at_or_after(double x) const {
    double guess = std::ceil((x - x0) * s - 0.5);
    std::int64_t m = guess < 0.0 ? 0 : (guess > static_cast<double>(cols) ? cols : static_cast<std::int64_t>(guess));
    while (m < cols && cx(m) < x) ++m;
    while (m > 0 && cx(m - 1) >= x) --m;
    return m;
  }
};

using Span = std::pair<std::int64_t, std::int64_t>;

// Column ranges [lo, hi) of samples inside the polygon on one raster row.
inline void row_spans(std::span<const Point2> pts, const SampleGrid& g, double y, std::vector<double>& xs,
                      std::vector<Span>& spans) {
  xs.clear();
  spans.clear();
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i) {
    const Point2& a = pts[i];
    const Point2& b = pts[(i + 1) % n];
    if ((a.y > y) != (b.y > y)) xs.push_back(a.x + (y - a.y) * (b.x - a.x) / (b.y - a.y));
  }
  std::sort(xs.begin(), xs.end());
  for (std::size_t i = 0; i + 1 < xs.size(); i += 2) {
    const std::int64_t lo = g.first_at_or_after(xs[i]);
    const std::int64_t hi = g.first_at_or_after(xs[i + 1]);
    if (hi > lo) spans.emplace_back(lo, hi);
  }
}

inline std::int64_t span_total(const std::vector<Span>& s) {
  std::int64_t t = 0;
  for (const auto& [lo, hi] : s) t += hi - lo;
  return t;
}

inline std::int64_t span_overlap(const std::vector<Span>& a, const std::vector<Span>& b) {
  std::int64_t t = 0;
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    const std::int64_t lo = std::max(a[i].first, b[j].first);
    const std::int64_t hi = std::min(a[i].second, b[j].second);
    if (hi > lo) t += hi - lo;
    if (a[i].second < b[j].second) ++i;
    else ++j;
  }
  return t;
}

}  // namespace detail

/// Intersection over union by counting sub-pixel samples of the joint bounding
/// box (`supersample` samples per pixel side, even-odd fill).
inline double polygon_iou(std::span<const Point2> a, std::span<const Point2> b, int supersample = 4) {
  if (supersample < 1) throw Error(ErrorCode::InvalidArgument, "supersample must be >= 1");
  const Box ba = bounding_box(a);
  const Box bb = bounding_box(b);
  if (ba.max.x < bb.min.x || bb.max.x < ba.min.x || ba.max.y < bb.min.y || bb.max.y < ba.min.y) return 0.0;

  detail::SampleGrid g;
  g.s = supersample;
  g.x0 = std::floor(std::min(ba.min.x, bb.min.x));
  g.y0 = std::floor(std::min(ba.min.y, bb.min.y));
  const double x1 = std::max(std::ceil(std::max(ba.max.x, bb.max.x)), g.x0 + 1.0);
  const double y1 = std::max(std::ceil(std::max(ba.max.y, bb.max.y)), g.y0 + 1.0);
  g.cols = static_cast<std::int64_t>(x1 - g.x0) * supersample;
  g.rows = static_cast<std::int64_t>(y1 - g.y0) * supersample;

  std::vector<double> xs;
  std::vector<detail::Span> sa, sb;
  std::int64_t count_a = 0, count_b = 0, inter = 0;
  for (std::int64_t r = 0; r < g.rows; ++r) {
    const double y = g.cy(r);
    const bool in_a = y >= ba.min.y && y <= ba.max.y;
    const bool in_b = y >= bb.min.y && y <= bb.max.y;
    if (!in_a && !in_b) continue;
    sa.clear();
    sb.clear();
    if (in_a) detail::row_spans(a, g, y, xs, sa);
    if (in_b) detail::row_spans(b, g, y, xs, sb);
    count_a += detail::span_total(sa);
    count_b += detail::span_total(sb);
    inter += detail::span_overlap(sa, sb);
  }
  const std::int64_t uni = count_a + count_b - inter;
  if (uni == 0) return 0.0;
  return static_cast<double>(inter) / static_cast<double>(uni);
}

inline double polygon_iou(const Contour& a, const Contour& b, int supersample = 4) {
  return polygon_iou(a.vertices(), b.vertices(), supersample);
}

/// |A_before - A_after| / A_before for deleting vertex i.
inline double vertex_removal_delta(const Contour& c, std::size_t i) {
  if (c.size() < 4) throw Error(ErrorCode::InvalidArgument, "vertex removal needs at least 4 vertices");
  if (i >= c.size()) throw Error(ErrorCode::InvalidArgument, "vertex index out of range");
  const double before = std::abs(signed_area(c));
  if (before == 0.0) throw Error(ErrorCode::DegenerateContour, "contour has zero area");
  std::vector<Point2> rest;
  rest.reserve(c.size() - 1);
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k != i) rest.push_back(c[k]);
  }
  const double after = std::abs(signed_area(rest));
  return std::abs(before - after) / before;
}

}  // namespace fce
