// Copyright (C) 2026 The fce authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <span>
#include <vector>

#include "fce/error.hpp"
#include "fce/geometry.hpp"

namespace fce {

using Complex = std::complex<double>;

inline constexpr std::size_t kDefaultDegree = 5;
inline constexpr std::size_t kDefaultSamples = 400;
inline constexpr std::size_t kDefaultReconstructionPoints = 50;

/// Truncated Fourier series of a closed contour: coefficients c_k for k = -K..K,
/// where c_k = u_k + i v_k and the contour is f(t) = sum_k c_k exp(2 pi i k t).
class FourierSignature {
 public:
  explicit FourierSignature(std::size_t degree) : degree_(degree), coeffs_(2 * degree + 1) {}

  FourierSignature(std::size_t degree, std::vector<Complex> coeffs) : degree_(degree), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != 2 * degree_ + 1) {
      throw Error(ErrorCode::InvalidArgument, "signature of degree " + std::to_string(degree_) + " needs " +
                                                  std::to_string(2 * degree_ + 1) + " coefficients");
    }
  }

  /// Parses the flat layout [u_-K, v_-K, ..., u_0, v_0, ..., u_K, v_K].
  static FourierSignature from_flat(std::span<const double> flat) {
    if (flat.size() < 2 || flat.size() % 4 != 2) {
      throw Error(ErrorCode::ChannelCountMismatch,
                  "flat signature length " + std::to_string(flat.size()) + " is not of the form 2(2K+1)");
    }
    const std::size_t degree = (flat.size() / 2 - 1) / 2;
    std::vector<Complex> c(2 * degree + 1);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (!std::isfinite(flat[2 * j]) || !std::isfinite(flat[2 * j + 1])) {
        throw Error(ErrorCode::NonFinite, "signature has a non-finite entry");
      }
      c[j] = {flat[2 * j], flat[2 * j + 1]};
    }
    return FourierSignature(degree, std::move(c));
  }

  static std::size_t flat_size(std::size_t degree) { return 2 * (2 * degree + 1); }

  std::size_t degree() const noexcept { return degree_; }

  const Complex& operator[](std::int64_t k) const { return coeffs_[index(k)]; }
  Complex& operator[](std::int64_t k) { return coeffs_[index(k)]; }

  /// Coefficients ordered k = -K..K.
  std::span<const Complex> coeffs() const noexcept { return coeffs_; }

  std::vector<double> flat() const {
    std::vector<double> out;
    out.reserve(2 * coeffs_.size());
    for (const auto& c : coeffs_) {
      out.push_back(c.real());
      out.push_back(c.imag());
    }
    return out;
  }

  friend bool operator==(const FourierSignature&, const FourierSignature&) = default;

 private:
  std::size_t index(std::int64_t k) const {
    const auto K = static_cast<std::int64_t>(degree_);
    if (k < -K || k > K) throw Error(ErrorCode::InvalidArgument, "frequency out of range");
    return static_cast<std::size_t>(k + K);
  }

  std::size_t degree_;
  std::vector<Complex> coeffs_;
};

namespace detail {

// exp(2 pi i m / n) for m = 0..n-1; phases are reduced modulo n before lookup.
class Twiddles {
 public:
  explicit Twiddles(std::size_t n) : n_(n), table_(n) {
    for (std::size_t m = 0; m < n; ++m) {
      const double angle = 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(n);
      table_[m] = {std::cos(angle), std::sin(angle)};
    }
  }

  // exp(2 pi i k j / n)
  Complex operator()(std::int64_t k, std::int64_t j) const {
    const auto n = static_cast<std::int64_t>(n_);
    std::int64_t m = (k * j) % n;
    if (m < 0) m += n;
    return table_[static_cast<std::size_t>(m)];
  }

 private:
  std::size_t n_;
  std::vector<Complex> table_;
};

inline Complex coefficient(std::span<const Point2> pts, std::int64_t k, const Twiddles& tw) {
  const auto n = static_cast<std::int64_t>(pts.size());
  Complex acc{0.0, 0.0};
  for (std::int64_t i = 1; i <= n; ++i) {
    const Point2& p = pts[static_cast<std::size_t>(i % n)];
    acc += Complex{p.x, p.y} * std::conj(tw(k, i));
  }
  return acc / static_cast<double>(n);
}

inline std::vector<Point2> evaluate(const FourierSignature& s, std::size_t count) {
  const Twiddles tw(count);
  const auto K = static_cast<std::int64_t>(s.degree());
  std::vector<Point2> out;
  out.reserve(count);
  for (std::size_t j = 0; j < count; ++j) {
    Complex acc{0.0, 0.0};
    for (std::int64_t k = -K; k <= K; ++k) acc += s[k] * tw(k, static_cast<std::int64_t>(j));
    out.push_back({acc.real(), acc.imag()});
  }
  return out;
}

}  // namespace detail

/// Degree-K Fourier coefficients of uniformly spaced samples, by direct summation
/// over n = 1..N with sample n taken as f(n / N).
inline FourierSignature fourier_coefficients(const ResampledContour& points, std::size_t degree) {
  const std::size_t n = points.size();
  if (2 * degree + 1 > n) {
    throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(degree) + " needs at least " +
                                               std::to_string(2 * degree + 1) + " samples, got " + std::to_string(n));
  }
  const detail::Twiddles tw(n);
  FourierSignature sig(degree);
  const auto K = static_cast<std::int64_t>(degree);
  for (std::int64_t k = -K; k <= K; ++k) sig[k] = detail::coefficient(points.points(), k, tw);
  return sig;
}

/// Resample then transform.
inline FourierSignature embed(const Contour& c, std::size_t degree = kDefaultDegree,
                              std::size_t samples = kDefaultSamples) {
  if (2 * degree + 1 > samples) {
    throw Error(ErrorCode::DegreeTooLarge, "degree " + std::to_string(degree) + " exceeds what " +
                                               std::to_string(samples) + " samples can resolve");
  }
  return fourier_coefficients(resample_equidistant(c, samples), degree);
}

/// Evaluates the truncated series at t = j / count, j = 0..count-1.
inline Contour reconstruct(const FourierSignature& s, std::size_t count = kDefaultReconstructionPoints) {
  if (count < 3) throw Error(ErrorCode::InvalidArgument, "reconstruction needs at least 3 points");
  return Contour(detail::evaluate(s, count));
}

/// Expresses the signature relative to `origin` (only c_0 moves).
inline FourierSignature recenter(FourierSignature s, Point2 origin) {
  s[0] -= Complex{origin.x, origin.y};
  return s;
}

/// All N DFT coefficients of the samples, for residues k = -floor((N-1)/2) .. floor(N/2).
inline std::vector<Complex> full_spectrum(const ResampledContour& points) {
  const auto n = static_cast<std::int64_t>(points.size());
  const detail::Twiddles tw(points.size());
  std::vector<Complex> out;
  out.reserve(points.size());
  for (std::int64_t k = -(n - 1) / 2; k <= n / 2; ++k) out.push_back(detail::coefficient(points.points(), k, tw));
  return out;
}

struct TruncationError {
  double direct = 0.0;    ///< mean squared distance to the degree-K reconstruction at the sample times
  double spectral = 0.0;  ///< energy of the discarded DFT residues
};

/// Both routes to the degree-K approximation error. They agree by Parseval.
inline TruncationError truncation_error(const ResampledContour& points, std::size_t degree) {
  const std::size_t n = points.size();
  if (2 * degree + 1 > n) throw Error(ErrorCode::DegreeTooLarge, "degree too large for the sample count");

  TruncationError out;
  const std::vector<Point2> approx = detail::evaluate(fourier_coefficients(points, degree), n);
  for (std::size_t j = 0; j < n; ++j) {
    const Point2 d = points[j] - approx[j];
    out.direct += d.x * d.x + d.y * d.y;
  }
  out.direct /= static_cast<double>(n);

  // Accumulate from the highest frequency inward so the tail is exactly
  // non-increasing in the degree.
  const std::vector<Complex> spec = full_spectrum(points);
  const auto lo = -(static_cast<std::int64_t>(n) - 1) / 2;
  auto at = [&](std::int64_t k) { return std::norm(spec[static_cast<std::size_t>(k - lo)]); };
  const auto half = static_cast<std::int64_t>(n) / 2;
  const auto K = static_cast<std::int64_t>(degree);
  double tail = 0.0;
  if (n % 2 == 0 && half > K) tail += at(half);
  for (std::int64_t m = (static_cast<std::int64_t>(n) - 1) / 2; m > K; --m) tail += at(m) + at(-m);
  out.spectral = tail;
  return out;
}

/// Mean squared approximation error of the degree-K series (Parseval tail form).
inline double truncation_l2_error(const ResampledContour& points, std::size_t degree) {
  return truncation_error(points, degree).spectral;
}

}  // namespace fce
