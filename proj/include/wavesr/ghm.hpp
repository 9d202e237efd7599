/*
Copyright 2026 The wavesr Authors
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
you may obtain a copy of the License at

                http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <array>
#include <cstddef>
#include <span>
#include <vector>

#include "wavesr/image.hpp"

namespace wavesr {

using Matrix2x4 = std::array<std::array<double, 4>, 2>;
using Matrix2x2 = std::array<std::array<double, 2>, 2>;

/// GHM analysis kernels. h1 = [H0 | H1], h2 = [H2 | H3] for the lowpass
/// matrix taps and likewise for g1, g2, so the scalar-vector recursion is
///
///   low[n]  = H0 v[2n] + H1 v[2n+1] + H2 v[2n+2] + H3 v[2n+3]
///   high[n] = G0 v[2n] + ...
///
/// over the prefiltered 2-vector stream v (periodically extended).
struct GhmFilterSet {
  Matrix2x4 h1;
  Matrix2x4 g1;
  Matrix2x4 h2;
  Matrix2x4 g2;

  static GhmFilterSet standard();
};

/// 16 planes of the two-pass GHM transform, each ceil(src/4) per side after
/// padding.
///
/// bands[4 * i + j] is column-pass channel i and row-pass channel j, channels
/// ordered (low0, low1, high0, high1). Indices with i < 2 and j < 2 (0, 1, 4,
/// 5) are the approximation-type bands.
struct GhmSubbands {
  static constexpr int layout_version = 1;

  std::array<Image, 16> bands;
  std::size_t src_height = 0;
  std::size_t src_width = 0;

  Image& band(std::size_t i, std::size_t j) { return bands[4 * i + j]; }
  const Image& band(std::size_t i, std::size_t j) const { return bands[4 * i + j]; }
  std::size_t band_height() const { return bands[0].height(); }
  std::size_t band_width() const { return bands[0].width(); }

  static bool is_approximation(std::size_t index) { return index / 4 < 2 && index % 4 < 2; }
  /// Throws "inconsistent band dims" on any shape disagreement.
  void validate() const;
};

/// Two-channel GHM vector filter bank run separably over image planes.
///
/// Synthesis is not transcribed: the full periodic analysis operator
/// (prefilter included) is assembled for each signal length, LU-factorised,
/// cached, and solved against, so reconstruction is the exact inverse of
/// whatever analysis is configured.
class GhmTransform {
 public:
  /// Default prefilter diag(1, 1/sqrt(2)) maps a constant signal onto the
  /// direction the GHM highpass annihilates.
  static Matrix2x2 default_prefilter();

  explicit GhmTransform(Matrix2x2 prefilter = default_prefilter(),
                        GhmFilterSet filters = GhmFilterSet::standard());

  const Matrix2x2& prefilter_matrix() const { return prefilter_; }
  const GhmFilterSet& filters() const { return filters_; }

  /// Repeated-row vectorisation: v[n] = P [x[2n], x[2n+1]]. Even length only.
  std::vector<std::array<double, 2>> prefilter(std::span<const double> signal) const;
  std::vector<double> postfilter(std::span<const std::array<double, 2>> vectors) const;

  /// One analysis pass on a scalar signal whose length is a multiple of 4.
  /// Returns the four channel streams (low0, low1, high0, high1), N/4 each.
  std::array<std::vector<double>, 4> analyze(std::span<const double> signal) const;
  std::vector<double> synthesize(const std::array<std::vector<double>, 4>& channels) const;

  GhmSubbands decompose(const Image& plane) const;
  Image reconstruct(const GhmSubbands& bands) const;

 private:
  void analyze_into(const double* x, std::size_t n, double* c0, double* c1, double* c2,
                    double* c3, std::size_t stride) const;

  Matrix2x2 prefilter_;
  Matrix2x2 inverse_prefilter_;
  GhmFilterSet filters_;
};

GhmSubbands ghm_decompose(const Image& plane);
Image ghm_reconstruct(const GhmSubbands& bands);

}  // namespace wavesr
