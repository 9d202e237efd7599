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

#include <span>
#include <string>
#include <vector>

#include "wavesr/image.hpp"

namespace wavesr {

/// Reflection type used when a bank runs in BoundaryMode::symmetric.
///
/// Odd-length symmetric filters pair with whole-sample reflection
/// (x2 x1 | x0 x1 x2); everything else uses half-sample (x1 x0 | x0 x1).
enum class SymmetricExtension { half_sample, whole_sample };

/// One single-level two-channel filter bank.
///
/// All taps are stored in correlation orientation. Analysis keeps even
/// phases:
///
///   approx[n] = sum_k dec_lo[k] * x[2n + k - dec_lo_offset]
///   detail[n] = sum_k dec_hi[k] * x[2n + k - dec_hi_offset]
///
/// and periodic synthesis is the transpose of the same formula evaluated
/// with the rec_* taps and offsets, so for orthogonal banks rec == dec.
struct FilterBank {
  std::string name;
  std::vector<double> dec_lo;
  std::vector<double> dec_hi;
  std::vector<double> rec_lo;
  std::vector<double> rec_hi;
  bool orthogonal = false;
  int dec_lo_offset = 0;
  int dec_hi_offset = 0;
  int rec_lo_offset = 0;
  int rec_hi_offset = 0;
  SymmetricExtension symmetric_extension = SymmetricExtension::half_sample;

  /// Periodic for orthogonal banks, symmetric otherwise.
  BoundaryMode default_mode() const {
    return orthogonal ? BoundaryMode::periodic : BoundaryMode::symmetric;
  }

  /// Throws if any tap array is empty or non-finite.
  void validate() const;
};

struct Dwt1d {
  std::vector<double> approx;
  std::vector<double> detail;
};

/// Single-level analysis; each output has ceil(N/2) samples. Odd signals are
/// extended by one reflected sample first.
Dwt1d dwt1d(std::span<const double> signal, const FilterBank& fb, BoundaryMode mode);

/// Inverse of dwt1d. `out_len` must be 2M or 2M-1 for bands of length M.
///
/// Periodic and zero modes evaluate the synthesis filter sum directly. In
/// symmetric mode the critically sampled analysis operator for the padded
/// length is assembled once, LU-factorised and cached, and synthesis solves
/// against it.
std::vector<double> idwt1d(std::span<const double> approx, std::span<const double> detail,
                           const FilterBank& fb, BoundaryMode mode, std::size_t out_len);

/// Four bands of a 2D single-level transform.
///
/// The first letter names the filter run along rows (horizontal), the second
/// the one run along columns: lh is row-lowpass / column-highpass.
struct SubbandSet {
  Image ll;
  Image lh;
  Image hl;
  Image hh;
  std::string wavelet;
  std::size_t src_height = 0;
  std::size_t src_width = 0;

  std::size_t band_height() const { return ll.height(); }
  std::size_t band_width() const { return ll.width(); }
  /// Throws if the bands disagree with each other or with the source dims.
  void validate() const;
};

/// Rows first, then columns.
SubbandSet dwt2d(const Image& plane, const FilterBank& fb, BoundaryMode mode);
SubbandSet dwt2d(const Image& plane, const FilterBank& fb);

Image idwt2d(const SubbandSet& bands, const FilterBank& fb, BoundaryMode mode);
Image idwt2d(const SubbandSet& bands, const FilterBank& fb);

}  // namespace wavesr
