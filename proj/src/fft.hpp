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

#include <complex>
#include <cstddef>
#include <vector>

#include "wavesr/image.hpp"

namespace wavesr::detail {

using Complex = std::complex<double>;

struct ComplexPlane {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Complex> data;

  ComplexPlane() = default;
  ComplexPlane(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}
  Complex& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  Complex operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }
};

ComplexPlane to_complex(const Image& plane);

/// Unnormalised forward 2D DFT.
ComplexPlane fft2(const ComplexPlane& in);
/// Inverse 2D DFT including the 1/(rows*cols) factor.
ComplexPlane ifft2(const ComplexPlane& in);

/// Frequency grids in cycles/sample laid out in unshifted FFT order, matching
/// the usual "ifftshift(meshgrid(range))" construction.
struct FrequencyGrid {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> fx;  // horizontal
  std::vector<double> fy;  // vertical
  double radius(std::size_t r, std::size_t c) const;
  /// atan2(-fy, fx), the orientation convention of log-Gabor banks.
  double theta(std::size_t r, std::size_t c) const;
};

FrequencyGrid frequency_grid(std::size_t rows, std::size_t cols);

}  // namespace wavesr::detail
