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

#include "fft.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <mutex>

#include "wavesr/error.hpp"

namespace wavesr::detail {

namespace {

// FFTW planning is not thread-safe; execution on distinct arrays is.
std::mutex& planner_mutex() {
  static std::mutex mu;
  return mu;
}

struct FftwBuffer {
  explicit FftwBuffer(std::size_t n) : ptr(fftw_alloc_complex(n)) {
    require(ptr != nullptr, "fft2: allocation failed");
  }
  ~FftwBuffer() { fftw_free(ptr); }
  FftwBuffer(const FftwBuffer&) = delete;
  FftwBuffer& operator=(const FftwBuffer&) = delete;
  fftw_complex* ptr;
};

ComplexPlane transform(const ComplexPlane& in, int sign) {
  require(in.rows > 0 && in.cols > 0, "fft2: empty plane");
  static_assert(sizeof(Complex) == sizeof(fftw_complex));
  // FFTW picks SIMD codelets by array alignment. Always running on
  // fftw_malloc buffers keeps results independent of where the caller's
  // vectors happen to live.
  const std::size_t n = in.rows * in.cols;
  FftwBuffer src(n);
  FftwBuffer dst(n);
  std::memcpy(src.ptr, in.data.data(), n * sizeof(fftw_complex));
  fftw_plan plan;
  {
    std::lock_guard lock(planner_mutex());
    plan = fftw_plan_dft_2d(static_cast<int>(in.rows), static_cast<int>(in.cols), src.ptr, dst.ptr, sign,
                            FFTW_ESTIMATE);
  }
  require(plan != nullptr, "fft2: planning failed");
  fftw_execute(plan);
  {
    std::lock_guard lock(planner_mutex());
    fftw_destroy_plan(plan);
  }
  ComplexPlane out(in.rows, in.cols);
  std::memcpy(out.data.data(), dst.ptr, n * sizeof(fftw_complex));
  return out;
}

}  // namespace

ComplexPlane to_complex(const Image& plane) {
  require(plane.is_plane(), "to_complex expects a plane");
  ComplexPlane out(plane.height(), plane.width());
  auto d = plane.data();
  for (std::size_t i = 0; i < d.size(); ++i) out.data[i] = Complex(d[i], 0.0);
  return out;
}

ComplexPlane fft2(const ComplexPlane& in) { return transform(in, FFTW_FORWARD); }

ComplexPlane ifft2(const ComplexPlane& in) {
  ComplexPlane out = transform(in, FFTW_BACKWARD);
  const double scale = 1.0 / static_cast<double>(in.rows * in.cols);
  for (auto& v : out.data) v *= scale;
  return out;
}

namespace {
std::vector<double> axis_frequencies(std::size_t n) {
  // Shifted range first, then ifftshift.
  std::vector<double> shifted(n);
  if (n % 2 == 1) {
    const double half = (static_cast<double>(n) - 1.0) / 2.0;
    for (std::size_t i = 0; i < n; ++i)
      shifted[i] = n > 1 ? (static_cast<double>(i) - half) / (static_cast<double>(n) - 1.0) : 0.0;
  } else {
    for (std::size_t i = 0; i < n; ++i)
      shifted[i] = (static_cast<double>(i) - static_cast<double>(n) / 2.0) / static_cast<double>(n);
  }
  std::vector<double> out(n);
  const std::size_t shift = n / 2;  // ifftshift moves index (i + n/2) % n to i
  for (std::size_t i = 0; i < n; ++i) out[i] = shifted[(i + shift) % n];
  return out;
}
}  // namespace

double FrequencyGrid::radius(std::size_t r, std::size_t c) const {
  return std::hypot(fx[c], fy[r]);
}

double FrequencyGrid::theta(std::size_t r, std::size_t c) const { return std::atan2(-fy[r], fx[c]); }

FrequencyGrid frequency_grid(std::size_t rows, std::size_t cols) {
  return FrequencyGrid{rows, cols, axis_frequencies(cols), axis_frequencies(rows)};
}

}  // namespace wavesr::detail
