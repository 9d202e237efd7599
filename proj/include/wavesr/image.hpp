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

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace wavesr {

/// Dense row-major image with interleaved channels (1 or 3).
///
/// Samples are doubles. `range` is the nominal maximum signal value used by
/// PSNR and the SSIM stabilisers; 8-bit files load with range 255. A
/// single-channel image is referred to as a plane throughout the library.
class Image {
 public:
  Image() = default;
  Image(std::size_t height, std::size_t width, std::size_t channels = 1, double range = 255.0);
  /// Throws if `data.size() != height * width * channels` or any sample is not finite.
  Image(std::size_t height, std::size_t width, std::size_t channels, std::vector<double> data,
        double range = 255.0);

  static Image filled(std::size_t height, std::size_t width, double value,
                      std::size_t channels = 1, double range = 255.0);

  std::size_t height() const { return height_; }
  std::size_t width() const { return width_; }
  std::size_t channels() const { return channels_; }
  std::size_t size() const { return data_.size(); }
  bool empty() const { return data_.empty(); }
  bool is_plane() const { return channels_ == 1; }
  bool same_shape(const Image& o) const {
    return height_ == o.height_ && width_ == o.width_ && channels_ == o.channels_;
  }

  double range() const { return range_; }
  void set_range(double range);

  double& operator()(std::size_t r, std::size_t c, std::size_t ch = 0) {
    return data_[(r * width_ + c) * channels_ + ch];
  }
  double operator()(std::size_t r, std::size_t c, std::size_t ch = 0) const {
    return data_[(r * width_ + c) * channels_ + ch];
  }

  std::span<double> data() { return data_; }
  std::span<const double> data() const { return data_; }

  Image channel(std::size_t ch) const;
  void set_channel(std::size_t ch, const Image& plane);

  /// Throws wavesr::Error naming the first non-finite sample.
  void check_finite() const;

  friend bool operator==(const Image& a, const Image& b) {
    return a.same_shape(b) && a.data_ == b.data_;
  }

 private:
  std::size_t height_ = 0;
  std::size_t width_ = 0;
  std::size_t channels_ = 1;
  double range_ = 255.0;
  std::vector<double> data_;
};

/// Correlation kernel; `taps` is row-major.
struct Kernel2D {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<double> taps;

  Kernel2D() = default;
  Kernel2D(std::size_t rows, std::size_t cols, std::vector<double> taps);

  double operator()(std::size_t r, std::size_t c) const { return taps[r * cols + c]; }
  double sum() const;
};

enum class BoundaryMode { periodic, symmetric, zero };

enum class Axis { rows, cols };

const char* to_string(BoundaryMode mode);
BoundaryMode boundary_mode_from_string(std::string_view name);

/// Max |a - b| over all samples; shapes must match.
double max_abs_diff(const Image& a, const Image& b);

}  // namespace wavesr
