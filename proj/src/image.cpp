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

#include "wavesr/image.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavesr/error.hpp"

namespace wavesr {

Image::Image(std::size_t height, std::size_t width, std::size_t channels, double range)
    : height_(height), width_(width), channels_(channels), range_(range),
      data_(height * width * channels, 0.0) {
  require(channels == 1 || channels == 3, "image must have 1 or 3 channels");
  require(range > 0.0 && std::isfinite(range), "image range must be positive");
}

Image::Image(std::size_t height, std::size_t width, std::size_t channels, std::vector<double> data,
             double range)
    : height_(height), width_(width), channels_(channels), range_(range), data_(std::move(data)) {
  require(channels == 1 || channels == 3, "image must have 1 or 3 channels");
  require(range > 0.0 && std::isfinite(range), "image range must be positive");
  require(data_.size() == height * width * channels, "image data length does not match dims");
  check_finite();
}

Image Image::filled(std::size_t height, std::size_t width, double value, std::size_t channels,
                    double range) {
  Image img(height, width, channels, range);
  std::fill(img.data_.begin(), img.data_.end(), value);
  return img;
}

void Image::set_range(double range) {
  require(range > 0.0 && std::isfinite(range), "image range must be positive");
  range_ = range;
}

Image Image::channel(std::size_t ch) const {
  require(ch < channels_, "channel index out of range");
  Image out(height_, width_, 1, range_);
  for (std::size_t i = 0; i < height_ * width_; ++i) out.data_[i] = data_[i * channels_ + ch];
  return out;
}

void Image::set_channel(std::size_t ch, const Image& plane) {
  require(ch < channels_, "channel index out of range");
  require(plane.is_plane() && plane.height_ == height_ && plane.width_ == width_,
          "channel plane dims mismatch");
  for (std::size_t i = 0; i < height_ * width_; ++i) data_[i * channels_ + ch] = plane.data_[i];
}

void Image::check_finite() const {
  for (std::size_t i = 0; i < data_.size(); ++i) {
    if (!std::isfinite(data_[i])) {
      throw Error("non-finite sample at flat index " + std::to_string(i));
    }
  }
}

Kernel2D::Kernel2D(std::size_t rows_, std::size_t cols_, std::vector<double> taps_)
    : rows(rows_), cols(cols_), taps(std::move(taps_)) {
  require(rows > 0 && cols > 0, "kernel must be non-empty");
  require(taps.size() == rows * cols, "kernel taps length does not match dims");
  for (double t : taps) require(std::isfinite(t), "kernel taps must be finite");
}

double Kernel2D::sum() const {
  double s = 0.0;
  for (double t : taps) s += t;
  return s;
}

const char* to_string(BoundaryMode mode) {
  switch (mode) {
    case BoundaryMode::periodic: return "periodic";
    case BoundaryMode::symmetric: return "symmetric";
    case BoundaryMode::zero: return "zero";
  }
  return "?";
}

BoundaryMode boundary_mode_from_string(std::string_view name) {
  if (name == "periodic") return BoundaryMode::periodic;
  if (name == "symmetric") return BoundaryMode::symmetric;
  if (name == "zero") return BoundaryMode::zero;
  throw Error("unknown boundary mode '" + std::string(name) + "'");
}

double max_abs_diff(const Image& a, const Image& b) {
  require(a.same_shape(b), "max_abs_diff: shape mismatch");
  double m = 0.0;
  auto da = a.data();
  auto db = b.data();
  for (std::size_t i = 0; i < da.size(); ++i) m = std::max(m, std::abs(da[i] - db[i]));
  return m;
}

}  // namespace wavesr
