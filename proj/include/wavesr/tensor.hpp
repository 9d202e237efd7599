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
#include <vector>

namespace wavesr {

/// Dense NCHW tensor of doubles.
struct Tensor4 {
  std::size_t batch = 0;
  std::size_t channels = 0;
  std::size_t height = 0;
  std::size_t width = 0;
  std::vector<double> data;

  Tensor4() = default;
  Tensor4(std::size_t n, std::size_t c, std::size_t h, std::size_t w, double fill = 0.0);
  /// Throws if `values.size()` disagrees with the dims or a value is not finite.
  Tensor4(std::size_t n, std::size_t c, std::size_t h, std::size_t w, std::vector<double> values);

  std::size_t size() const { return data.size(); }
  std::size_t plane_size() const { return height * width; }
  std::size_t item_size() const { return channels * height * width; }
  bool same_shape(const Tensor4& o) const {
    return batch == o.batch && channels == o.channels && height == o.height && width == o.width;
  }

  double& at(std::size_t n, std::size_t c, std::size_t h, std::size_t w) {
    return data[((n * channels + c) * height + h) * width + w];
  }
  double at(std::size_t n, std::size_t c, std::size_t h, std::size_t w) const {
    return data[((n * channels + c) * height + h) * width + w];
  }
  double* plane(std::size_t n, std::size_t c) { return data.data() + (n * channels + c) * plane_size(); }
  const double* plane(std::size_t n, std::size_t c) const {
    return data.data() + (n * channels + c) * plane_size();
  }

  void check_finite() const;
};

/// Concatenate along the batch axis; all items must share C, H, W.
Tensor4 stack_batch(const std::vector<const Tensor4*>& items);

/// Item `n` as a batch-1 tensor.
Tensor4 batch_item(const Tensor4& t, std::size_t n);

/// Keep the listed channels, in order.
Tensor4 select_channels(const Tensor4& t, const std::vector<std::size_t>& channels);

}  // namespace wavesr
