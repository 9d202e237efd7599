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

#include "wavesr/tensor.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "wavesr/error.hpp"

namespace wavesr {

Tensor4::Tensor4(std::size_t n, std::size_t c, std::size_t h, std::size_t w, double fill)
    : batch(n), channels(c), height(h), width(w), data(n * c * h * w, fill) {}

Tensor4::Tensor4(std::size_t n, std::size_t c, std::size_t h, std::size_t w, std::vector<double> values)
    : batch(n), channels(c), height(h), width(w), data(std::move(values)) {
  require(data.size() == n * c * h * w, "tensor data length does not match dims");
  check_finite();
}

void Tensor4::check_finite() const {
  for (std::size_t i = 0; i < data.size(); ++i)
    if (!std::isfinite(data[i])) throw Error("non-finite tensor value at index " + std::to_string(i));
}

Tensor4 stack_batch(const std::vector<const Tensor4*>& items) {
  require(!items.empty(), "stack_batch: no items");
  const Tensor4& first = *items.front();
  Tensor4 out(0, first.channels, first.height, first.width);
  for (const Tensor4* t : items) {
    require(t->channels == first.channels && t->height == first.height && t->width == first.width,
            "stack_batch: shape mismatch");
    out.data.insert(out.data.end(), t->data.begin(), t->data.end());
    out.batch += t->batch;
  }
  return out;
}

Tensor4 batch_item(const Tensor4& t, std::size_t n) {
  require(n < t.batch, "batch_item: index out of range");
  Tensor4 out(1, t.channels, t.height, t.width);
  const auto begin = t.data.begin() + static_cast<std::ptrdiff_t>(n * t.item_size());
  std::copy(begin, begin + static_cast<std::ptrdiff_t>(t.item_size()), out.data.begin());
  return out;
}

Tensor4 select_channels(const Tensor4& t, const std::vector<std::size_t>& channels) {
  Tensor4 out(t.batch, channels.size(), t.height, t.width);
  for (std::size_t n = 0; n < t.batch; ++n)
    for (std::size_t k = 0; k < channels.size(); ++k) {
      require(channels[k] < t.channels, "select_channels: channel out of range");
      std::copy_n(t.plane(n, channels[k]), t.plane_size(), out.plane(n, k));
    }
  return out;
}

}  // namespace wavesr
