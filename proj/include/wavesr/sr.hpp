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

#include <cstdint>
#include <string>

#include "wavesr/image.hpp"
#include "wavesr/nn.hpp"

namespace wavesr {

/// Band layout the network sees: single-level 2D DWT (4 bands, ordered
/// LL, LH, HL, HH) or GHM (16 bands).
struct SrTransform {
  enum class Kind { single, ghm };

  Kind kind = Kind::single;
  std::string wavelet = "haar";  ///< single-level only

  static SrTransform single(std::string wavelet);
  static SrTransform ghm();

  std::size_t band_count() const { return kind == Kind::single ? 4 : 16; }
  /// Detail bands for single-level; all 16 (or the 12 detail bands when
  /// `detail_only`) for GHM.
  std::vector<std::size_t> residual_channels(bool detail_only = false) const;
  /// "haar", "bior2.6", ... or "ghm".
  std::string name() const;

  /// Plane (already scaled) to a 1 x bands x h x w tensor.
  Tensor4 decompose(const Image& plane) const;
  /// Inverse of decompose for a source of the given dims.
  Image reconstruct(const Tensor4& bands, std::size_t height, std::size_t width) const;
};

struct SrModel {
  SrTransform transform;
  Network net;
  double scale = 2.0;
  std::uint64_t seed = 1;
};

struct NetworkShape {
  std::size_t depth = Network::kDefaultDepth;
  std::size_t width = Network::kDefaultWidth;
  bool ghm_detail_only = false;
};

SrModel make_model(const SrTransform& transform, std::uint64_t seed, const NetworkShape& shape = {},
                   double scale = 2.0);

/// Training pair from an upscaled plane and its ground truth. Samples are
/// divided by the plane range before decomposition.
TrainingPair make_training_pair(const Image& upscaled, const Image& truth, const SrTransform& transform);

/// Refine an already-upscaled image: decompose the luma, add the predicted
/// residuals, reconstruct, clamp to [0, range]. Chroma passes through.
Image enhance(const Image& upscaled, const SrModel& model);

/// Bicubic upscale by model.scale to (height, width), then enhance. Zero
/// height/width means round(scale * input dims).
Image predict_sr(const Image& lr, const SrModel& model, std::size_t height = 0, std::size_t width = 0);

/// The baseline predict_sr improves on: bicubic to (height, width), clamped.
Image bicubic_baseline(const Image& lr, double scale, std::size_t height = 0, std::size_t width = 0);

}  // namespace wavesr
