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

#include <string>

#include "wavesr/image.hpp"

namespace wavesr::detail {

/// Luma planes of a reference/test pair after shape checks.
struct PlanePair {
  Image ref;
  Image test;
};

PlanePair luma_pair(const Image& x, const Image& xhat, const char* metric);

/// Scharr gradient magnitude with zero padding ("same" size).
Image scharr_magnitude(const Image& plane);

/// Integer factor that brings the shorter side near 256, as the reference
/// FSIM / SR-SIM implementations do.
std::size_t resolution_factor(const Image& plane);

/// Box-average by `factor` then keep every factor-th sample.
Image average_downsample(const Image& plane, std::size_t factor);

}  // namespace wavesr::detail
