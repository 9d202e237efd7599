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
#include <optional>

#include "wavesr/image.hpp"

namespace wavesr {

/// Maps a possibly out-of-range index onto [0, n) per `mode`.
///
/// Symmetric is half-sample reflection (x1 x0 | x0 x1 ...). Zero mode returns
/// nullopt for indices outside the plane.
std::optional<std::size_t> extend_index(std::ptrdiff_t i, std::size_t n, BoundaryMode mode);

/// 2D correlation (the kernel is not flipped):
///
///   out(i, j) = sum_{a,b} k(a, b) * src(i*step + a - ar, j*step + b - ac)
///
/// with anchor (ar, ac) = ((rows-1)/2, (cols-1)/2). Output dims are
/// ceil(src / step). Boundary samples come from `mode`; the extension reaches
/// at most one extent, so a kernel reaching further than that is rejected.
Image conv2d(const Image& src, const Kernel2D& k, BoundaryMode mode, std::size_t step = 1);

/// Keeps even-indexed samples along `axis`. The extent must be even.
Image dyadic_downsample(const Image& src, Axis axis);

/// Inserts a zero after every sample along `axis`.
Image dyadic_upsample(const Image& src, Axis axis);

/// Keys cubic kernel with a = -0.5 (Catmull-Rom).
double cubic_weight(double x);

/// Resizes by `factor`; output dims are round(src dims * factor).
///
/// Pixel centres map as x_src = (x_dst + 0.5) / factor - 0.5 and edges
/// replicate. No antialiasing prefilter is applied when shrinking.
Image bicubic_resize(const Image& src, double factor);

/// Resizes to explicit dims with per-axis scale = out / in.
Image bicubic_resize_to(const Image& src, std::size_t height, std::size_t width);

/// Chroma planes of a BT.601 full-range YCbCr split, centred on range*128/255.
struct Chroma {
  Image cb;
  Image cr;
};

Image to_luma(const Image& rgb);
Chroma to_chroma(const Image& rgb);
Image from_luma(const Image& y, const Chroma& chroma);

/// Luma of a colour image, or the plane itself.
Image luma_plane(const Image& img);

/// Grows an image to (height, width) by half-sample reflection at the bottom
/// and right edges.
Image pad_symmetric(const Image& src, std::size_t height, std::size_t width);

Image crop(const Image& src, std::size_t top, std::size_t left, std::size_t height,
           std::size_t width);

/// Crops or reflect-pads at the bottom/right edges to exactly (height, width).
Image fit_to(const Image& src, std::size_t height, std::size_t width);

Image clamp(const Image& src, double lo, double hi);

}  // namespace wavesr
