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

#include "wavesr/grid.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "wavesr/error.hpp"

namespace wavesr {

std::optional<std::size_t> extend_index(std::ptrdiff_t i, std::size_t n, BoundaryMode mode) {
  const auto sn = static_cast<std::ptrdiff_t>(n);
  if (i >= 0 && i < sn) return static_cast<std::size_t>(i);
  switch (mode) {
    case BoundaryMode::zero:
      return std::nullopt;
    case BoundaryMode::periodic: {
      std::ptrdiff_t p = i % sn;
      if (p < 0) p += sn;
      return static_cast<std::size_t>(p);
    }
    case BoundaryMode::symmetric: {
      const std::ptrdiff_t period = 2 * sn;
      std::ptrdiff_t p = i % period;
      if (p < 0) p += period;
      return static_cast<std::size_t>(p < sn ? p : period - 1 - p);
    }
  }
  return std::nullopt;
}

Image conv2d(const Image& src, const Kernel2D& k, BoundaryMode mode, std::size_t step) {
  require(src.is_plane(), "conv2d expects a single-channel plane");
  require(!src.empty(), "conv2d: empty source");
  require(step >= 1, "conv2d: step must be >= 1");
  // Extension reaches at most one extent past either edge.
  if ((k.rows - 1) / 2 > src.height() || k.rows / 2 > src.height() || (k.cols - 1) / 2 > src.width() ||
      k.cols / 2 > src.width())
    throw Error("kernel exceeds extent");

  const std::size_t out_h = (src.height() + step - 1) / step;
  const std::size_t out_w = (src.width() + step - 1) / step;
  const auto ar = static_cast<std::ptrdiff_t>((k.rows - 1) / 2);
  const auto ac = static_cast<std::ptrdiff_t>((k.cols - 1) / 2);

  // Column lookup is shared across rows.
  std::vector<std::optional<std::size_t>> col_idx(out_w * k.cols);
  for (std::size_t j = 0; j < out_w; ++j) {
    for (std::size_t b = 0; b < k.cols; ++b) {
      const auto x = static_cast<std::ptrdiff_t>(j * step + b) - ac;
      col_idx[j * k.cols + b] = extend_index(x, src.width(), mode);
    }
  }

  Image out(out_h, out_w, 1, src.range());
  for (std::size_t i = 0; i < out_h; ++i) {
    for (std::size_t j = 0; j < out_w; ++j) {
      double acc = 0.0;
      for (std::size_t a = 0; a < k.rows; ++a) {
        const auto y = extend_index(static_cast<std::ptrdiff_t>(i * step + a) - ar,
                                    src.height(), mode);
        if (!y) continue;
        for (std::size_t b = 0; b < k.cols; ++b) {
          const auto& x = col_idx[j * k.cols + b];
          if (x) acc += k(a, b) * src(*y, *x);
        }
      }
      out(i, j) = acc;
    }
  }
  return out;
}

Image dyadic_downsample(const Image& src, Axis axis) {
  require(src.is_plane(), "dyadic_downsample expects a plane");
  if (axis == Axis::rows) {
    require(src.height() % 2 == 0, "dyadic_downsample: odd extent along rows; pad first");
    Image out(src.height() / 2, src.width(), 1, src.range());
    for (std::size_t r = 0; r < out.height(); ++r)
      for (std::size_t c = 0; c < out.width(); ++c) out(r, c) = src(2 * r, c);
    return out;
  }
  require(src.width() % 2 == 0, "dyadic_downsample: odd extent along cols; pad first");
  Image out(src.height(), src.width() / 2, 1, src.range());
  for (std::size_t r = 0; r < out.height(); ++r)
    for (std::size_t c = 0; c < out.width(); ++c) out(r, c) = src(r, 2 * c);
  return out;
}

Image dyadic_upsample(const Image& src, Axis axis) {
  require(src.is_plane(), "dyadic_upsample expects a plane");
  if (axis == Axis::rows) {
    Image out(src.height() * 2, src.width(), 1, src.range());
    for (std::size_t r = 0; r < src.height(); ++r)
      for (std::size_t c = 0; c < src.width(); ++c) out(2 * r, c) = src(r, c);
    return out;
  }
  Image out(src.height(), src.width() * 2, 1, src.range());
  for (std::size_t r = 0; r < src.height(); ++r)
    for (std::size_t c = 0; c < src.width(); ++c) out(r, 2 * c) = src(r, c);
  return out;
}

double cubic_weight(double x) {
  constexpr double a = -0.5;
  const double t = std::abs(x);
  if (t <= 1.0) return ((a + 2.0) * t - (a + 3.0)) * t * t + 1.0;
  if (t < 2.0) return ((a * t - 5.0 * a) * t + 8.0 * a) * t - 4.0 * a;
  return 0.0;
}

namespace {

struct AxisTaps {
  std::array<std::size_t, 4> index;
  std::array<double, 4> weight;
};

std::vector<AxisTaps> axis_taps(std::size_t in_len, std::size_t out_len, double inv_scale) {
  std::vector<AxisTaps> taps(out_len);
  const auto last = static_cast<std::ptrdiff_t>(in_len) - 1;
  for (std::size_t x = 0; x < out_len; ++x) {
    const double xs = (static_cast<double>(x) + 0.5) * inv_scale - 0.5;
    const double base = std::floor(xs);
    for (int t = 0; t < 4; ++t) {
      const double pos = base - 1.0 + t;
      const auto idx = std::clamp(static_cast<std::ptrdiff_t>(pos), std::ptrdiff_t{0}, last);
      taps[x].index[t] = static_cast<std::size_t>(idx);
      taps[x].weight[t] = cubic_weight(xs - pos);
    }
  }
  return taps;
}

Image resize_impl(const Image& src, std::size_t out_h, std::size_t out_w, double inv_sy,
                  double inv_sx) {
  require(!src.empty(), "bicubic_resize: empty source");
  require(out_h > 0 && out_w > 0, "bicubic_resize: output dimension is 0");
  const auto rows = axis_taps(src.height(), out_h, inv_sy);
  const auto cols = axis_taps(src.width(), out_w, inv_sx);
  const std::size_t nc = src.channels();

  // Horizontal pass, then vertical.
  Image tmp(src.height(), out_w, nc, src.range());
  for (std::size_t r = 0; r < src.height(); ++r)
    for (std::size_t c = 0; c < out_w; ++c)
      for (std::size_t ch = 0; ch < nc; ++ch) {
        double acc = 0.0;
        for (int t = 0; t < 4; ++t) acc += cols[c].weight[t] * src(r, cols[c].index[t], ch);
        tmp(r, c, ch) = acc;
      }
  Image out(out_h, out_w, nc, src.range());
  for (std::size_t r = 0; r < out_h; ++r)
    for (std::size_t c = 0; c < out_w; ++c)
      for (std::size_t ch = 0; ch < nc; ++ch) {
        double acc = 0.0;
        for (int t = 0; t < 4; ++t) acc += rows[r].weight[t] * tmp(rows[r].index[t], c, ch);
        out(r, c, ch) = acc;
      }
  return out;
}

}  // namespace

Image bicubic_resize(const Image& src, double factor) {
  require(factor > 0.0 && std::isfinite(factor), "bicubic_resize: factor must be > 0");
  const auto out_h = static_cast<std::size_t>(std::llround(src.height() * factor));
  const auto out_w = static_cast<std::size_t>(std::llround(src.width() * factor));
  return resize_impl(src, out_h, out_w, 1.0 / factor, 1.0 / factor);
}

Image bicubic_resize_to(const Image& src, std::size_t height, std::size_t width) {
  require(height > 0 && width > 0, "bicubic_resize: output dimension is 0");
  return resize_impl(src, height, width, static_cast<double>(src.height()) / height,
                     static_cast<double>(src.width()) / width);
}

namespace {
constexpr double kr = 0.299;
constexpr double kg = 0.587;
constexpr double kb = 0.114;
constexpr double cb_scale = 2.0 * (1.0 - kb);
constexpr double cr_scale = 2.0 * (1.0 - kr);

double chroma_offset(double range) { return range * 128.0 / 255.0; }
}  // namespace

Image to_luma(const Image& rgb) {
  require(rgb.channels() == 3, "to_luma expects a 3-channel image");
  Image y(rgb.height(), rgb.width(), 1, rgb.range());
  for (std::size_t r = 0; r < rgb.height(); ++r)
    for (std::size_t c = 0; c < rgb.width(); ++c)
      y(r, c) = kr * rgb(r, c, 0) + kg * rgb(r, c, 1) + kb * rgb(r, c, 2);
  return y;
}

Chroma to_chroma(const Image& rgb) {
  require(rgb.channels() == 3, "to_chroma expects a 3-channel image");
  const double off = chroma_offset(rgb.range());
  Chroma out{Image(rgb.height(), rgb.width(), 1, rgb.range()),
             Image(rgb.height(), rgb.width(), 1, rgb.range())};
  for (std::size_t r = 0; r < rgb.height(); ++r)
    for (std::size_t c = 0; c < rgb.width(); ++c) {
      const double y = kr * rgb(r, c, 0) + kg * rgb(r, c, 1) + kb * rgb(r, c, 2);
      out.cb(r, c) = (rgb(r, c, 2) - y) / cb_scale + off;
      out.cr(r, c) = (rgb(r, c, 0) - y) / cr_scale + off;
    }
  return out;
}

Image from_luma(const Image& y, const Chroma& chroma) {
  require(y.is_plane() && chroma.cb.is_plane() && chroma.cr.is_plane(),
          "from_luma expects single-channel planes");
  require(y.height() == chroma.cb.height() && y.width() == chroma.cb.width() &&
              y.height() == chroma.cr.height() && y.width() == chroma.cr.width(),
          "from_luma: luma/chroma dims mismatch");
  const double off = chroma_offset(y.range());
  Image rgb(y.height(), y.width(), 3, y.range());
  for (std::size_t r = 0; r < y.height(); ++r)
    for (std::size_t c = 0; c < y.width(); ++c) {
      const double red = y(r, c) + cr_scale * (chroma.cr(r, c) - off);
      const double blue = y(r, c) + cb_scale * (chroma.cb(r, c) - off);
      rgb(r, c, 0) = red;
      rgb(r, c, 1) = (y(r, c) - kr * red - kb * blue) / kg;
      rgb(r, c, 2) = blue;
    }
  return rgb;
}

Image luma_plane(const Image& img) { return img.is_plane() ? img : to_luma(img); }

Image pad_symmetric(const Image& src, std::size_t height, std::size_t width) {
  require(!src.empty(), "pad_symmetric: empty source");
  require(height >= src.height() && width >= src.width(), "pad_symmetric: target smaller");
  Image out(height, width, src.channels(), src.range());
  for (std::size_t r = 0; r < height; ++r) {
    const auto sr = *extend_index(static_cast<std::ptrdiff_t>(r), src.height(),
                                  BoundaryMode::symmetric);
    for (std::size_t c = 0; c < width; ++c) {
      const auto sc = *extend_index(static_cast<std::ptrdiff_t>(c), src.width(),
                                    BoundaryMode::symmetric);
      for (std::size_t ch = 0; ch < src.channels(); ++ch) out(r, c, ch) = src(sr, sc, ch);
    }
  }
  return out;
}

Image crop(const Image& src, std::size_t top, std::size_t left, std::size_t height,
           std::size_t width) {
  require(top + height <= src.height() && left + width <= src.width(), "crop out of bounds");
  Image out(height, width, src.channels(), src.range());
  for (std::size_t r = 0; r < height; ++r)
    for (std::size_t c = 0; c < width; ++c)
      for (std::size_t ch = 0; ch < src.channels(); ++ch)
        out(r, c, ch) = src(top + r, left + c, ch);
  return out;
}

Image fit_to(const Image& src, std::size_t height, std::size_t width) {
  const Image grown = pad_symmetric(src, std::max(height, src.height()),
                                    std::max(width, src.width()));
  return crop(grown, 0, 0, height, width);
}

Image clamp(const Image& src, double lo, double hi) {
  Image out = src;
  for (double& v : out.data()) v = std::clamp(v, lo, hi);
  return out;
}

}  // namespace wavesr
