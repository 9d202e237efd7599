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

// Shared fixtures and brute-force reference implementations. The oracles are
// deliberately naive and written independently of the library code.

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "wavesr/grid.hpp"
#include "wavesr/image.hpp"
#include "wavesr/io.hpp"
#include "wavesr/nn.hpp"

namespace testing_support {

using wavesr::Image;

inline Image random_plane(std::size_t h, std::size_t w, std::uint64_t seed, double lo = 0.0,
                          double hi = 255.0) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(lo, hi);
  Image p(h, w);
  for (double& v : p.data()) v = d(rng);
  return p;
}

inline Image random_image(std::size_t h, std::size_t w, std::size_t ch, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> d(0.0, 255.0);
  Image p(h, w, ch);
  for (double& v : p.data()) v = d(rng);
  return p;
}

inline Image random_bytes(std::size_t h, std::size_t w, std::size_t ch, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Image p(h, w, ch);
  for (double& v : p.data()) v = static_cast<double>(rng() % 256);
  return p;
}

/// Fixed unit-variance Gaussian field; callers scale it by sigma.
inline Image gaussian_field(std::size_t h, std::size_t w, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(0.0, 1.0);
  Image p(h, w);
  for (double& v : p.data()) v = d(rng);
  return p;
}

inline Image add_scaled(const Image& a, const Image& noise, double sigma) {
  Image out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] += sigma * noise.data()[i];
  return out;
}

inline std::string data_path(const std::string& rel) { return std::string(WAVESR_TEST_DATA) + "/" + rel; }

/// Luma of a bundled natural test image.
inline Image natural_plane(const std::string& name = "test/astronaut.png") {
  return wavesr::luma_plane(wavesr::load_image(data_path(name)));
}

// --- oracles ------------------------------------------------------------------

inline long reflect_index(long i, long n, wavesr::BoundaryMode mode, bool& inside) {
  inside = true;
  if (i >= 0 && i < n) return i;
  switch (mode) {
    case wavesr::BoundaryMode::zero:
      inside = false;
      return 0;
    case wavesr::BoundaryMode::periodic:
      return ((i % n) + n) % n;
    case wavesr::BoundaryMode::symmetric:
      while (i < 0 || i >= n) i = i < 0 ? -i - 1 : 2 * n - i - 1;
      return i;
  }
  return 0;
}

inline Image conv2d_oracle(const Image& src, const wavesr::Kernel2D& k, wavesr::BoundaryMode mode,
                           std::size_t step) {
  const long h = static_cast<long>(src.height());
  const long w = static_cast<long>(src.width());
  const long ar = (static_cast<long>(k.rows) - 1) / 2;
  const long ac = (static_cast<long>(k.cols) - 1) / 2;
  const long oh = (h + static_cast<long>(step) - 1) / static_cast<long>(step);
  const long ow = (w + static_cast<long>(step) - 1) / static_cast<long>(step);
  Image out(static_cast<std::size_t>(oh), static_cast<std::size_t>(ow));
  for (long i = 0; i < oh; ++i)
    for (long j = 0; j < ow; ++j) {
      double acc = 0.0;
      for (long a = 0; a < static_cast<long>(k.rows); ++a)
        for (long b = 0; b < static_cast<long>(k.cols); ++b) {
          bool in_r = true;
          bool in_c = true;
          const long y = reflect_index(i * static_cast<long>(step) + a - ar, h, mode, in_r);
          const long x = reflect_index(j * static_cast<long>(step) + b - ac, w, mode, in_c);
          if (in_r && in_c) acc += k(static_cast<std::size_t>(a), static_cast<std::size_t>(b)) *
                                   src(static_cast<std::size_t>(y), static_cast<std::size_t>(x));
        }
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = acc;
    }
  return out;
}

inline double mse_oracle(const Image& x, const Image& y) {
  double s = 0.0;
  for (std::size_t r = 0; r < x.height(); ++r)
    for (std::size_t c = 0; c < x.width(); ++c)
      for (std::size_t ch = 0; ch < x.channels(); ++ch) {
        const double d = x(r, c, ch) - y(r, c, ch);
        s += d * d;
      }
  return s / static_cast<double>(x.height() * x.width() * x.channels());
}

inline double psnr_oracle(const Image& x, const Image& y) {
  const double e = mse_oracle(x, y);
  return 10.0 * std::log10(x.range() * x.range() / e);
}

/// Gaussian-weighted SSIM of the n x n window at (r0, c0), via raw second
/// moments E[xy] - E[x]E[y].
inline double ssim_window_oracle(const Image& x, const Image& y, std::size_t r0, std::size_t c0,
                                 std::size_t n = 11, double sigma = 1.5) {
  std::vector<double> w(n * n);
  double total = 0.0;
  const double ctr = (static_cast<double>(n) - 1.0) / 2.0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const double da = static_cast<double>(a) - ctr;
      const double db = static_cast<double>(b) - ctr;
      w[a * n + b] = std::exp(-(da * da + db * db) / (2.0 * sigma * sigma));
      total += w[a * n + b];
    }
  double mx = 0, my = 0, exx = 0, eyy = 0, exy = 0;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      const double wt = w[a * n + b] / total;
      const double xv = x(r0 + a, c0 + b);
      const double yv = y(r0 + a, c0 + b);
      mx += wt * xv;
      my += wt * yv;
      exx += wt * xv * xv;
      eyy += wt * yv * yv;
      exy += wt * xv * yv;
    }
  const double m = x.range();
  const double c1 = (0.01 * m) * (0.01 * m);
  const double c2 = (0.03 * m) * (0.03 * m);
  const double vx = exx - mx * mx;
  const double vy = eyy - my * my;
  const double cxy = exy - mx * my;
  return ((2 * mx * my + c1) * (2 * cxy + c2)) / ((mx * mx + my * my + c1) * (vx + vy + c2));
}

inline double mssim_oracle(const Image& x, const Image& y, std::size_t n = 11) {
  double s = 0.0;
  std::size_t count = 0;
  for (std::size_t r = 0; r + n <= x.height(); ++r)
    for (std::size_t c = 0; c + n <= x.width(); ++c) {
      s += ssim_window_oracle(x, y, r, c, n);
      ++count;
    }
  return s / static_cast<double>(count);
}

/// The four directional 5x5 gradient kernels, written out row by row.
inline const double kGsmKernels[4][5][5] = {
    {{0, 0, 0, 0, 0}, {1, 3, 8, 3, 1}, {0, 0, 0, 0, 0}, {-1, -3, -8, -3, -1}, {0, 0, 0, 0, 0}},
    {{0, 0, 1, 0, 0}, {0, 8, 3, 0, 0}, {1, 3, 0, -3, -1}, {0, 0, -3, -8, 0}, {0, 0, -1, 0, 0}},
    {{0, 0, 1, 0, 0}, {0, 0, 3, 8, 0}, {-1, -3, 0, 3, 1}, {0, -8, -3, 0, 0}, {0, 0, -1, 0, 0}},
    {{0, 1, 0, -1, 0}, {0, 3, 0, -3, 0}, {0, 8, 0, -8, 0}, {0, 3, 0, -3, 0}, {0, 1, 0, -1, 0}},
};

inline double gsm_oracle(const Image& x, const Image& y) {
  const double m = x.range();
  const double c = 1e-4 * m * m;
  auto grad = [](const Image& p, std::size_t r, std::size_t cc) {
    double g = 0.0;
    for (const auto& k : kGsmKernels) {
      double s = 0.0;
      for (int a = 0; a < 5; ++a)
        for (int b = 0; b < 5; ++b) s += p(r + a, cc + b) * k[a][b];
      g = std::max(g, std::fabs(s / 25.0));
    }
    return g;
  };
  double total = 0.0;
  std::size_t count = 0;
  for (std::size_t r = 0; r + 5 <= x.height(); ++r)
    for (std::size_t cc = 0; cc + 5 <= x.width(); ++cc) {
      const double gr = grad(x, r, cc);
      const double gc = grad(y, r, cc);
      const double d = (gr == 0.0 && gc == 0.0) ? 0.0 : std::fabs(gr - gc) / std::max(gr, gc);
      total += (2.0 * (1.0 - d) + c) / (1.0 + (1.0 - d) * (1.0 - d) + c);
      ++count;
    }
  return total / static_cast<double>(count);
}

/// Direct zero-padded 3x3 convolution (correlation), one output at a time.
inline wavesr::Tensor4 conv_oracle(const wavesr::Tensor4& x, const wavesr::ConvLayer& l) {
  wavesr::Tensor4 y(x.batch, l.out_channels(), x.height, x.width);
  for (std::size_t n = 0; n < x.batch; ++n)
    for (std::size_t o = 0; o < l.out_channels(); ++o)
      for (std::size_t r = 0; r < x.height; ++r)
        for (std::size_t c = 0; c < x.width; ++c) {
          double acc = l.bias[o];
          for (std::size_t i = 0; i < x.channels; ++i)
            for (int ky = 0; ky < 3; ++ky)
              for (int kx = 0; kx < 3; ++kx) {
                const long yy = static_cast<long>(r) + ky - 1;
                const long xx = static_cast<long>(c) + kx - 1;
                if (yy < 0 || xx < 0 || yy >= static_cast<long>(x.height) || xx >= static_cast<long>(x.width))
                  continue;
                acc += l.weights.at(o, i, static_cast<std::size_t>(ky), static_cast<std::size_t>(kx)) *
                       x.at(n, i, static_cast<std::size_t>(yy), static_cast<std::size_t>(xx));
              }
          y.at(n, o, r, c) = (l.activation == wavesr::Activation::relu && acc < 0.0) ? 0.0 : acc;
        }
  return y;
}

inline wavesr::Tensor4 random_tensor(std::size_t n, std::size_t c, std::size_t h, std::size_t w,
                                     std::uint64_t seed, double scale = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> d(0.0, scale);
  wavesr::Tensor4 t(n, c, h, w);
  for (double& v : t.data) v = d(rng);
  return t;
}

}  // namespace testing_support
