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

#include <gtest/gtest.h>

#include <cmath>

#include "support.hpp"
#include "wavesr/error.hpp"
#include "wavesr/grid.hpp"

using namespace wavesr;
using testing_support::random_plane;

TEST(Image, RejectsBadData) {
  EXPECT_THROW(Image(2, 2, 1, std::vector<double>(3, 0.0)), Error);
  EXPECT_THROW(Image(1, 1, 1, std::vector<double>{NAN}), Error);
  EXPECT_THROW(Image(1, 1, 1, std::vector<double>{INFINITY}), Error);
  EXPECT_NO_THROW(Image(1, 2, 3, std::vector<double>(6, 1.0)));
}

TEST(Image, ChannelRoundTrip) {
  const Image rgb = testing_support::random_image(4, 5, 3, 3);
  Image copy(4, 5, 3);
  for (std::size_t c = 0; c < 3; ++c) copy.set_channel(c, rgb.channel(c));
  EXPECT_EQ(copy, rgb);
}

TEST(Conv2d, IdentityKernel) {
  const Image p = random_plane(5, 7, 1);
  for (auto mode : {BoundaryMode::periodic, BoundaryMode::symmetric, BoundaryMode::zero})
    EXPECT_EQ(conv2d(p, Kernel2D(1, 1, {1.0}), mode), p);
}

TEST(Conv2d, ConstantPlanePeriodic) {
  const Image p = Image::filled(6, 6, 3.0);
  const Kernel2D k(3, 3, {1, 2, 3, 4, 5, 6, 7, 8, 9});
  const Image out = conv2d(p, k, BoundaryMode::periodic);
  for (double v : out.data()) EXPECT_NEAR(v, 3.0 * 45.0, 1e-12);
}

TEST(Conv2d, MatchesLoopOracleExhaustively) {
  std::uint64_t seed = 10;
  for (std::size_t n = 3; n <= 8; ++n)
    for (std::size_t kr = 1; kr <= 4; ++kr)
      for (std::size_t kc = 1; kc <= 4; ++kc)
        for (auto mode : {BoundaryMode::periodic, BoundaryMode::symmetric, BoundaryMode::zero})
          for (std::size_t step : {1, 2}) {
            const Image p = random_plane(n, n + 1, ++seed, -1.0, 1.0);
            const Image kp = random_plane(kr, kc, ++seed, -1.0, 1.0);
            const Kernel2D k(kr, kc, std::vector<double>(kp.data().begin(), kp.data().end()));
            const Image got = conv2d(p, k, mode, step);
            const Image want = testing_support::conv2d_oracle(p, k, mode, step);
            ASSERT_TRUE(got.same_shape(want));
            EXPECT_LE(max_abs_diff(got, want), 1e-14) << n << " " << kr << "x" << kc << " " << to_string(mode);
          }
}

TEST(Conv2d, Linearity) {
  const Image a = random_plane(9, 7, 1, -1, 1);
  const Image b = random_plane(9, 7, 2, -1, 1);
  const Kernel2D k(3, 2, {0.3, -0.1, 0.7, 0.2, -0.5, 0.9});
  Image mix = a;
  for (std::size_t i = 0; i < mix.size(); ++i) mix.data()[i] = 2.5 * a.data()[i] - 1.5 * b.data()[i];
  for (auto mode : {BoundaryMode::periodic, BoundaryMode::symmetric, BoundaryMode::zero}) {
    const Image ca = conv2d(a, k, mode);
    const Image cb = conv2d(b, k, mode);
    const Image cm = conv2d(mix, k, mode);
    for (std::size_t i = 0; i < cm.size(); ++i)
      EXPECT_NEAR(cm.data()[i], 2.5 * ca.data()[i] - 1.5 * cb.data()[i], 1e-9);
  }
}

TEST(Conv2d, KernelBeyondOneExtent) {
  const Image p = random_plane(3, 3, 1);
  try {
    conv2d(p, Kernel2D(9, 1, std::vector<double>(9, 1.0)), BoundaryMode::periodic);
    FAIL();
  } catch (const Error& e) {
    EXPECT_STREQ(e.what(), "kernel exceeds extent");
  }
}

TEST(Conv2d, OutputDimsWithStride) {
  const Image out = conv2d(random_plane(7, 10, 1), Kernel2D(1, 1, {1.0}), BoundaryMode::zero, 3);
  EXPECT_EQ(out.height(), 3u);
  EXPECT_EQ(out.width(), 4u);
}

TEST(Dyadic, DownsampleKeepsEven) {
  const Image p(4, 1, 1, {1, 2, 3, 4});
  const Image d = dyadic_downsample(p, Axis::rows);
  EXPECT_EQ(d, Image(2, 1, 1, {1, 3}));
  EXPECT_THROW(dyadic_downsample(Image(3, 2), Axis::rows), Error);
}

TEST(Dyadic, DownsampleRampOracle) {
  Image ramp(6, 6);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 6; ++c) ramp(r, c) = 10.0 * r + c;
  const Image d = dyadic_downsample(ramp, Axis::cols);
  ASSERT_EQ(d.width(), 3u);
  for (std::size_t r = 0; r < 6; ++r)
    for (std::size_t c = 0; c < 3; ++c) EXPECT_EQ(d(r, c), 10.0 * r + 2.0 * c);
}

TEST(Dyadic, UpsampleInsertsZeros) {
  const Image p(1, 2, 1, {5, 7});
  EXPECT_EQ(dyadic_upsample(p, Axis::cols), Image(1, 4, 1, {5, 0, 7, 0}));
  const Image z = dyadic_upsample(Image(2, 3), Axis::rows);
  EXPECT_EQ(z, Image(4, 3));
}

TEST(Dyadic, RoundTripIsIdentity) {
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Image p = random_plane(3 + s, 5, s);
    EXPECT_EQ(dyadic_downsample(dyadic_upsample(p, Axis::rows), Axis::rows), p);
    EXPECT_EQ(dyadic_downsample(dyadic_upsample(p, Axis::cols), Axis::cols), p);
  }
}

TEST(Bicubic, IdentityFactor) {
  const Image p = random_plane(9, 11, 4);
  EXPECT_LE(max_abs_diff(bicubic_resize(p, 1.0), p), 1e-9);
}

TEST(Bicubic, PreservesConstants) {
  const Image p = Image::filled(8, 6, 7.0);
  for (double f : {0.5, 2.0, 3.0, 1.7}) {
    const Image out = bicubic_resize(p, f);
    for (double v : out.data()) EXPECT_NEAR(v, 7.0, 1e-12);
  }
}

TEST(Bicubic, OutputDims) {
  const Image out = bicubic_resize(random_plane(7, 9, 1), 1.5);
  EXPECT_EQ(out.height(), 11u);  // round(10.5) with ties away from zero
  EXPECT_EQ(out.width(), 14u);
  EXPECT_THROW(bicubic_resize(random_plane(2, 2, 1), 0.1), Error);
  EXPECT_THROW(bicubic_resize(random_plane(2, 2, 1), 0.0), Error);
}

namespace {
// Keys kernel, a = -0.5, written from its piecewise definition.
double keys(double t) {
  t = std::fabs(t);
  if (t < 1.0) return 1.5 * t * t * t - 2.5 * t * t + 1.0;
  if (t < 2.0) return -0.5 * t * t * t + 2.5 * t * t - 4.0 * t + 2.0;
  return 0.0;
}

Image bicubic_oracle(const Image& src, std::size_t oh, std::size_t ow) {
  const double sy = static_cast<double>(oh) / src.height();
  const double sx = static_cast<double>(ow) / src.width();
  Image out(oh, ow);
  for (std::size_t i = 0; i < oh; ++i)
    for (std::size_t j = 0; j < ow; ++j) {
      const double y = (i + 0.5) / sy - 0.5;
      const double x = (j + 0.5) / sx - 0.5;
      const long y0 = static_cast<long>(std::floor(y));
      const long x0 = static_cast<long>(std::floor(x));
      double acc = 0.0;
      for (long a = y0 - 1; a <= y0 + 2; ++a)
        for (long b = x0 - 1; b <= x0 + 2; ++b) {
          const long ya = std::clamp(a, 0L, static_cast<long>(src.height()) - 1);
          const long xb = std::clamp(b, 0L, static_cast<long>(src.width()) - 1);
          acc += keys(y - a) * keys(x - b) * src(static_cast<std::size_t>(ya), static_cast<std::size_t>(xb));
        }
      out(i, j) = acc;
    }
  return out;
}
}  // namespace

TEST(Bicubic, MatchesPerPixelOracle) {
  const Image p = random_plane(8, 8, 21);
  const Image half = bicubic_resize(p, 0.5);
  EXPECT_LE(max_abs_diff(half, bicubic_oracle(p, 4, 4)), 1e-10);
  const Image back = bicubic_resize(half, 2.0);
  EXPECT_LE(max_abs_diff(back, bicubic_oracle(half, 8, 8)), 1e-10);
  double mse = 0.0;
  for (std::size_t i = 0; i < p.size(); ++i) mse += std::pow(back.data()[i] - p.data()[i], 2);
  EXPECT_TRUE(std::isfinite(10.0 * std::log10(255.0 * 255.0 / (mse / p.size()))));
  const Image odd = random_plane(5, 7, 22);
  EXPECT_LE(max_abs_diff(bicubic_resize_to(odd, 11, 4), bicubic_oracle(odd, 11, 4)), 1e-10);
}

TEST(Bicubic, TranslationEquivariantOnInterior) {
  // Shifting the source by one pixel shifts an x2 upscale by two pixels.
  const Image p = random_plane(12, 12, 31);
  Image shifted(12, 12);
  for (std::size_t r = 0; r < 12; ++r)
    for (std::size_t c = 0; c < 12; ++c) shifted(r, c) = p(r, (c + 11) % 12);
  const Image a = bicubic_resize(p, 2.0);
  const Image b = bicubic_resize(shifted, 2.0);
  for (std::size_t r = 4; r < 20; ++r)
    for (std::size_t c = 6; c < 18; ++c) EXPECT_NEAR(b(r, c + 2), a(r, c), 1e-10);
}

TEST(Luma, GrayAndRed) {
  Image gray(1, 1, 3, {80, 80, 80});
  EXPECT_NEAR(to_luma(gray)(0, 0), 80.0, 1e-12);
  Image red(1, 1, 3, {255, 0, 0});
  EXPECT_NEAR(to_luma(red)(0, 0), 0.299 * 255.0, 1e-12);
}

TEST(Luma, RoundTrip) {
  for (std::uint64_t s = 0; s < 5; ++s) {
    const Image rgb = testing_support::random_image(6, 7, 3, s);
    const Image back = from_luma(to_luma(rgb), to_chroma(rgb));
    EXPECT_LT(max_abs_diff(back, rgb), 1e-6);
  }
}

TEST(Luma, ChannelMismatch) {
  EXPECT_THROW(to_luma(Image(2, 2, 1)), Error);
  const Image rgb = testing_support::random_image(4, 4, 3, 1);
  EXPECT_THROW(from_luma(Image(3, 4), to_chroma(rgb)), Error);
}

TEST(Geometry, PadCropFit) {
  const Image p = random_plane(3, 4, 5);
  const Image padded = pad_symmetric(p, 5, 6);
  EXPECT_EQ(padded(3, 0), p(2, 0));
  EXPECT_EQ(padded(4, 0), p(1, 0));
  EXPECT_EQ(padded(0, 4), p(0, 3));
  EXPECT_EQ(crop(padded, 0, 0, 3, 4), p);
  EXPECT_EQ(fit_to(padded, 3, 4), p);
  EXPECT_THROW(crop(p, 2, 0, 2, 4), Error);
}
