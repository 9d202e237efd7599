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
#include "wavesr/ghm.hpp"
#include "wavesr/iqa.hpp"

using namespace wavesr;
using testing_support::random_plane;

namespace {
const double r2 = std::sqrt(2.0);

double max_abs(const Image& p) {
  double m = 0.0;
  for (double v : p.data()) m = std::max(m, std::fabs(v));
  return m;
}

Matrix2x2 identity() { return {{{1.0, 0.0}, {0.0, 1.0}}}; }
}  // namespace

TEST(GhmFilters, MatchClosedForms) {
  const GhmFilterSet f = GhmFilterSet::standard();
  const Matrix2x4 h1 = {{{3 / (5 * r2), 4.0 / 5, 3 / (5 * r2), 0}, {-1.0 / 20, -3 / (10 * r2), 9.0 / 20, 1 / r2}}};
  const Matrix2x4 g1 = {{{-1.0 / 20, -3 / (10 * r2), 9.0 / 20, -1 / r2}, {1 / (10 * r2), 3.0 / 10, -9 / (10 * r2), 0}}};
  const Matrix2x4 h2 = {{{0, 0, 0, 0}, {9.0 / 20, -3 / (10 * r2), -1.0 / 20, 0}}};
  const Matrix2x4 g2 = {{{9.0 / 20, -3 / (10 * r2), -1.0 / 20, 0}, {9 / (10 * r2), -3.0 / 10, -1 / (10 * r2), 0}}};
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 4; ++c) {
      EXPECT_DOUBLE_EQ(f.h1[r][c], h1[r][c]);
      EXPECT_DOUBLE_EQ(f.g1[r][c], g1[r][c]);
      EXPECT_DOUBLE_EQ(f.h2[r][c], h2[r][c]);
      EXPECT_DOUBLE_EQ(f.g2[r][c], g2[r][c]);
    }
}

TEST(GhmFilters, PolyphaseIsParaunitary) {
  // Stack [h; g] into 4x4 blocks; paraunitarity of the two-tap polyphase
  // pair is A0 A0^T + A1 A1^T = I and A0 A1^T = 0.
  const GhmFilterSet f = GhmFilterSet::standard();
  double a0[4][4], a1[4][4];
  for (int c = 0; c < 4; ++c)
    for (int r = 0; r < 2; ++r) {
      a0[r][c] = f.h1[r][c];
      a0[r + 2][c] = f.g1[r][c];
      a1[r][c] = f.h2[r][c];
      a1[r + 2][c] = f.g2[r][c];
    }
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) {
      double s = 0.0, cross = 0.0;
      for (int k = 0; k < 4; ++k) {
        s += a0[i][k] * a0[j][k] + a1[i][k] * a1[j][k];
        cross += a0[i][k] * a1[j][k];
      }
      EXPECT_NEAR(s, i == j ? 1.0 : 0.0, 1e-14);
      EXPECT_NEAR(cross, 0.0, 1e-14);
    }
}

TEST(GhmPrefilter, IdentityVectorises) {
  const GhmTransform t(identity());
  const auto v = t.prefilter(std::vector<double>{1, 2, 3, 4});
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0][0], 1.0);
  EXPECT_EQ(v[0][1], 2.0);
  EXPECT_EQ(v[1][0], 3.0);
  EXPECT_EQ(v[1][1], 4.0);
}

TEST(GhmPrefilter, RoundTripAndConstants) {
  const GhmTransform t;
  const Image x = random_plane(1, 32, 3);
  const std::vector<double> sig(x.data().begin(), x.data().end());
  const auto back = t.postfilter(t.prefilter(sig));
  for (std::size_t i = 0; i < sig.size(); ++i) EXPECT_NEAR(back[i], sig[i], 1e-14);
  const auto c = t.prefilter(std::vector<double>(8, 2.0));
  for (const auto& v : c) {
    EXPECT_DOUBLE_EQ(v[0], c[0][0]);
    EXPECT_DOUBLE_EQ(v[1], c[0][1]);
  }
  EXPECT_THROW(t.prefilter(std::vector<double>(5, 1.0)), Error);
}

TEST(GhmPrefilter, SingularMatrixRejected) {
  EXPECT_THROW(GhmTransform(Matrix2x2{{{1.0, 2.0}, {2.0, 4.0}}}), Error);
}

TEST(GhmDecompose, LayoutAndDims) {
  const GhmSubbands b = ghm_decompose(random_plane(64, 40, 1));
  for (const Image& p : b.bands) {
    EXPECT_EQ(p.height(), 16u);
    EXPECT_EQ(p.width(), 10u);
  }
  const GhmSubbands odd = ghm_decompose(random_plane(66, 101, 1));
  EXPECT_EQ(odd.band_height(), 17u);
  EXPECT_EQ(odd.band_width(), 26u);
  int approx = 0;
  for (std::size_t i = 0; i < 16; ++i) approx += GhmSubbands::is_approximation(i);
  EXPECT_EQ(approx, 4);
  EXPECT_TRUE(GhmSubbands::is_approximation(0));
  EXPECT_TRUE(GhmSubbands::is_approximation(5));
  EXPECT_FALSE(GhmSubbands::is_approximation(2));
  EXPECT_THROW(ghm_decompose(Image()), Error);
}

TEST(GhmDecompose, ZeroPlane) {
  const GhmSubbands b = ghm_decompose(Image(16, 16));
  for (const Image& p : b.bands) EXPECT_EQ(max_abs(p), 0.0);
  EXPECT_EQ(max_abs(ghm_reconstruct(b)), 0.0);
}

TEST(GhmDecompose, ConstantAnnihilation) {
  for (double c : {1.0, 128.0, -3.5}) {
    const GhmSubbands b = ghm_decompose(Image::filled(32, 48, c));
    for (std::size_t i = 0; i < 16; ++i) {
      if (GhmSubbands::is_approximation(i)) continue;
      EXPECT_LT(max_abs(b.bands[i]), 1e-8 * std::max(1.0, std::fabs(c))) << i;
    }
  }
}

TEST(GhmProperty, PerfectReconstruction) {
  const std::pair<std::size_t, std::size_t> sizes[] = {{16, 16}, {64, 64}, {68, 100}};
  for (auto [h, w] : sizes)
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Image p = random_plane(h, w, 1000 + s);
      const Image back = ghm_reconstruct(ghm_decompose(p));
      ASSERT_TRUE(back.same_shape(p));
      EXPECT_LT(max_abs_diff(back, p), 1e-8) << h << "x" << w;
    }
}

TEST(GhmProperty, PadPathRoundTrip) {
  for (auto [h, w] : {std::pair<std::size_t, std::size_t>{13, 7}, {5, 5}, {4, 4}, {30, 31}}) {
    const Image p = random_plane(h, w, h * w);
    EXPECT_LT(max_abs_diff(ghm_reconstruct(ghm_decompose(p)), p), 1e-8) << h << "x" << w;
  }
}

TEST(GhmProperty, IdentityPrefilterAlsoReconstructs) {
  const GhmTransform t(identity());
  const Image p = random_plane(32, 24, 8);
  EXPECT_LT(max_abs_diff(t.reconstruct(t.decompose(p)), p), 1e-8);
}

TEST(GhmProperty, Linearity) {
  const Image a = random_plane(16, 32, 1);
  const Image b = random_plane(16, 32, 2);
  Image mix = a;
  for (std::size_t i = 0; i < mix.size(); ++i) mix.data()[i] = 3.0 * a.data()[i] - b.data()[i];
  const GhmSubbands sa = ghm_decompose(a), sb = ghm_decompose(b), sm = ghm_decompose(mix);
  for (std::size_t k = 0; k < 16; ++k)
    for (std::size_t i = 0; i < sm.bands[k].size(); ++i)
      EXPECT_NEAR(sm.bands[k].data()[i], 3.0 * sa.bands[k].data()[i] - sb.bands[k].data()[i], 1e-9);
}

TEST(GhmReconstruct, ApproximationOnlyIsLossy) {
  const Image p = testing_support::natural_plane();
  GhmSubbands b = ghm_decompose(p);
  const double full = psnr(p, ghm_reconstruct(b));
  for (std::size_t i = 0; i < 16; ++i)
    if (!GhmSubbands::is_approximation(i)) b.bands[i] = Image(b.band_height(), b.band_width());
  const double approx = psnr(p, ghm_reconstruct(b));
  EXPECT_TRUE(std::isfinite(approx));
  EXPECT_GT(approx, 10.0);
  EXPECT_LT(approx, full);
}

TEST(GhmReconstruct, InconsistentBands) {
  GhmSubbands b = ghm_decompose(random_plane(16, 16, 1));
  b.bands[7] = Image(3, 3);
  try {
    ghm_reconstruct(b);
    FAIL();
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("inconsistent band dims"), std::string::npos);
  }
}
