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

#include "wavesr/ghm.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <map>
#include <memory>
#include <mutex>

#include "wavesr/error.hpp"
#include "wavesr/grid.hpp"

namespace wavesr {

GhmFilterSet GhmFilterSet::standard() {
  const double s = std::sqrt(2.0);
  GhmFilterSet f;
  f.h1 = {{{3.0 / (5.0 * s), 4.0 / 5.0, 3.0 / (5.0 * s), 0.0},
           {-1.0 / 20.0, -3.0 / (10.0 * s), 9.0 / 20.0, 1.0 / s}}};
  f.g1 = {{{-1.0 / 20.0, -3.0 / (10.0 * s), 9.0 / 20.0, -1.0 / s},
           {1.0 / (10.0 * s), 3.0 / 10.0, -9.0 / (10.0 * s), 0.0}}};
  f.h2 = {{{0.0, 0.0, 0.0, 0.0},
           {9.0 / 20.0, -3.0 / (10.0 * s), -1.0 / 20.0, 0.0}}};
  f.g2 = {{{9.0 / 20.0, -3.0 / (10.0 * s), -1.0 / 20.0, 0.0},
           {9.0 / (10.0 * s), -3.0 / 10.0, -1.0 / (10.0 * s), 0.0}}};
  return f;
}

void GhmSubbands::validate() const {
  for (const auto& b : bands) {
    require(b.is_plane(), "GHM band must be a plane");
    require(b.height() == bands[0].height() && b.width() == bands[0].width(),
            "inconsistent band dims");
  }
  require(bands[0].height() == (src_height + 3) / 4 && bands[0].width() == (src_width + 3) / 4,
          "inconsistent band dims: bands do not match source dims");
  require(bands[0].height() > 0 && bands[0].width() > 0, "empty GHM band set");
}

Matrix2x2 GhmTransform::default_prefilter() { return {{{1.0, 0.0}, {0.0, 1.0 / std::sqrt(2.0)}}}; }

GhmTransform::GhmTransform(Matrix2x2 prefilter, GhmFilterSet filters)
    : prefilter_(prefilter), filters_(filters) {
  const double det = prefilter[0][0] * prefilter[1][1] - prefilter[0][1] * prefilter[1][0];
  require(std::isfinite(det) && std::abs(det) > 1e-12, "GHM prefilter must be invertible");
  inverse_prefilter_ = {{{prefilter[1][1] / det, -prefilter[0][1] / det},
                         {-prefilter[1][0] / det, prefilter[0][0] / det}}};
}

std::vector<std::array<double, 2>> GhmTransform::prefilter(std::span<const double> signal) const {
  require(signal.size() % 2 == 0, "ghm prefilter: odd length; pad first");
  std::vector<std::array<double, 2>> v(signal.size() / 2);
  for (std::size_t n = 0; n < v.size(); ++n) {
    const double a = signal[2 * n];
    const double b = signal[2 * n + 1];
    v[n] = {prefilter_[0][0] * a + prefilter_[0][1] * b, prefilter_[1][0] * a + prefilter_[1][1] * b};
  }
  return v;
}

std::vector<double> GhmTransform::postfilter(std::span<const std::array<double, 2>> vectors) const {
  std::vector<double> x(2 * vectors.size());
  const auto& q = inverse_prefilter_;
  for (std::size_t n = 0; n < vectors.size(); ++n) {
    x[2 * n] = q[0][0] * vectors[n][0] + q[0][1] * vectors[n][1];
    x[2 * n + 1] = q[1][0] * vectors[n][0] + q[1][1] * vectors[n][1];
  }
  return x;
}

void GhmTransform::analyze_into(const double* x, std::size_t n, double* c0, double* c1, double* c2,
                                double* c3, std::size_t stride) const {
  const std::size_t nv = n / 2;  // vector samples
  const std::size_t nb = n / 4;  // output samples per channel
  const auto& p = prefilter_;
  auto vec = [&](std::size_t m) {
    m %= nv;
    const double a = x[2 * m];
    const double b = x[2 * m + 1];
    return std::array<double, 2>{p[0][0] * a + p[0][1] * b, p[1][0] * a + p[1][1] * b};
  };
  const auto& f = filters_;
  for (std::size_t j = 0; j < nb; ++j) {
    double acc[4] = {0.0, 0.0, 0.0, 0.0};
    for (std::size_t k = 0; k < 4; ++k) {
      const auto v = vec(2 * j + k);
      const auto& lo = k < 2 ? f.h1 : f.h2;
      const auto& hi = k < 2 ? f.g1 : f.g2;
      const std::size_t col = 2 * (k % 2);
      for (std::size_t r = 0; r < 2; ++r) {
        acc[r] += lo[r][col] * v[0] + lo[r][col + 1] * v[1];
        acc[2 + r] += hi[r][col] * v[0] + hi[r][col + 1] * v[1];
      }
    }
    c0[j * stride] = acc[0];
    c1[j * stride] = acc[1];
    c2[j * stride] = acc[2];
    c3[j * stride] = acc[3];
  }
}

std::array<std::vector<double>, 4> GhmTransform::analyze(std::span<const double> signal) const {
  require(!signal.empty() && signal.size() % 4 == 0, "ghm analyze: length must be a multiple of 4");
  const std::size_t nb = signal.size() / 4;
  std::array<std::vector<double>, 4> out;
  for (auto& c : out) c.resize(nb);
  analyze_into(signal.data(), signal.size(), out[0].data(), out[1].data(), out[2].data(),
               out[3].data(), 1);
  return out;
}

namespace {

using Lu = Eigen::PartialPivLU<Eigen::MatrixXd>;

// LU of the assembled analysis operator per (transform parameters, length).
class GhmSolverCache {
 public:
  std::shared_ptr<const Lu> get(const GhmTransform& t, std::size_t n) {
    std::vector<double> key{static_cast<double>(n)};
    for (const auto& row : t.prefilter_matrix()) key.insert(key.end(), row.begin(), row.end());
    for (const auto* m : {&t.filters().h1, &t.filters().g1, &t.filters().h2, &t.filters().g2})
      for (const auto& row : *m) key.insert(key.end(), row.begin(), row.end());

    std::lock_guard lock(mu_);
    if (auto it = cache_.find(key); it != cache_.end()) return it->second;

    const std::size_t nb = n / 4;
    Eigen::MatrixXd op(n, n);
    std::vector<double> unit(n, 0.0);
    for (std::size_t c = 0; c < n; ++c) {
      unit[c] = 1.0;
      const auto ch = t.analyze(unit);
      for (std::size_t k = 0; k < 4; ++k)
        for (std::size_t j = 0; j < nb; ++j) op(k * nb + j, c) = ch[k][j];
      unit[c] = 0.0;
    }
    auto lu = std::make_shared<const Lu>(op);
    const double pivot = lu->matrixLU().diagonal().cwiseAbs().minCoeff();
    require(pivot > 1e-12, "GHM analysis operator is singular at length " + std::to_string(n));
    if (cache_.size() > 64) cache_.clear();
    cache_.emplace(std::move(key), lu);
    return lu;
  }

 private:
  std::mutex mu_;
  std::map<std::vector<double>, std::shared_ptr<const Lu>> cache_;
};

GhmSolverCache& ghm_cache() {
  static GhmSolverCache cache;
  return cache;
}

}  // namespace

std::vector<double> GhmTransform::synthesize(const std::array<std::vector<double>, 4>& channels) const {
  const std::size_t nb = channels[0].size();
  for (const auto& c : channels) require(c.size() == nb && nb > 0, "inconsistent band dims");
  const std::size_t n = 4 * nb;
  const auto lu = ghm_cache().get(*this, n);
  Eigen::VectorXd rhs(n);
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t j = 0; j < nb; ++j) rhs[k * nb + j] = channels[k][j];
  const Eigen::VectorXd x = lu->solve(rhs);
  return std::vector<double>(x.data(), x.data() + n);
}

GhmSubbands GhmTransform::decompose(const Image& plane) const {
  require(plane.is_plane(), "ghm_decompose expects a single-channel plane");
  require(!plane.empty(), "ghm_decompose: empty input");
  const std::size_t h4 = (plane.height() + 3) / 4 * 4;
  const std::size_t w4 = (plane.width() + 3) / 4 * 4;
  const Image x = pad_symmetric(plane, h4, w4);
  const std::size_t bh = h4 / 4;
  const std::size_t bw = w4 / 4;
  const double range = plane.range();

  // Row pass into four h4 x bw planes.
  std::array<Image, 4> rows;
  for (auto& r : rows) r = Image(h4, bw, 1, range);
  for (std::size_t r = 0; r < h4; ++r) {
    analyze_into(&x.data()[r * w4], w4, &rows[0].data()[r * bw], &rows[1].data()[r * bw],
                 &rows[2].data()[r * bw], &rows[3].data()[r * bw], 1);
  }

  GhmSubbands out;
  out.src_height = plane.height();
  out.src_width = plane.width();
  for (auto& b : out.bands) b = Image(bh, bw, 1, range);
  std::vector<double> col(h4);
  std::array<std::vector<double>, 4> ch;
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t c = 0; c < bw; ++c) {
      for (std::size_t r = 0; r < h4; ++r) col[r] = rows[j](r, c);
      ch = analyze(col);
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t r = 0; r < bh; ++r) out.band(i, j)(r, c) = ch[i][r];
    }
  }
  return out;
}

Image GhmTransform::reconstruct(const GhmSubbands& bands) const {
  bands.validate();
  const std::size_t bh = bands.band_height();
  const std::size_t bw = bands.band_width();
  const std::size_t h4 = 4 * bh;
  const std::size_t w4 = 4 * bw;
  const double range = bands.bands[0].range();

  std::array<Image, 4> rows;
  for (auto& r : rows) r = Image(h4, bw, 1, range);
  std::array<std::vector<double>, 4> ch;
  for (auto& c : ch) c.resize(bh);
  for (std::size_t j = 0; j < 4; ++j) {
    for (std::size_t c = 0; c < bw; ++c) {
      for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t r = 0; r < bh; ++r) ch[i][r] = bands.band(i, j)(r, c);
      const auto col = synthesize(ch);
      for (std::size_t r = 0; r < h4; ++r) rows[j](r, c) = col[r];
    }
  }

  Image x(h4, w4, 1, range);
  for (auto& c : ch) c.resize(bw);
  for (std::size_t r = 0; r < h4; ++r) {
    for (std::size_t j = 0; j < 4; ++j)
      for (std::size_t c = 0; c < bw; ++c) ch[j][c] = rows[j](r, c);
    const auto line = synthesize(ch);
    for (std::size_t c = 0; c < w4; ++c) x(r, c) = line[c];
  }
  return crop(x, 0, 0, bands.src_height, bands.src_width);
}

GhmSubbands ghm_decompose(const Image& plane) { return GhmTransform().decompose(plane); }

Image ghm_reconstruct(const GhmSubbands& bands) { return GhmTransform().reconstruct(bands); }

}  // namespace wavesr
