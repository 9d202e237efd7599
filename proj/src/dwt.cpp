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

#include "wavesr/dwt.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <cstring>
#include <map>
#include <memory>
#include <mutex>

#include "wavesr/error.hpp"
#include "wavesr/grid.hpp"

namespace wavesr {

void FilterBank::validate() const {
  for (const auto* taps : {&dec_lo, &dec_hi, &rec_lo, &rec_hi}) {
    require(!taps->empty(), "filter bank '" + name + "' has an empty tap array");
    for (double t : *taps) require(std::isfinite(t), "filter bank '" + name + "' has non-finite taps");
  }
}

namespace {

std::ptrdiff_t wrap(std::ptrdiff_t i, std::ptrdiff_t n) {
  std::ptrdiff_t p = i % n;
  return p < 0 ? p + n : p;
}

// Index of x_ext[i] for an even-length signal, or -1 when the sample is zero.
std::ptrdiff_t source_index(std::ptrdiff_t i, std::ptrdiff_t n, BoundaryMode mode,
                            SymmetricExtension ext) {
  if (i >= 0 && i < n) return i;
  switch (mode) {
    case BoundaryMode::zero:
      return -1;
    case BoundaryMode::periodic:
      return wrap(i, n);
    case BoundaryMode::symmetric:
      if (ext == SymmetricExtension::whole_sample && n > 1) {
        const std::ptrdiff_t p = wrap(i, 2 * n - 2);
        return p < n ? p : 2 * n - 2 - p;
      } else {
        const std::ptrdiff_t p = wrap(i, 2 * n);
        return p < n ? p : 2 * n - 1 - p;
      }
  }
  return -1;
}

void analyze_band(const double* x, std::ptrdiff_t n, const std::vector<double>& taps, int offset,
                  BoundaryMode mode, SymmetricExtension ext, double* out) {
  const std::ptrdiff_t m = n / 2;
  const auto len = static_cast<std::ptrdiff_t>(taps.size());
  for (std::ptrdiff_t j = 0; j < m; ++j) {
    double acc = 0.0;
    for (std::ptrdiff_t k = 0; k < len; ++k) {
      const std::ptrdiff_t s = source_index(2 * j + k - offset, n, mode, ext);
      if (s >= 0) acc += taps[k] * x[s];
    }
    out[j] = acc;
  }
}

// n is even; writes n/2 samples to each of a and d.
void analyze(const double* x, std::ptrdiff_t n, const FilterBank& fb, BoundaryMode mode,
             double* a, double* d) {
  analyze_band(x, n, fb.dec_lo, fb.dec_lo_offset, mode, fb.symmetric_extension, a);
  analyze_band(x, n, fb.dec_hi, fb.dec_hi_offset, mode, fb.symmetric_extension, d);
}

void scatter_band(const double* band, std::ptrdiff_t m, const std::vector<double>& taps,
                  int offset, BoundaryMode mode, double* x) {
  const std::ptrdiff_t n = 2 * m;
  const auto len = static_cast<std::ptrdiff_t>(taps.size());
  for (std::ptrdiff_t j = 0; j < m; ++j) {
    const double v = band[j];
    for (std::ptrdiff_t k = 0; k < len; ++k) {
      std::ptrdiff_t i = 2 * j + k - offset;
      if (i < 0 || i >= n) {
        if (mode == BoundaryMode::zero) continue;
        i = wrap(i, n);
      }
      x[i] += v * taps[k];
    }
  }
}

// Cache of LU factorisations of the symmetric-mode analysis operator, keyed by
// every number that defines the operator.
class SymmetricSolverCache {
 public:
  std::shared_ptr<const Eigen::PartialPivLU<Eigen::MatrixXd>> get(const FilterBank& fb,
                                                                   std::ptrdiff_t n) {
    std::vector<double> key;
    key.reserve(8 + fb.dec_lo.size() + fb.dec_hi.size());
    key.push_back(static_cast<double>(n));
    key.push_back(static_cast<double>(fb.symmetric_extension));
    key.push_back(fb.dec_lo_offset);
    key.push_back(fb.dec_hi_offset);
    key.push_back(static_cast<double>(fb.dec_lo.size()));
    key.insert(key.end(), fb.dec_lo.begin(), fb.dec_lo.end());
    key.insert(key.end(), fb.dec_hi.begin(), fb.dec_hi.end());

    std::lock_guard lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return it->second;

    Eigen::MatrixXd op = Eigen::MatrixXd::Zero(n, n);
    std::vector<double> unit(n, 0.0);
    std::vector<double> a(n / 2);
    std::vector<double> d(n / 2);
    for (std::ptrdiff_t c = 0; c < n; ++c) {
      unit[c] = 1.0;
      analyze(unit.data(), n, fb, BoundaryMode::symmetric, a.data(), d.data());
      for (std::ptrdiff_t r = 0; r < n / 2; ++r) {
        op(r, c) = a[r];
        op(n / 2 + r, c) = d[r];
      }
      unit[c] = 0.0;
    }
    auto lu = std::make_shared<const Eigen::PartialPivLU<Eigen::MatrixXd>>(op);
    // A singular operator shows up as a zero pivot.
    const double pivot = lu->matrixLU().diagonal().cwiseAbs().minCoeff();
    require(pivot > 1e-12 * op.cwiseAbs().maxCoeff(),
            "filter bank '" + fb.name + "' is not invertible in symmetric mode at length " +
                std::to_string(n));
    if (cache_.size() > 256) cache_.clear();
    cache_.emplace(std::move(key), lu);
    return lu;
  }

 private:
  std::mutex mu_;
  std::map<std::vector<double>, std::shared_ptr<const Eigen::PartialPivLU<Eigen::MatrixXd>>>
      cache_;
};

SymmetricSolverCache& solver_cache() {
  static SymmetricSolverCache cache;
  return cache;
}

// a and d hold m samples each; writes 2m samples to x.
void synthesize(const double* a, const double* d, std::ptrdiff_t m, const FilterBank& fb,
                BoundaryMode mode, double* x) {
  const std::ptrdiff_t n = 2 * m;
  if (mode == BoundaryMode::symmetric) {
    const auto lu = solver_cache().get(fb, n);
    Eigen::VectorXd rhs(n);
    for (std::ptrdiff_t i = 0; i < m; ++i) {
      rhs[i] = a[i];
      rhs[m + i] = d[i];
    }
    const Eigen::VectorXd sol = lu->solve(rhs);
    for (std::ptrdiff_t i = 0; i < n; ++i) x[i] = sol[i];
    return;
  }
  std::fill(x, x + n, 0.0);
  scatter_band(a, m, fb.rec_lo, fb.rec_lo_offset, mode, x);
  scatter_band(d, m, fb.rec_hi, fb.rec_hi_offset, mode, x);
}

}  // namespace

Dwt1d dwt1d(std::span<const double> signal, const FilterBank& fb, BoundaryMode mode) {
  require(!signal.empty(), "dwt1d: empty signal");
  fb.validate();
  std::vector<double> x(signal.begin(), signal.end());
  if (x.size() % 2 == 1) x.push_back(x.back());
  const auto n = static_cast<std::ptrdiff_t>(x.size());
  Dwt1d out{std::vector<double>(n / 2), std::vector<double>(n / 2)};
  analyze(x.data(), n, fb, mode, out.approx.data(), out.detail.data());
  return out;
}

std::vector<double> idwt1d(std::span<const double> approx, std::span<const double> detail,
                           const FilterBank& fb, BoundaryMode mode, std::size_t out_len) {
  require(approx.size() == detail.size(), "idwt1d: approx/detail length mismatch");
  require(!approx.empty(), "idwt1d: empty bands");
  const std::size_t m = approx.size();
  require(out_len == 2 * m || out_len + 1 == 2 * m, "idwt1d: out_len incompatible with band length");
  fb.validate();
  std::vector<double> x(2 * m);
  synthesize(approx.data(), detail.data(), static_cast<std::ptrdiff_t>(m), fb, mode, x.data());
  x.resize(out_len);
  return x;
}

void SubbandSet::validate() const {
  for (const Image* b : {&ll, &lh, &hl, &hh}) {
    require(b->is_plane(), "subband must be a plane");
    require(b->height() == ll.height() && b->width() == ll.width(),
            "inconsistent band dims");
  }
  require(ll.height() == (src_height + 1) / 2 && ll.width() == (src_width + 1) / 2,
          "inconsistent band dims: bands do not match source dims");
  require(ll.height() > 0 && ll.width() > 0, "empty subband set");
}

SubbandSet dwt2d(const Image& plane, const FilterBank& fb, BoundaryMode mode) {
  require(plane.is_plane(), "dwt2d expects a single-channel plane");
  require(!plane.empty(), "dwt2d: empty image");
  fb.validate();
  const std::size_t h2 = (plane.height() + 1) / 2 * 2;
  const std::size_t w2 = (plane.width() + 1) / 2 * 2;
  const Image x = pad_symmetric(plane, h2, w2);
  const std::size_t bh = h2 / 2;
  const std::size_t bw = w2 / 2;
  const double range = plane.range();

  // Row pass: lo / hi halves, each h2 x bw.
  Image lo(h2, bw, 1, range);
  Image hi(h2, bw, 1, range);
  for (std::size_t r = 0; r < h2; ++r) {
    analyze(&x.data()[r * w2], static_cast<std::ptrdiff_t>(w2), fb, mode, &lo.data()[r * bw],
            &hi.data()[r * bw]);
  }

  SubbandSet out{Image(bh, bw, 1, range), Image(bh, bw, 1, range), Image(bh, bw, 1, range),
                 Image(bh, bw, 1, range), fb.name, plane.height(), plane.width()};
  std::vector<double> col(h2);
  std::vector<double> a(bh);
  std::vector<double> d(bh);
  auto column_pass = [&](const Image& src, Image& low, Image& high) {
    for (std::size_t c = 0; c < bw; ++c) {
      for (std::size_t r = 0; r < h2; ++r) col[r] = src(r, c);
      analyze(col.data(), static_cast<std::ptrdiff_t>(h2), fb, mode, a.data(), d.data());
      for (std::size_t r = 0; r < bh; ++r) {
        low(r, c) = a[r];
        high(r, c) = d[r];
      }
    }
  };
  column_pass(lo, out.ll, out.lh);
  column_pass(hi, out.hl, out.hh);
  return out;
}

SubbandSet dwt2d(const Image& plane, const FilterBank& fb) {
  return dwt2d(plane, fb, fb.default_mode());
}

Image idwt2d(const SubbandSet& bands, const FilterBank& fb, BoundaryMode mode) {
  bands.validate();
  fb.validate();
  const std::size_t bh = bands.band_height();
  const std::size_t bw = bands.band_width();
  const std::size_t h2 = 2 * bh;
  const std::size_t w2 = 2 * bw;
  const double range = bands.ll.range();

  Image lo(h2, bw, 1, range);
  Image hi(h2, bw, 1, range);
  std::vector<double> a(bh);
  std::vector<double> d(bh);
  std::vector<double> col(h2);
  auto column_pass = [&](const Image& low, const Image& high, Image& dst) {
    for (std::size_t c = 0; c < bw; ++c) {
      for (std::size_t r = 0; r < bh; ++r) {
        a[r] = low(r, c);
        d[r] = high(r, c);
      }
      synthesize(a.data(), d.data(), static_cast<std::ptrdiff_t>(bh), fb, mode, col.data());
      for (std::size_t r = 0; r < h2; ++r) dst(r, c) = col[r];
    }
  };
  column_pass(bands.ll, bands.lh, lo);
  column_pass(bands.hl, bands.hh, hi);

  Image x(h2, w2, 1, range);
  for (std::size_t r = 0; r < h2; ++r) {
    synthesize(&lo.data()[r * bw], &hi.data()[r * bw], static_cast<std::ptrdiff_t>(bw), fb, mode,
               &x.data()[r * w2]);
  }
  return crop(x, 0, 0, bands.src_height, bands.src_width);
}

Image idwt2d(const SubbandSet& bands, const FilterBank& fb) {
  return idwt2d(bands, fb, fb.default_mode());
}

}  // namespace wavesr
