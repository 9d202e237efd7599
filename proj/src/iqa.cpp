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

#include "wavesr/iqa.hpp"

#include <algorithm>
#include <array>
#include <cmath>

#include "iqa_detail.hpp"
#include "wavesr/error.hpp"
#include "wavesr/grid.hpp"

namespace wavesr {

namespace detail {

PlanePair luma_pair(const Image& x, const Image& xhat, const char* metric) {
  require(x.same_shape(xhat), std::string(metric) + ": image dims mismatch");
  require(!x.empty(), std::string(metric) + ": empty image");
  return {luma_plane(x), luma_plane(xhat)};
}

Image scharr_magnitude(const Image& plane) {
  static const Kernel2D dx(3, 3, {3.0 / 16, 0, -3.0 / 16, 10.0 / 16, 0, -10.0 / 16, 3.0 / 16, 0,
                                  -3.0 / 16});
  static const Kernel2D dy(3, 3, {3.0 / 16, 10.0 / 16, 3.0 / 16, 0, 0, 0, -3.0 / 16, -10.0 / 16,
                                  -3.0 / 16});
  const Image gx = conv2d(plane, dx, BoundaryMode::zero);
  const Image gy = conv2d(plane, dy, BoundaryMode::zero);
  Image out(plane.height(), plane.width(), 1, plane.range());
  for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] = std::hypot(gx.data()[i], gy.data()[i]);
  return out;
}

std::size_t resolution_factor(const Image& plane) {
  const double min_dim = static_cast<double>(std::min(plane.height(), plane.width()));
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(min_dim / 256.0)));
}

Image average_downsample(const Image& plane, std::size_t factor) {
  if (factor <= 1) return plane;
  const Kernel2D box(factor, factor,
                     std::vector<double>(factor * factor, 1.0 / static_cast<double>(factor * factor)));
  return conv2d(plane, box, BoundaryMode::zero, factor);
}

}  // namespace detail

namespace {

const std::array<const char*, 7> kNames = {"PSNR", "SSIM", "FSIM", "GSM", "MAD", "SRSIM", "VIF"};

}  // namespace

const std::vector<Metric>& all_metrics() {
  static const std::vector<Metric> m = {Metric::psnr, Metric::ssim,  Metric::fsim, Metric::gsm,
                                        Metric::mad,  Metric::srsim, Metric::vif};
  return m;
}

const char* metric_name(Metric m) { return kNames[static_cast<std::size_t>(m)]; }

Metric metric_from_name(std::string_view name) {
  std::string up(name);
  for (char& c : up) c = static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
  if (up == "SR-SIM") up = "SRSIM";
  for (std::size_t i = 0; i < kNames.size(); ++i)
    if (up == kNames[i]) return static_cast<Metric>(i);
  throw Error("unknown metric '" + std::string(name) + "'; valid: PSNR,SSIM,FSIM,GSM,MAD,SRSIM,VIF");
}

bool higher_is_better(Metric m) { return m != Metric::mad; }

IqaScore score(Metric m, const Image& ref, const Image& test) {
  double v = 0.0;
  switch (m) {
    case Metric::psnr: {
      const auto p = detail::luma_pair(ref, test, "psnr");
      v = psnr(p.ref, p.test);
      break;
    }
    case Metric::ssim: v = mssim(ref, test); break;
    case Metric::fsim: v = fsim(ref, test); break;
    case Metric::gsm: v = gsm(ref, test); break;
    case Metric::mad: v = mad(ref, test); break;
    case Metric::srsim: v = srsim(ref, test); break;
    case Metric::vif: v = vif(ref, test); break;
  }
  return {metric_name(m), v, higher_is_better(m)};
}

// --- MSE / PSNR -----------------------------------------------------------

double mse(const Image& x, const Image& xhat) {
  require(x.same_shape(xhat), "mse: image dims mismatch");
  require(!x.empty(), "mse: empty image");
  double acc = 0.0;
  auto a = x.data();
  auto b = xhat.data();
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double d = a[i] - b[i];
    acc += d * d;
  }
  return acc / static_cast<double>(a.size());
}

double psnr(const Image& x, const Image& xhat) {
  const double e = mse(x, xhat);
  if (e == 0.0) return kExactPsnr;
  const double m = x.range();
  return 10.0 * std::log10(m * m / e);
}

// --- SSIM -------------------------------------------------------------------

std::vector<double> SsimParams::weights() const {
  require(window >= 1, "ssim: window must be >= 1");
  require(sigma > 0.0, "ssim: sigma must be > 0");
  std::vector<double> w(window * window);
  const double c = (static_cast<double>(window) - 1.0) / 2.0;
  double total = 0.0;
  for (std::size_t r = 0; r < window; ++r)
    for (std::size_t k = 0; k < window; ++k) {
      const double dr = static_cast<double>(r) - c;
      const double dk = static_cast<double>(k) - c;
      w[r * window + k] = std::exp(-(dr * dr + dk * dk) / (2.0 * sigma * sigma));
      total += w[r * window + k];
    }
  for (double& v : w) v /= total;
  return w;
}

namespace {

// Weighted SSIM of the window whose top-left corner is (r0, c0).
double ssim_at(const Image& x, const Image& y, std::size_t r0, std::size_t c0, std::size_t win,
               const std::vector<double>& w, double alpha, double beta) {
  double mx = 0.0;
  double my = 0.0;
  for (std::size_t r = 0; r < win; ++r)
    for (std::size_t c = 0; c < win; ++c) {
      const double wt = w[r * win + c];
      mx += wt * x(r0 + r, c0 + c);
      my += wt * y(r0 + r, c0 + c);
    }
  double vx = 0.0;
  double vy = 0.0;
  double cxy = 0.0;
  for (std::size_t r = 0; r < win; ++r)
    for (std::size_t c = 0; c < win; ++c) {
      const double wt = w[r * win + c];
      const double dx = x(r0 + r, c0 + c) - mx;
      const double dy = y(r0 + r, c0 + c) - my;
      vx += wt * dx * dx;
      vy += wt * dy * dy;
      cxy += wt * dx * dy;
    }
  return ((2.0 * mx * my + alpha) * (2.0 * cxy + beta)) /
         ((mx * mx + my * my + alpha) * (vx + vy + beta));
}

}  // namespace

double ssim_window(const Image& xw, const Image& yw, const SsimParams& p) {
  require(xw.same_shape(yw), "ssim_window: window dims mismatch");
  const Image x = luma_plane(xw);
  const Image y = luma_plane(yw);
  require(x.height() == p.window && x.width() == p.window,
          "ssim_window: window dims do not match parameters");
  const double m = x.range();
  return ssim_at(x, y, 0, 0, p.window, p.weights(), p.alpha(m), p.beta(m));
}

double mssim(const Image& x, const Image& xhat, const SsimParams& p) {
  const auto pair = detail::luma_pair(x, xhat, "mssim");
  const std::size_t win = p.window;
  require(pair.ref.height() >= win && pair.ref.width() >= win, "mssim: image smaller than window");
  const auto w = p.weights();
  const double m = pair.ref.range();
  const double alpha = p.alpha(m);
  const double beta = p.beta(m);
  const std::size_t nr = pair.ref.height() - win + 1;
  const std::size_t nc = pair.ref.width() - win + 1;
  double total = 0.0;
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) total += ssim_at(pair.ref, pair.test, r, c, win, w, alpha, beta);
  return total / static_cast<double>(nr * nc);
}

// --- GSM --------------------------------------------------------------------

namespace {

const std::array<std::array<double, 25>, 4>& gsm_kernels() {
  static const std::array<std::array<double, 25>, 4> k = {{
      {0, 0, 0, 0, 0, 1, 3, 8, 3, 1, 0, 0, 0, 0, 0, -1, -3, -8, -3, -1, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 8, 3, 0, 0, 1, 3, 0, -3, -1, 0, 0, -3, -8, 0, 0, 0, -1, 0, 0},
      {0, 0, 1, 0, 0, 0, 0, 3, 8, 0, -1, -3, 0, 3, 1, 0, -8, -3, 0, 0, 0, 0, -1, 0, 0},
      {0, 1, 0, -1, 0, 0, 3, 0, -3, 0, 0, 8, 0, -8, 0, 0, 3, 0, -3, 0, 0, 1, 0, -1, 0},
  }};
  return k;
}

}  // namespace

Image gsm_gradient_map(const Image& plane) {
  require(plane.is_plane(), "gsm_gradient_map expects a plane");
  require(plane.height() >= 5 && plane.width() >= 5, "gsm: image smaller than 5x5");
  const auto& kernels = gsm_kernels();
  Image g(plane.height() - 4, plane.width() - 4, 1, plane.range());
  for (std::size_t r = 0; r < g.height(); ++r)
    for (std::size_t c = 0; c < g.width(); ++c) {
      double best = 0.0;
      for (const auto& k : kernels) {
        double acc = 0.0;
        for (std::size_t a = 0; a < 5; ++a)
          for (std::size_t b = 0; b < 5; ++b) acc += plane(r + a, c + b) * k[a * 5 + b];
        best = std::max(best, std::abs(acc / 25.0));
      }
      g(r, c) = best;
    }
  return g;
}

double gsm_local(double g_ref, double g_test, double c) {
  const double mx = std::max(g_ref, g_test);
  const double d = mx > 0.0 ? std::abs(g_ref - g_test) / mx : 0.0;
  const double s = 1.0 - d;
  return (2.0 * s + c) / (1.0 + s * s + c);
}

double gsm(const Image& x, const Image& xhat) {
  const auto p = detail::luma_pair(x, xhat, "gsm");
  const Image gr = gsm_gradient_map(p.ref);
  const Image gc = gsm_gradient_map(p.test);
  const double m = p.ref.range();
  const double c = 1e-4 * m * m;
  double total = 0.0;
  for (std::size_t i = 0; i < gr.size(); ++i) total += gsm_local(gr.data()[i], gc.data()[i], c);
  return total / static_cast<double>(gr.size());
}

// --- VIF --------------------------------------------------------------------

namespace {

Image gaussian_valid(const Image& src, std::size_t n, double sigma) {
  require(src.height() >= n && src.width() >= n, "vif: image too small for the scale window");
  const double c = (static_cast<double>(n) - 1.0) / 2.0;
  std::vector<double> w(n * n);
  double total = 0.0;
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t k = 0; k < n; ++k) {
      const double dr = static_cast<double>(r) - c;
      const double dk = static_cast<double>(k) - c;
      w[r * n + k] = std::exp(-(dr * dr + dk * dk) / (2.0 * sigma * sigma));
      total += w[r * n + k];
    }
  for (double& v : w) v /= total;
  Image out(src.height() - n + 1, src.width() - n + 1, 1, src.range());
  for (std::size_t r = 0; r < out.height(); ++r)
    for (std::size_t k = 0; k < out.width(); ++k) {
      double acc = 0.0;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) acc += w[a * n + b] * src(r + a, k + b);
      out(r, k) = acc;
    }
  return out;
}

Image product(const Image& a, const Image& b) {
  Image out = a;
  for (std::size_t i = 0; i < out.size(); ++i) out.data()[i] *= b.data()[i];
  return out;
}

Image decimate2(const Image& src) {
  Image out((src.height() + 1) / 2, (src.width() + 1) / 2, 1, src.range());
  for (std::size_t r = 0; r < out.height(); ++r)
    for (std::size_t c = 0; c < out.width(); ++c) out(r, c) = src(2 * r, 2 * c);
  return out;
}

}  // namespace

double vif(const Image& x, const Image& xhat) {
  const auto p = detail::luma_pair(x, xhat, "vif");
  const double m = p.ref.range();
  const double noise_var = 2.0 * (m / 255.0) * (m / 255.0);
  constexpr double tiny = 1e-10;

  Image ref = p.ref;
  Image dist = p.test;
  double num = 0.0;
  double den = 0.0;
  for (int scale = 1; scale <= 4; ++scale) {
    const std::size_t n = (std::size_t{1} << (4 - scale + 1)) + 1;
    const double sigma = static_cast<double>(n) / 5.0;
    if (scale > 1) {
      ref = decimate2(gaussian_valid(ref, n, sigma));
      dist = decimate2(gaussian_valid(dist, n, sigma));
    }
    const Image mu1 = gaussian_valid(ref, n, sigma);
    const Image mu2 = gaussian_valid(dist, n, sigma);
    const Image e11 = gaussian_valid(product(ref, ref), n, sigma);
    const Image e22 = gaussian_valid(product(dist, dist), n, sigma);
    const Image e12 = gaussian_valid(product(ref, dist), n, sigma);
    for (std::size_t i = 0; i < mu1.size(); ++i) {
      const double m1 = mu1.data()[i];
      const double m2 = mu2.data()[i];
      double s1 = std::max(0.0, e11.data()[i] - m1 * m1);
      const double s2 = std::max(0.0, e22.data()[i] - m2 * m2);
      const double s12 = e12.data()[i] - m1 * m2;

      // No stabiliser in the gain: s1 < tiny is handled below, and the noise
      // floor keeps the log argument finite, so (x, x) scores exactly 1.
      double g = s1 >= tiny ? s12 / s1 : 0.0;
      double sv = s2 - g * s12;
      if (s1 < tiny) {
        g = 0.0;
        sv = s2;
        s1 = 0.0;
      }
      if (s2 < tiny) {
        g = 0.0;
        sv = 0.0;
      }
      if (g < 0.0) {
        sv = s2;
        g = 0.0;
      }
      sv = std::max(sv, 0.0);
      num += std::log10(1.0 + g * g * s1 / (sv + noise_var));
      den += std::log10(1.0 + s1 / noise_var);
    }
  }
  if (den <= 0.0) {
    if (p.ref == p.test) return 1.0;
    throw Error("vif: reference has zero variance; only identical inputs are defined");
  }
  return num / den;
}

}  // namespace wavesr
