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

// Frequency-domain metrics: FSIM, SR-SIM and MAD.

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "fft.hpp"
#include "iqa_detail.hpp"
#include "wavesr/error.hpp"
#include "wavesr/grid.hpp"
#include "wavesr/iqa.hpp"

namespace wavesr {

namespace {

using detail::ComplexPlane;
using detail::FrequencyGrid;

constexpr double kPi = std::numbers::pi;

double median(std::vector<double> v) {
  const std::size_t n = v.size();
  auto mid = v.begin() + static_cast<std::ptrdiff_t>(n / 2);
  std::nth_element(v.begin(), mid, v.end());
  const double hi = *mid;
  if (n % 2 == 1) return hi;
  const double lo = *std::max_element(v.begin(), mid);
  return 0.5 * (lo + hi);
}

ComplexPlane multiply(const ComplexPlane& spec, const std::vector<double>& filter) {
  ComplexPlane out = spec;
  for (std::size_t i = 0; i < out.data.size(); ++i) out.data[i] *= filter[i];
  return out;
}

// Radial log-Gabor transfer function with DC removed. `radius` must have a
// nonzero value at DC (it is overwritten afterwards).
std::vector<double> log_gabor(const FrequencyGrid& g, double wavelength, double sigma_on_f,
                              const std::vector<double>* lowpass) {
  const double fo = 1.0 / wavelength;
  const double denom = 2.0 * std::log(sigma_on_f) * std::log(sigma_on_f);
  std::vector<double> out(g.rows * g.cols);
  for (std::size_t r = 0; r < g.rows; ++r)
    for (std::size_t c = 0; c < g.cols; ++c) {
      const double rad = (r == 0 && c == 0) ? 1.0 : g.radius(r, c);
      const double l = std::log(rad / fo);
      double v = std::exp(-(l * l) / denom);
      if (lowpass) v *= (*lowpass)[r * g.cols + c];
      out[r * g.cols + c] = v;
    }
  out[0] = 0.0;
  return out;
}

std::vector<double> angular_spread(const FrequencyGrid& g, double angle, double theta_sigma) {
  std::vector<double> out(g.rows * g.cols);
  const double ca = std::cos(angle);
  const double sa = std::sin(angle);
  for (std::size_t r = 0; r < g.rows; ++r)
    for (std::size_t c = 0; c < g.cols; ++c) {
      const double th = g.theta(r, c);
      const double ds = std::sin(th) * ca - std::cos(th) * sa;
      const double dc = std::cos(th) * ca + std::sin(th) * sa;
      const double dtheta = std::abs(std::atan2(ds, dc));
      out[r * g.cols + c] = std::exp(-(dtheta * dtheta) / (2.0 * theta_sigma * theta_sigma));
    }
  return out;
}

// Correlation with an arbitrary kernel; zero or replicate padding, no size
// restriction relative to the plane.
Image filter_same(const Image& src, const std::vector<double>& k, std::size_t kr, std::size_t kc,
                  bool replicate) {
  const auto ar = static_cast<std::ptrdiff_t>((kr - 1) / 2);
  const auto ac = static_cast<std::ptrdiff_t>((kc - 1) / 2);
  const auto h = static_cast<std::ptrdiff_t>(src.height());
  const auto w = static_cast<std::ptrdiff_t>(src.width());
  Image out(src.height(), src.width(), 1, src.range());
  for (std::ptrdiff_t i = 0; i < h; ++i)
    for (std::ptrdiff_t j = 0; j < w; ++j) {
      double acc = 0.0;
      for (std::size_t a = 0; a < kr; ++a) {
        std::ptrdiff_t y = i + static_cast<std::ptrdiff_t>(a) - ar;
        if (y < 0 || y >= h) {
          if (!replicate) continue;
          y = std::clamp<std::ptrdiff_t>(y, 0, h - 1);
        }
        for (std::size_t b = 0; b < kc; ++b) {
          std::ptrdiff_t x = j + static_cast<std::ptrdiff_t>(b) - ac;
          if (x < 0 || x >= w) {
            if (!replicate) continue;
            x = std::clamp<std::ptrdiff_t>(x, 0, w - 1);
          }
          acc += k[a * kc + b] * src(static_cast<std::size_t>(y), static_cast<std::size_t>(x));
        }
      }
      out(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = acc;
    }
  return out;
}

double similarity(double a, double b, double c) { return (2.0 * a * b + c) / (a * a + b * b + c); }

}  // namespace

// --- FSIM -------------------------------------------------------------------

Image phase_congruency(const Image& plane) {
  require(plane.is_plane(), "phase_congruency expects a plane");
  require(plane.height() >= 2 && plane.width() >= 2, "phase_congruency: image too small");
  constexpr int nscale = 4;
  constexpr int norient = 4;
  constexpr double min_wavelength = 6.0;
  constexpr double mult = 2.0;
  constexpr double sigma_on_f = 0.55;
  constexpr double dtheta_on_sigma = 1.2;
  constexpr double k = 2.0;
  constexpr double epsilon = 1e-4;

  const std::size_t rows = plane.height();
  const std::size_t cols = plane.width();
  const std::size_t n = rows * cols;
  const auto grid = detail::frequency_grid(rows, cols);
  const ComplexPlane spectrum = detail::fft2(detail::to_complex(plane));

  std::vector<double> lowpass(n);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c)
      lowpass[r * cols + c] = 1.0 / (1.0 + std::pow(grid.radius(r, c) / 0.45, 30.0));

  std::vector<std::vector<double>> gabor;
  for (int s = 0; s < nscale; ++s)
    gabor.push_back(log_gabor(grid, min_wavelength * std::pow(mult, s), sigma_on_f, &lowpass));

  const double theta_sigma = kPi / norient / dtheta_on_sigma;
  std::vector<double> energy_all(n, 0.0);
  std::vector<double> an_all(n, 0.0);

  for (int o = 0; o < norient; ++o) {
    const auto spread = angular_spread(grid, o * kPi / norient, theta_sigma);
    std::vector<double> sum_e(n, 0.0), sum_o(n, 0.0), sum_an(n, 0.0);
    std::vector<ComplexPlane> eo;
    std::vector<std::vector<double>> spatial;  // real impulse responses * sqrt(n)
    double em_n = 0.0;
    for (int s = 0; s < nscale; ++s) {
      std::vector<double> filter(n);
      for (std::size_t i = 0; i < n; ++i) filter[i] = gabor[s][i] * spread[i];
      if (s == 0)
        for (double f : filter) em_n += f * f;
      ComplexPlane fc(rows, cols);
      for (std::size_t i = 0; i < n; ++i) fc.data[i] = filter[i];
      const ComplexPlane imp = detail::ifft2(fc);
      std::vector<double> sp(n);
      for (std::size_t i = 0; i < n; ++i) sp[i] = imp.data[i].real() * std::sqrt(static_cast<double>(n));
      spatial.push_back(std::move(sp));
      eo.push_back(detail::ifft2(multiply(spectrum, filter)));
      for (std::size_t i = 0; i < n; ++i) {
        sum_an[i] += std::abs(eo.back().data[i]);
        sum_e[i] += eo.back().data[i].real();
        sum_o[i] += eo.back().data[i].imag();
      }
    }
    std::vector<double> energy(n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
      const double xe = std::hypot(sum_e[i], sum_o[i]) + epsilon;
      const double me = sum_e[i] / xe;
      const double mo = sum_o[i] / xe;
      for (int s = 0; s < nscale; ++s) {
        const double e = eo[s].data[i].real();
        const double od = eo[s].data[i].imag();
        energy[i] += e * me + od * mo - std::abs(e * mo - od * me);
      }
    }

    // Noise threshold from the smallest-scale response.
    std::vector<double> e2(n);
    for (std::size_t i = 0; i < n; ++i) e2[i] = std::norm(eo[0].data[i]);
    const double mean_e2n = -median(std::move(e2)) / std::log(0.5);
    const double noise_power = em_n > 0.0 ? mean_e2n / em_n : 0.0;
    double sum_an2 = 0.0;
    double sum_aiaj = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      for (int s = 0; s < nscale; ++s) sum_an2 += spatial[s][i] * spatial[s][i];
      for (int a = 0; a < nscale - 1; ++a)
        for (int b = a + 1; b < nscale; ++b) sum_aiaj += spatial[a][i] * spatial[b][i];
    }
    const double noise_energy2 = 2.0 * noise_power * sum_an2 + 4.0 * noise_power * sum_aiaj;
    const double tau = std::sqrt(std::max(0.0, noise_energy2) / 2.0);
    const double noise_mean = tau * std::sqrt(kPi / 2.0);
    const double noise_sigma = std::sqrt((2.0 - kPi / 2.0) * tau * tau);
    const double t = (noise_mean + k * noise_sigma) / 1.7;

    for (std::size_t i = 0; i < n; ++i) {
      energy_all[i] += std::max(energy[i] - t, 0.0);
      an_all[i] += sum_an[i];
    }
  }

  Image pc(rows, cols, 1, 1.0);
  for (std::size_t i = 0; i < n; ++i) pc.data()[i] = energy_all[i] / (an_all[i] + epsilon);
  return pc;
}

double fsim(const Image& x, const Image& xhat) {
  auto p = detail::luma_pair(x, xhat, "fsim");
  require(p.ref.height() >= 3 && p.ref.width() >= 3, "fsim: image smaller than 3x3");
  const std::size_t f = detail::resolution_factor(p.ref);
  const Image y1 = detail::average_downsample(p.ref, f);
  const Image y2 = detail::average_downsample(p.test, f);
  const Image pc1 = phase_congruency(y1);
  const Image pc2 = phase_congruency(y2);
  const Image g1 = detail::scharr_magnitude(y1);
  const Image g2 = detail::scharr_magnitude(y2);
  const double m = p.ref.range() / 255.0;
  const double t1 = 0.85;
  const double t2 = 160.0 * m * m;
  double num = 0.0;
  double den = 0.0;
  double plain = 0.0;
  for (std::size_t i = 0; i < pc1.size(); ++i) {
    const double a = pc1.data()[i];
    const double b = pc2.data()[i];
    const double sim = similarity(a, b, t1) * similarity(g1.data()[i], g2.data()[i], t2);
    const double w = std::max(a, b);
    num += sim * w;
    den += w;
    plain += sim;
  }
  if (den <= 0.0) return plain / static_cast<double>(pc1.size());
  return num / den;
}

// --- SR-SIM -----------------------------------------------------------------

Image spectral_residual_saliency(const Image& plane) {
  require(plane.is_plane(), "spectral_residual_saliency expects a plane");
  require(plane.height() >= 16 && plane.width() >= 16, "srsim: image smaller than 16x16");
  const auto small_dim = [](std::size_t d) {
    return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(d * 0.25)));
  };
  // A flat plane has no spectral structure; FFT rounding noise would otherwise
  // masquerade as saliency.
  const auto [pmin, pmax] = std::minmax_element(plane.data().begin(), plane.data().end());
  if (*pmin == *pmax) return Image::filled(plane.height(), plane.width(), 1.0, 1, 1.0);
  const Image small = bicubic_resize_to(plane, small_dim(plane.height()), small_dim(plane.width()));
  const std::size_t rows = small.height();
  const std::size_t cols = small.width();
  const std::size_t n = rows * cols;

  const ComplexPlane spec = detail::fft2(detail::to_complex(small));
  Image log_amp(rows, cols, 1, 1.0);
  for (std::size_t i = 0; i < n; ++i) log_amp.data()[i] = std::log(std::max(std::abs(spec.data[i]), 1e-12));
  const Image smooth = filter_same(log_amp, std::vector<double>(9, 1.0 / 9.0), 3, 3, true);

  ComplexPlane residual(rows, cols);
  for (std::size_t i = 0; i < n; ++i) {
    const double mag = std::exp(log_amp.data()[i] - smooth.data()[i]);
    residual.data[i] = std::polar(mag, std::arg(spec.data[i]));
  }
  const ComplexPlane back = detail::ifft2(residual);
  Image sal(rows, cols, 1, 1.0);
  for (std::size_t i = 0; i < n; ++i) sal.data()[i] = std::norm(back.data[i]);

  std::vector<double> gk(100);
  double total = 0.0;
  for (std::size_t r = 0; r < 10; ++r)
    for (std::size_t c = 0; c < 10; ++c) {
      const double dr = static_cast<double>(r) - 4.5;
      const double dc = static_cast<double>(c) - 4.5;
      gk[r * 10 + c] = std::exp(-(dr * dr + dc * dc) / (2.0 * 3.8 * 3.8));
      total += gk[r * 10 + c];
    }
  for (double& v : gk) v /= total;
  sal = filter_same(sal, gk, 10, 10, false);

  const auto [lo, hi] = std::minmax_element(sal.data().begin(), sal.data().end());
  const double lo_v = *lo;
  const double span = *hi - lo_v;
  // Relative tolerance: a flat input leaves only rounding noise here.
  if (span <= 1e-9 * std::max(1.0, std::abs(*hi))) return Image::filled(plane.height(), plane.width(), 1.0, 1, 1.0);
  for (double& v : sal.data()) v = (v - lo_v) / span;
  Image out = bicubic_resize_to(sal, plane.height(), plane.width());
  return clamp(out, 0.0, 1.0);
}

double srsim(const Image& x, const Image& xhat) {
  auto p = detail::luma_pair(x, xhat, "srsim");
  const std::size_t f = detail::resolution_factor(p.ref);
  const Image y1 = detail::average_downsample(p.ref, f);
  const Image y2 = detail::average_downsample(p.test, f);
  const Image vs1 = spectral_residual_saliency(y1);
  const Image vs2 = spectral_residual_saliency(y2);
  const Image g1 = detail::scharr_magnitude(y1);
  const Image g2 = detail::scharr_magnitude(y2);
  const double m = p.ref.range() / 255.0;
  const double c1 = 0.40;
  const double c2 = 225.0 * m * m;
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < vs1.size(); ++i) {
    const double a = vs1.data()[i];
    const double b = vs2.data()[i];
    const double w = std::max(a, b);
    num += similarity(a, b, c1) * std::sqrt(similarity(g1.data()[i], g2.data()[i], c2)) * w;
    den += w;
  }
  require(den > 0.0, "srsim: saliency vanished");
  return num / den;
}

// --- MAD --------------------------------------------------------------------

double mad_gamma(double d_lum) { return 1.0 / (1.0 + 0.467 * std::pow(d_lum, 0.130)); }

double mad_blend(double d_lum, double d_gabor, double gamma) {
  require(d_lum >= 0.0 && d_gabor >= 0.0, "mad_blend: negative component");
  require(gamma >= 0.0 && gamma <= 1.0, "mad_blend: gamma outside [0, 1]");
  return std::pow(d_lum, gamma) * std::pow(d_gabor, 1.0 - gamma);
}

namespace {

constexpr std::size_t kBlock = 16;
constexpr std::size_t kStride = 4;

// Mannos-Sakrison contrast sensitivity with an oblique-effect adjustment,
// in unshifted FFT order.
std::vector<double> csf_filter(std::size_t rows, std::size_t cols) {
  const auto grid = detail::frequency_grid(rows, cols);
  constexpr double nfreq = 32.0;
  constexpr double w = 0.7;
  constexpr double f_peak = 7.8909;
  std::vector<double> out(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) {
      const double u = 2.0 * grid.fx[c];
      const double v = 2.0 * grid.fy[r];
      const double theta = std::atan2(v, u);
      const double s = (1.0 - w) / 2.0 * std::cos(4.0 * theta) + (1.0 + w) / 2.0;
      const double f = nfreq * std::hypot(u, v) / s;
      out[r * cols + c] = f < f_peak ? 0.9809 : 2.6 * (0.0192 + 0.114 * f) * std::exp(-std::pow(0.114 * f, 1.1));
    }
  return out;
}

Image apply_filter(const Image& plane, const std::vector<double>& filter) {
  const ComplexPlane out = detail::ifft2(multiply(detail::fft2(detail::to_complex(plane)), filter));
  Image res(plane.height(), plane.width(), 1, plane.range());
  for (std::size_t i = 0; i < res.size(); ++i) res.data()[i] = out.data[i].real();
  return res;
}

struct Moments {
  double mean = 0.0;
  double std = 0.0;
  double skew = 0.0;
  double kurt = 0.0;
};

Moments block_moments(const Image& p, std::size_t r0, std::size_t c0, std::size_t size) {
  const double n = static_cast<double>(size * size);
  double mean = 0.0;
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) mean += p(r0 + r, c0 + c);
  mean /= n;
  double m2 = 0.0, m3 = 0.0, m4 = 0.0;
  for (std::size_t r = 0; r < size; ++r)
    for (std::size_t c = 0; c < size; ++c) {
      const double d = p(r0 + r, c0 + c) - mean;
      m2 += d * d;
      m3 += d * d * d;
      m4 += d * d * d * d;
    }
  m2 /= n;
  m3 /= n;
  m4 /= n;
  Moments out;
  out.mean = mean;
  out.std = std::sqrt(m2);
  // Flat blocks: treat as Gaussian-like (skew 0, kurtosis 3).
  out.skew = m2 > 1e-20 ? m3 / std::pow(m2, 1.5) : 0.0;
  out.kurt = m2 > 1e-20 ? m4 / (m2 * m2) : 3.0;
  return out;
}

// Smallest standard deviation among the four 8x8 quadrants of a block.
double min_quadrant_std(const Image& p, std::size_t r0, std::size_t c0) {
  const std::size_t h = kBlock / 2;
  double best = block_moments(p, r0, c0, h).std;
  best = std::min(best, block_moments(p, r0 + h, c0, h).std);
  best = std::min(best, block_moments(p, r0, c0 + h, h).std);
  best = std::min(best, block_moments(p, r0 + h, c0 + h, h).std);
  return best;
}

double detection_stage(const Image& ref, const Image& dst) {
  const double m = ref.range();
  auto lightness = [m](const Image& src) {
    Image out = src;
    for (double& v : out.data()) v = std::pow(0.02874 * std::max(0.0, v) * 255.0 / m, 2.2 / 3.0);
    return out;
  };
  const auto csf = csf_filter(ref.height(), ref.width());
  const Image lref = apply_filter(lightness(ref), csf);
  const Image ldst = apply_filter(lightness(dst), csf);
  Image err = lref;
  for (std::size_t i = 0; i < err.size(); ++i) err.data()[i] -= ldst.data()[i];

  constexpr double kThreshold = -5.0;
  double acc = 0.0;
  std::size_t count = 0;
  for (std::size_t r = 0; r + kBlock <= ref.height(); r += kStride)
    for (std::size_t c = 0; c + kBlock <= ref.width(); c += kStride) {
      const double mu = block_moments(lref, r, c, kBlock).mean;
      const double std_org = min_quadrant_std(lref, r, c);
      const double std_err = block_moments(err, r, c, kBlock).std;
      double zeta = 0.0;
      if (mu > 0.0 && std_err > 0.0) {
        const double c_err = std::log(std_err / mu);
        const double c_org = std_org > 0.0 ? std::log(std_org / mu) : -INFINITY;
        if (c_org > kThreshold && c_err > c_org)
          zeta = c_err - c_org;
        else if (c_org <= kThreshold && c_err > kThreshold)
          zeta = c_err - kThreshold;
      }
      double lmse = 0.0;
      for (std::size_t a = 0; a < kBlock; ++a)
        for (std::size_t b = 0; b < kBlock; ++b) {
          const double d = (ref(r + a, c + b) - dst(r + a, c + b)) * 255.0 / m;
          lmse += d * d;
        }
      lmse /= static_cast<double>(kBlock * kBlock);
      const double v = zeta * lmse;
      acc += v * v;
      ++count;
    }
  return 200.0 * std::sqrt(acc / static_cast<double>(count));
}

double appearance_stage(const Image& ref, const Image& dst) {
  constexpr int nscale = 5;
  constexpr int norient = 4;
  constexpr std::array<double, nscale> weights = {0.5 / 13.25, 0.75 / 13.25, 1.0 / 13.25,
                                                  5.0 / 13.25, 6.0 / 13.25};
  const double scale = 255.0 / ref.range();
  const auto grid = detail::frequency_grid(ref.height(), ref.width());
  const ComplexPlane fr = detail::fft2(detail::to_complex(ref));
  const ComplexPlane fd = detail::fft2(detail::to_complex(dst));
  const double theta_sigma = kPi / norient / 1.5;

  const std::size_t nbr = (ref.height() - kBlock) / kStride + 1;
  const std::size_t nbc = (ref.width() - kBlock) / kStride + 1;
  std::vector<double> eta(nbr * nbc, 0.0);

  for (int o = 0; o < norient; ++o) {
    const auto spread = angular_spread(grid, o * kPi / norient, theta_sigma);
    for (int s = 0; s < nscale; ++s) {
      auto filter = log_gabor(grid, 3.0 * std::pow(3.0, s), 0.55, nullptr);
      for (std::size_t i = 0; i < filter.size(); ++i) filter[i] *= spread[i];
      const ComplexPlane rr = detail::ifft2(multiply(fr, filter));
      const ComplexPlane rd = detail::ifft2(multiply(fd, filter));
      Image ar(ref.height(), ref.width(), 1, 1.0);
      Image ad(ref.height(), ref.width(), 1, 1.0);
      for (std::size_t i = 0; i < ar.size(); ++i) {
        ar.data()[i] = std::abs(rr.data[i]) * scale;
        ad.data()[i] = std::abs(rd.data[i]) * scale;
      }
      for (std::size_t br = 0; br < nbr; ++br)
        for (std::size_t bc = 0; bc < nbc; ++bc) {
          const Moments a = block_moments(ar, br * kStride, bc * kStride, kBlock);
          const Moments b = block_moments(ad, br * kStride, bc * kStride, kBlock);
          eta[br * nbc + bc] += weights[s] * (std::abs(a.std - b.std) + 2.0 * std::abs(a.skew - b.skew) +
                                              std::abs(a.kurt - b.kurt));
        }
    }
  }
  double acc = 0.0;
  for (double e : eta) acc += e * e;
  return std::sqrt(acc / static_cast<double>(eta.size()));
}

}  // namespace

MadComponents mad_components(const Image& x, const Image& xhat) {
  auto p = detail::luma_pair(x, xhat, "mad");
  require(p.ref.height() >= kBlock && p.ref.width() >= kBlock, "mad: image smaller than 16x16");
  MadComponents out;
  if (p.ref == p.test) return out;
  out.d_lum = detection_stage(p.ref, p.test);
  out.d_gabor = appearance_stage(p.ref, p.test);
  out.gamma = mad_gamma(out.d_lum);
  out.value = mad_blend(out.d_lum, out.d_gabor, out.gamma);
  return out;
}

double mad(const Image& x, const Image& xhat) { return mad_components(x, xhat).value; }

}  // namespace wavesr
