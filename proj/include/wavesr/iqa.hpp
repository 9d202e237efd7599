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

#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include "wavesr/image.hpp"

namespace wavesr {

/// Full-reference quality measures. Everything except mse/psnr works on the
/// luma plane; colour inputs are converted first.
enum class Metric { psnr, ssim, fsim, gsm, mad, srsim, vif };

struct IqaScore {
  std::string metric;
  double value = 0.0;
  bool higher_is_better = true;
};

/// The seven metrics in report-column order.
const std::vector<Metric>& all_metrics();
const char* metric_name(Metric m);
Metric metric_from_name(std::string_view name);
bool higher_is_better(Metric m);

IqaScore score(Metric m, const Image& ref, const Image& test);

// --- MSE / PSNR -----------------------------------------------------------

/// Mean over all pixels and channels of (x - xhat)^2.
double mse(const Image& x, const Image& xhat);

/// 10 log10(m^2 / MSE) with m = x.range(). Identical inputs return the
/// exact-match sentinel +infinity.
double psnr(const Image& x, const Image& xhat);

constexpr double kExactPsnr = std::numeric_limits<double>::infinity();
inline bool is_exact_psnr(double v) { return v == kExactPsnr; }

// --- SSIM -------------------------------------------------------------------

struct SsimParams {
  std::size_t window = 11;  ///< square Gaussian window side
  double sigma = 1.5;
  double k1 = 0.01;
  double k2 = 0.03;

  double alpha(double range) const { return (k1 * range) * (k1 * range); }
  double beta(double range) const { return (k2 * range) * (k2 * range); }
  /// Normalised Gaussian weights, row-major, window * window entries.
  std::vector<double> weights() const;
};

/// SSIM of two windows whose dims equal the parameter window, using
/// Gaussian-weighted moments.
double ssim_window(const Image& xw, const Image& yw, const SsimParams& p = {});

/// Mean SSIM over every fully contained window position (stride 1).
double mssim(const Image& x, const Image& xhat, const SsimParams& p = {});

// --- GSM --------------------------------------------------------------------

/// Per-pixel gradient value over the valid interior: the largest
/// |mean(block .* K)| across the four 5x5 directional kernels.
Image gsm_gradient_map(const Image& plane);

/// Local score (2(1-D)+C) / (1+(1-D)^2+C) with D = |gr-gc| / max(gr, gc)
/// and D = 0 where both gradients vanish.
double gsm_local(double g_ref, double g_test, double c);

/// Mean local score; C = 1e-4 * m^2.
double gsm(const Image& x, const Image& xhat);

// --- FSIM -------------------------------------------------------------------

/// Phase congruency from a 4-scale, 4-orientation log-Gabor bank.
Image phase_congruency(const Image& plane);

double fsim(const Image& x, const Image& xhat);

// --- SR-SIM -----------------------------------------------------------------

/// Spectral-residual saliency normalised to [0, 1] at the input resolution.
/// A featureless (constant) image has uniform saliency.
Image spectral_residual_saliency(const Image& plane);

double srsim(const Image& x, const Image& xhat);

// --- MAD --------------------------------------------------------------------

struct MadComponents {
  double d_lum = 0.0;    ///< detection-stage visible-distortion norm
  double d_gabor = 0.0;  ///< appearance-stage log-Gabor statistics distance
  double gamma = 1.0;    ///< blend weight on d_lum
  double value = 0.0;
};

/// d_lum^gamma * d_gabor^(1-gamma).
double mad_blend(double d_lum, double d_gabor, double gamma);

/// 1 / (1 + 0.467 d_lum^0.130); close to 1 for near-invisible distortion.
double mad_gamma(double d_lum);

MadComponents mad_components(const Image& x, const Image& xhat);

/// Distortion orientation: 0 for identical images, larger is worse.
double mad(const Image& x, const Image& xhat);

// --- VIF --------------------------------------------------------------------

/// Four-scale pixel-domain VIF. Identical inputs give 1; contrast
/// enhancement can exceed 1. A reference with no variance at any scale is
/// only defined for identical inputs.
double vif(const Image& x, const Image& xhat);

}  // namespace wavesr
