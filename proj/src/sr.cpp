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

#include "wavesr/sr.hpp"

#include <algorithm>
#include <cmath>

#include "wavesr/dwt.hpp"
#include "wavesr/error.hpp"
#include "wavesr/ghm.hpp"
#include "wavesr/grid.hpp"
#include "wavesr/wavelets.hpp"

namespace wavesr {

namespace {

void put_plane(Tensor4& t, std::size_t c, const Image& plane) {
  std::copy(plane.data().begin(), plane.data().end(), t.plane(0, c));
}

Image get_plane(const Tensor4& t, std::size_t n, std::size_t c) {
  Image out(t.height, t.width, 1, 1.0);
  std::copy_n(t.plane(n, c), t.plane_size(), out.data().begin());
  return out;
}

Image scaled(const Image& plane, double factor) {
  Image out = plane;
  for (double& v : out.data()) v *= factor;
  return out;
}

std::size_t scaled_dim(std::size_t d, double scale) {
  return std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(static_cast<double>(d) * scale)));
}

}  // namespace

SrTransform SrTransform::single(std::string wavelet) {
  get_wavelet(wavelet);  // validates the name
  return {Kind::single, std::move(wavelet)};
}

SrTransform SrTransform::ghm() { return {Kind::ghm, ""}; }

std::string SrTransform::name() const { return kind == Kind::ghm ? "ghm" : wavelet; }

std::vector<std::size_t> SrTransform::residual_channels(bool detail_only) const {
  if (kind == Kind::single) return {1, 2, 3};
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < 16; ++i)
    if (!detail_only || !GhmSubbands::is_approximation(i)) out.push_back(i);
  return out;
}

Tensor4 SrTransform::decompose(const Image& plane) const {
  require(plane.is_plane(), "sr decompose expects a plane");
  if (kind == Kind::single) {
    const SubbandSet s = dwt2d(plane, get_wavelet(wavelet));
    Tensor4 t(1, 4, s.band_height(), s.band_width());
    put_plane(t, 0, s.ll);
    put_plane(t, 1, s.lh);
    put_plane(t, 2, s.hl);
    put_plane(t, 3, s.hh);
    return t;
  }
  const GhmSubbands g = ghm_decompose(plane);
  Tensor4 t(1, 16, g.band_height(), g.band_width());
  for (std::size_t i = 0; i < 16; ++i) put_plane(t, i, g.bands[i]);
  return t;
}

Image SrTransform::reconstruct(const Tensor4& bands, std::size_t height, std::size_t width) const {
  require(bands.batch == 1 && bands.channels == band_count(), "band tensor does not match transform layout");
  if (kind == Kind::single) {
    SubbandSet s;
    s.ll = get_plane(bands, 0, 0);
    s.lh = get_plane(bands, 0, 1);
    s.hl = get_plane(bands, 0, 2);
    s.hh = get_plane(bands, 0, 3);
    s.wavelet = wavelet;
    s.src_height = height;
    s.src_width = width;
    return idwt2d(s, get_wavelet(wavelet));
  }
  GhmSubbands g;
  for (std::size_t i = 0; i < 16; ++i) g.bands[i] = get_plane(bands, 0, i);
  g.src_height = height;
  g.src_width = width;
  return ghm_reconstruct(g);
}

SrModel make_model(const SrTransform& transform, std::uint64_t seed, const NetworkShape& shape,
                   double scale) {
  require(scale > 0.0, "scale must be positive");
  SrModel m;
  m.transform = transform;
  m.seed = seed;
  m.scale = scale;
  m.net = Network::create(transform.band_count(), transform.residual_channels(shape.ghm_detail_only), seed,
                          shape.depth, shape.width);
  return m;
}

TrainingPair make_training_pair(const Image& upscaled, const Image& truth, const SrTransform& transform) {
  require(upscaled.same_shape(truth), "training pair dims mismatch");
  const Image u = luma_plane(upscaled);
  const Image t = luma_plane(truth);
  return {transform.decompose(scaled(u, 1.0 / u.range())), transform.decompose(scaled(t, 1.0 / t.range()))};
}

Image enhance(const Image& upscaled, const SrModel& model) {
  require(!upscaled.empty(), "enhance: empty image");
  require(model.net.input_bands == model.transform.band_count(), "model network does not match transform layout");
  model.net.validate();
  const double m = upscaled.range();
  const Image y = luma_plane(upscaled);
  Tensor4 bands = model.transform.decompose(scaled(y, 1.0 / m));
  const Tensor4 residual = network_forward(bands, model.net);
  for (std::size_t k = 0; k < model.net.residual_channels.size(); ++k) {
    double* dst = bands.plane(0, model.net.residual_channels[k]);
    const double* src = residual.plane(0, k);
    for (std::size_t i = 0; i < bands.plane_size(); ++i) dst[i] += src[i];
  }
  Image out = model.transform.reconstruct(bands, y.height(), y.width());
  out = clamp(scaled(out, m), 0.0, m);
  out.set_range(m);
  if (upscaled.is_plane()) return out;
  return clamp(from_luma(out, to_chroma(upscaled)), 0.0, m);
}

Image bicubic_baseline(const Image& lr, double scale, std::size_t height, std::size_t width) {
  require(scale > 0.0, "scale must be positive");
  if (height == 0) height = scaled_dim(lr.height(), scale);
  if (width == 0) width = scaled_dim(lr.width(), scale);
  const double m = lr.range();
  Image up(height, width, lr.channels(), m);
  for (std::size_t c = 0; c < lr.channels(); ++c)
    up.set_channel(c, fit_to(bicubic_resize(lr.channel(c), scale), height, width));
  return clamp(up, 0.0, m);
}

Image predict_sr(const Image& lr, const SrModel& model, std::size_t height, std::size_t width) {
  return enhance(bicubic_baseline(lr, model.scale, height, width), model);
}

}  // namespace wavesr
