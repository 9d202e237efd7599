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

#include <fstream>

#include "binary.hpp"
#include "wavesr/io.hpp"
#include "wavesr/wavelets.hpp"

namespace wavesr {

namespace {
constexpr int kModelVersion = 1;
}

void write_model(std::ostream& out, const SrModel& model) {
  model.net.validate();
  nlohmann::json layers = nlohmann::json::array();
  for (const auto& l : model.net.layers)
    layers.push_back({{"in", l.in_channels()},
                      {"out", l.out_channels()},
                      {"kernel", 3},
                      {"activation", l.activation == Activation::relu ? "relu" : "linear"}});
  nlohmann::json h = {{"format", "wavesr-model"},
                      {"version", kModelVersion},
                      {"transform", model.transform.kind == SrTransform::Kind::ghm ? "ghm" : "single"},
                      {"wavelet", model.transform.wavelet},
                      {"input_bands", model.net.input_bands},
                      {"residual_channels", model.net.residual_channels},
                      {"layers", layers},
                      {"scale", model.scale},
                      {"seed", model.seed}};
  out << h.dump() << '\n';
  for (const auto& l : model.net.layers) {
    for (double v : l.weights.data) detail::write_f32(out, v);
    for (double v : l.bias) detail::write_f32(out, v);
  }
  require(static_cast<bool>(out), "model file: write failed");
}

SrModel read_model(std::istream& in) {
  constexpr const char* what = "model file";
  const auto h = detail::read_header(in, what);
  require(h.value("format", std::string()) == "wavesr-model", "model file: not a wavesr model");
  require(detail::field<int>(h, "version", what) == kModelVersion, "model file: unsupported version");
  SrModel m;
  const auto transform = detail::field<std::string>(h, "transform", what);
  if (transform == "ghm") {
    m.transform = SrTransform::ghm();
  } else {
    require(transform == "single", "model file: unknown transform '" + transform + "'");
    const auto wavelet = detail::field<std::string>(h, "wavelet", what);
    require(is_registered(wavelet), "model file: unknown wavelet '" + wavelet + "'");
    m.transform = SrTransform::single(wavelet);
  }
  m.scale = detail::field<double>(h, "scale", what);
  m.seed = detail::field<std::uint64_t>(h, "seed", what);
  m.net.input_bands = detail::field<std::size_t>(h, "input_bands", what);
  m.net.residual_channels = detail::field<std::vector<std::size_t>>(h, "residual_channels", what);
  m.net.output_bands = m.net.residual_channels.size();
  for (const auto& lj : detail::field<nlohmann::json>(h, "layers", what)) {
    require(detail::field<int>(lj, "kernel", what) == 3, "model file: only 3x3 kernels are supported");
    const auto act = detail::field<std::string>(lj, "activation", what);
    require(act == "relu" || act == "linear", "model file: unknown activation '" + act + "'");
    m.net.layers.push_back(ConvLayer::zeros(detail::field<std::size_t>(lj, "in", what),
                                            detail::field<std::size_t>(lj, "out", what),
                                            act == "relu" ? Activation::relu : Activation::linear));
  }
  m.net.validate();
  require(m.net.input_bands == m.transform.band_count(), "model file: band layout does not match transform");
  for (auto& l : m.net.layers) {
    for (double& v : l.weights.data) v = detail::read_f32(in);
    for (double& v : l.bias) v = detail::read_f32(in);
  }
  return m;
}

void save_model(const SrModel& model, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  require(static_cast<bool>(f), path + ": cannot open for writing");
  write_model(f, model);
}

SrModel load_model(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(static_cast<bool>(f), path + ": cannot open");
  return read_model(f);
}

}  // namespace wavesr
