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

void write_plane(std::ostream& out, const Image& p) {
  for (double v : p.data()) detail::write_f32(out, v);
}

Image read_plane(std::istream& in, std::size_t h, std::size_t w) {
  Image p(h, w, 1, 1.0);
  for (double& v : p.data()) v = detail::read_f32(in);
  return p;
}

}  // namespace

void write_bands(std::ostream& out, const BandFile& bands) {
  nlohmann::json h;
  if (const auto* s = std::get_if<SubbandSet>(&bands)) {
    s->validate();
    h = {{"transform", "single"},         {"wavelet", s->wavelet},
         {"src_height", s->src_height},   {"src_width", s->src_width},
         {"band_height", s->band_height()}, {"band_width", s->band_width()}};
    out << h.dump() << '\n';
    for (const Image* p : {&s->ll, &s->lh, &s->hl, &s->hh}) write_plane(out, *p);
  } else {
    const auto& g = std::get<GhmSubbands>(bands);
    g.validate();
    h = {{"transform", "ghm"},           {"layout_version", GhmSubbands::layout_version},
         {"src_height", g.src_height},   {"src_width", g.src_width},
         {"band_height", g.band_height()}, {"band_width", g.band_width()}};
    out << h.dump() << '\n';
    for (const Image& p : g.bands) write_plane(out, p);
  }
  require(static_cast<bool>(out), "band file: write failed");
}

BandFile read_bands(std::istream& in) {
  constexpr const char* what = "band file";
  const auto h = detail::read_header(in, what);
  const std::string transform = h.value("transform", std::string("single"));
  const auto bh = detail::field<std::size_t>(h, "band_height", what);
  const auto bw = detail::field<std::size_t>(h, "band_width", what);
  const auto sh = detail::field<std::size_t>(h, "src_height", what);
  const auto sw = detail::field<std::size_t>(h, "src_width", what);
  require(bh > 0 && bw > 0, "band file: empty bands");
  if (transform == "ghm") {
    require(detail::field<int>(h, "layout_version", what) == GhmSubbands::layout_version,
            "band file: unsupported GHM layout version");
    GhmSubbands g;
    g.src_height = sh;
    g.src_width = sw;
    for (Image& p : g.bands) p = read_plane(in, bh, bw);
    g.validate();
    return g;
  }
  require(transform == "single", "band file: unknown transform '" + transform + "'");
  SubbandSet s;
  s.wavelet = detail::field<std::string>(h, "wavelet", what);
  require(is_registered(s.wavelet), "band file: unknown wavelet '" + s.wavelet + "'");
  s.src_height = sh;
  s.src_width = sw;
  s.ll = read_plane(in, bh, bw);
  s.lh = read_plane(in, bh, bw);
  s.hl = read_plane(in, bh, bw);
  s.hh = read_plane(in, bh, bw);
  s.validate();
  return s;
}

void save_bands(const BandFile& bands, const std::string& path) {
  std::ofstream f(path, std::ios::binary);
  require(static_cast<bool>(f), path + ": cannot open for writing");
  write_bands(f, bands);
}

BandFile load_bands(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(static_cast<bool>(f), path + ": cannot open");
  return read_bands(f);
}

}  // namespace wavesr
