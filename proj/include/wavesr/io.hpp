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

#include <iosfwd>
#include <string>
#include <variant>

#include "wavesr/dwt.hpp"
#include "wavesr/ghm.hpp"
#include "wavesr/image.hpp"
#include "wavesr/sr.hpp"

namespace wavesr {

// --- images -----------------------------------------------------------------

/// PNG (8-bit gray, gray+alpha, RGB, RGBA, palette) or PGM/PPM (P2, P3, P5,
/// P6, maxval <= 255). Alpha is dropped; gray loads as a plane, everything
/// else as RGB. Range is 255.
Image load_image(const std::string& path);

/// Format from the extension (.png, .pgm, .ppm, .pnm). Samples are scaled to
/// 8 bits by 255 / range, rounded and clamped.
void save_image(const Image& img, const std::string& path);

// --- subband files ----------------------------------------------------------

/// One JSON header line, then little-endian float32 planes in band order.
using BandFile = std::variant<SubbandSet, GhmSubbands>;

void write_bands(std::ostream& out, const BandFile& bands);
BandFile read_bands(std::istream& in);
void save_bands(const BandFile& bands, const std::string& path);
BandFile load_bands(const std::string& path);

// --- model files ------------------------------------------------------------

/// JSON manifest line, then every layer's weights and bias as little-endian
/// float32 in layer order.
void write_model(std::ostream& out, const SrModel& model);
SrModel read_model(std::istream& in);
void save_model(const SrModel& model, const std::string& path);
SrModel load_model(const std::string& path);

}  // namespace wavesr
