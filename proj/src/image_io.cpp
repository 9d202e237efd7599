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

#include <png.h>

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>

#include "wavesr/error.hpp"
#include "wavesr/io.hpp"

namespace wavesr {

namespace {

std::string lower_extension(const std::string& path) {
  std::string ext = std::filesystem::path(path).extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext;
}

std::vector<std::uint8_t> to_bytes(const Image& img) {
  const double scale = 255.0 / img.range();
  std::vector<std::uint8_t> out(img.size());
  auto d = img.data();
  for (std::size_t i = 0; i < d.size(); ++i)
    out[i] = static_cast<std::uint8_t>(std::clamp(std::lround(d[i] * scale), 0L, 255L));
  return out;
}

Image load_png(const std::string& path) {
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  if (!png_image_begin_read_from_file(&png, path.c_str()))
    throw Error(path + ": cannot read PNG (" + png.message + ")");
  if (png.format & PNG_FORMAT_FLAG_LINEAR) {
    png_image_free(&png);
    throw Error(path + ": unsupported bit depth (16-bit PNG)");
  }
  const bool color = (png.format & PNG_FORMAT_FLAG_COLOR) != 0;
  png.format = color ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  const std::size_t channels = color ? 3 : 1;
  std::vector<std::uint8_t> buf(PNG_IMAGE_SIZE(png));
  if (!png_image_finish_read(&png, nullptr, buf.data(), 0, nullptr)) {
    const std::string msg = png.message;
    png_image_free(&png);
    throw Error(path + ": corrupt PNG (" + msg + ")");
  }
  std::vector<double> data(buf.begin(), buf.end());
  return Image(png.height, png.width, channels, std::move(data), 255.0);
}

// 16-bit PNGs read through the simplified API report a linear format only
// for some colour types, so check the IHDR bit depth directly.
void reject_deep_png(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  std::uint8_t head[25] = {};
  f.read(reinterpret_cast<char*>(head), sizeof head);
  if (f.gcount() == sizeof head && head[24] == 16) throw Error(path + ": unsupported bit depth (16-bit PNG)");
}

void save_png(const Image& img, const std::string& path) {
  require(img.channels() == 1 || img.channels() == 3, "save_image: PNG needs 1 or 3 channels");
  png_image png{};
  png.version = PNG_IMAGE_VERSION;
  png.width = static_cast<png_uint_32>(img.width());
  png.height = static_cast<png_uint_32>(img.height());
  png.format = img.channels() == 3 ? PNG_FORMAT_RGB : PNG_FORMAT_GRAY;
  const auto bytes = to_bytes(img);
  if (!png_image_write_to_file(&png, path.c_str(), 0, bytes.data(), 0, nullptr))
    throw Error(path + ": cannot write PNG (" + png.message + ")");
}

class PnmReader {
 public:
  PnmReader(std::string data, std::string path) : data_(std::move(data)), path_(std::move(path)) {}

  std::string magic() {
    require(data_.size() >= 2 && data_[0] == 'P', path_ + ": not a PNM file");
    pos_ = 2;
    return data_.substr(0, 2);
  }

  long number() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < data_.size() && std::isdigit(static_cast<unsigned char>(data_[pos_]))) ++pos_;
    require(pos_ > start, path_ + ": corrupt PNM header or data");
    return std::stol(data_.substr(start, pos_ - start));
  }

  // Exactly one whitespace byte separates the header from binary data.
  std::size_t binary_start() {
    require(pos_ < data_.size(), path_ + ": truncated PNM");
    return pos_ + 1;
  }

  const std::string& data() const { return data_; }

 private:
  void skip_space() {
    while (pos_ < data_.size()) {
      if (data_[pos_] == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n') ++pos_;
      } else if (std::isspace(static_cast<unsigned char>(data_[pos_]))) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  std::string data_;
  std::string path_;
  std::size_t pos_ = 0;
};

Image load_pnm(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  require(static_cast<bool>(f), path + ": cannot open");
  std::stringstream ss;
  ss << f.rdbuf();
  PnmReader r(ss.str(), path);
  const std::string magic = r.magic();
  require(magic == "P2" || magic == "P3" || magic == "P5" || magic == "P6",
          path + ": unsupported PNM variant " + magic);
  const std::size_t channels = (magic == "P3" || magic == "P6") ? 3 : 1;
  const long w = r.number();
  const long h = r.number();
  const long maxval = r.number();
  require(w > 0 && h > 0, path + ": bad PNM dimensions");
  if (maxval > 255) throw Error(path + ": unsupported bit depth (maxval " + std::to_string(maxval) + ")");
  require(maxval > 0, path + ": bad PNM maxval");
  const std::size_t count = static_cast<std::size_t>(w) * static_cast<std::size_t>(h) * channels;
  std::vector<double> data(count);
  const double scale = 255.0 / static_cast<double>(maxval);
  if (magic == "P2" || magic == "P3") {
    for (auto& v : data) {
      const long s = r.number();
      require(s <= maxval, path + ": sample exceeds maxval");
      v = static_cast<double>(s) * scale;
    }
  } else {
    const std::size_t start = r.binary_start();
    require(r.data().size() >= start + count, path + ": truncated PNM data");
    for (std::size_t i = 0; i < count; ++i)
      data[i] = static_cast<double>(static_cast<unsigned char>(r.data()[start + i])) * scale;
  }
  return Image(static_cast<std::size_t>(h), static_cast<std::size_t>(w), channels, std::move(data), 255.0);
}

void save_pnm(const Image& img, const std::string& path, bool color) {
  require(img.channels() == (color ? 3u : 1u),
          path + ": " + (color ? "PPM needs 3 channels" : "PGM needs 1 channel"));
  std::ofstream f(path, std::ios::binary);
  require(static_cast<bool>(f), path + ": cannot open for writing");
  f << (color ? "P6" : "P5") << '\n' << img.width() << ' ' << img.height() << "\n255\n";
  const auto bytes = to_bytes(img);
  f.write(reinterpret_cast<const char*>(bytes.data()), static_cast<std::streamsize>(bytes.size()));
  require(static_cast<bool>(f), path + ": write failed");
}

}  // namespace

Image load_image(const std::string& path) {
  require(std::filesystem::exists(path), path + ": no such file");
  std::ifstream f(path, std::ios::binary);
  char sig[8] = {};
  f.read(sig, sizeof sig);
  static const unsigned char png_sig[8] = {0x89, 'P', 'N', 'G', '\r', '\n', 0x1a, '\n'};
  if (f.gcount() == 8 && std::equal(sig, sig + 8, reinterpret_cast<const char*>(png_sig))) {
    reject_deep_png(path);
    return load_png(path);
  }
  if (f.gcount() >= 2 && sig[0] == 'P') return load_pnm(path);
  throw Error(path + ": unsupported image format");
}

void save_image(const Image& img, const std::string& path) {
  require(!img.empty(), "save_image: empty image");
  const std::string ext = lower_extension(path);
  if (ext == ".png") return save_png(img, path);
  if (ext == ".pgm") return save_pnm(img, path, false);
  if (ext == ".ppm") return save_pnm(img, path, true);
  if (ext == ".pnm") return save_pnm(img, path, img.channels() == 3);
  throw Error(path + ": unsupported output format '" + ext + "'");
}

}  // namespace wavesr
