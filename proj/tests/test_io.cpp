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

#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "support.hpp"
#include "wavesr/error.hpp"
#include "wavesr/io.hpp"
#include "wavesr/wavelets.hpp"

using namespace wavesr;
namespace fs = std::filesystem;

namespace {

class TempDir {
 public:
  TempDir() {
    path_ = fs::temp_directory_path() /
            ("wavesr_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(path_);
    fs::create_directories(path_);
  }
  ~TempDir() { fs::remove_all(path_); }
  std::string file(const std::string& name) const { return (path_ / name).string(); }

 private:
  fs::path path_;
};

void write_text(const std::string& path, const std::string& text) {
  std::ofstream(path, std::ios::binary) << text;
}

std::vector<double> values(const Image& img) { return {img.data().begin(), img.data().end()}; }

Image integer_image(std::size_t h, std::size_t w, std::size_t c, std::uint64_t seed) {
  Image img = testing_support::random_image(h, w, c, seed);
  for (double& v : img.data()) v = std::round(v);
  return img;
}

}  // namespace

TEST(ImageIo, PngRoundTripGray) {
  TempDir dir;
  const Image img = integer_image(13, 17, 1, 1);
  save_image(img, dir.file("a.png"));
  const Image back = load_image(dir.file("a.png"));
  EXPECT_EQ(back.channels(), 1u);
  EXPECT_EQ(back.range(), 255.0);
  EXPECT_EQ(values(back), values(img));
}

TEST(ImageIo, PngRoundTripRgb) {
  TempDir dir;
  const Image img = integer_image(9, 11, 3, 2);
  save_image(img, dir.file("a.png"));
  EXPECT_EQ(values(load_image(dir.file("a.png"))), values(img));
}

TEST(ImageIo, PnmRoundTrip) {
  TempDir dir;
  const Image g = integer_image(7, 5, 1, 3);
  save_image(g, dir.file("g.pgm"));
  EXPECT_EQ(values(load_image(dir.file("g.pgm"))), values(g));
  const Image c = integer_image(7, 5, 3, 4);
  save_image(c, dir.file("c.ppm"));
  EXPECT_EQ(values(load_image(dir.file("c.ppm"))), values(c));
}

TEST(ImageIo, AsciiAndBinaryPgmAgree) {
  TempDir dir;
  write_text(dir.file("a.pgm"), "P2\n# comment\n3 2\n255\n0 10 20\n30 40 255\n");
  write_text(dir.file("b.pgm"), std::string("P5 3 2 255\n") + std::string("\x00\x0a\x14\x1e\x28\xff", 6));
  const Image a = load_image(dir.file("a.pgm"));
  const Image b = load_image(dir.file("b.pgm"));
  EXPECT_EQ(values(a), values(b));
  EXPECT_EQ(a(1, 2), 255.0);
  EXPECT_EQ(a(0, 1), 10.0);
}

TEST(ImageIo, SmallMaxvalRescaled) {
  TempDir dir;
  write_text(dir.file("a.pgm"), "P2 2 1 15 0 15\n");
  const Image a = load_image(dir.file("a.pgm"));
  EXPECT_EQ(a.range(), 255.0);
  EXPECT_NEAR(a(0, 1), 255.0, 1e-12);
  EXPECT_NEAR(a(0, 0), 0.0, 1e-12);
}

TEST(ImageIo, Errors) {
  TempDir dir;
  EXPECT_THROW(load_image(dir.file("missing.png")), Error);
  try {
    load_image(testing_support::data_path("misc/gray16.png"));
    FAIL() << "16-bit PNG accepted";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("unsupported bit depth"), std::string::npos) << e.what();
  }
  write_text(dir.file("deep.pgm"), "P2 1 1 65535 7\n");
  EXPECT_THROW(load_image(dir.file("deep.pgm")), Error);
  write_text(dir.file("short.pgm"), std::string("P5 4 4 255\n") + "abc");
  EXPECT_THROW(load_image(dir.file("short.pgm")), Error);
  write_text(dir.file("junk.png"), "not an image");
  EXPECT_THROW(load_image(dir.file("junk.png")), Error);
  EXPECT_THROW(save_image(integer_image(2, 2, 1, 1), dir.file("x.bmp")), Error);
}

TEST(ImageIo, SaveRescalesAndClamps) {
  TempDir dir;
  Image unit(1, 3, 1, 1.0);
  unit(0, 0) = 0.5;
  unit(0, 1) = 1.7;
  unit(0, 2) = -0.2;
  save_image(unit, dir.file("u.pgm"));
  const Image back = load_image(dir.file("u.pgm"));
  EXPECT_EQ(back(0, 0), 128.0);
  EXPECT_EQ(back(0, 1), 255.0);
  EXPECT_EQ(back(0, 2), 0.0);
}

TEST(BandIo, SingleLevelRoundTrip) {
  const Image p = testing_support::random_plane(21, 18, 5);
  const SubbandSet s = dwt2d(p, get_wavelet("db3"));
  std::stringstream ss;
  write_bands(ss, s);
  const BandFile f = read_bands(ss);
  ASSERT_TRUE(std::holds_alternative<SubbandSet>(f));
  const SubbandSet& r = std::get<SubbandSet>(f);
  EXPECT_EQ(r.wavelet, "db3");
  EXPECT_EQ(r.src_height, 21u);
  EXPECT_EQ(r.src_width, 18u);
  for (std::size_t i = 0; i < s.ll.size(); ++i) {
    EXPECT_EQ(r.ll.data()[i], static_cast<double>(static_cast<float>(s.ll.data()[i])));
    EXPECT_EQ(r.hh.data()[i], static_cast<double>(static_cast<float>(s.hh.data()[i])));
  }
  // float32 storage: reconstruction is within float rounding of the source.
  EXPECT_LT(max_abs_diff(idwt2d(r, get_wavelet("db3")), p), 1e-3);
}

TEST(BandIo, GhmRoundTrip) {
  TempDir dir;
  const Image p = testing_support::random_plane(16, 20, 6);
  const GhmSubbands g = ghm_decompose(p);
  save_bands(g, dir.file("g.bands"));
  const BandFile f = load_bands(dir.file("g.bands"));
  ASSERT_TRUE(std::holds_alternative<GhmSubbands>(f));
  const GhmSubbands& r = std::get<GhmSubbands>(f);
  EXPECT_EQ(r.src_height, 16u);
  for (std::size_t b = 0; b < 16; ++b)
    for (std::size_t i = 0; i < g.bands[b].size(); ++i)
      EXPECT_EQ(r.bands[b].data()[i], static_cast<double>(static_cast<float>(g.bands[b].data()[i])));
  EXPECT_LT(max_abs_diff(ghm_reconstruct(r), p), 1e-3);
}

TEST(BandIo, Malformed) {
  std::stringstream empty;
  EXPECT_THROW(read_bands(empty), Error);
  std::stringstream bad("{\"transform\":\"nope\"}\n");
  EXPECT_THROW(read_bands(bad), Error);
  const SubbandSet s = dwt2d(testing_support::random_plane(8, 8, 1), get_wavelet("haar"));
  std::stringstream ss;
  write_bands(ss, s);
  std::string text = ss.str();
  text.resize(text.size() - 5);
  std::stringstream truncated(text);
  EXPECT_THROW(read_bands(truncated), Error);
  EXPECT_THROW(load_bands("/nonexistent/dir/x.bands"), Error);
}

TEST(ModelIo, RoundTrip) {
  for (const SrTransform& t : {SrTransform::single("bior2.6"), SrTransform::ghm()}) {
    SrModel m = make_model(t, 42, NetworkShape{4, 6, false}, 3.0);
    std::stringstream ss;
    write_model(ss, m);
    const SrModel r = read_model(ss);
    EXPECT_EQ(r.transform.name(), t.name());
    EXPECT_EQ(r.scale, 3.0);
    EXPECT_EQ(r.seed, 42u);
    EXPECT_EQ(r.net.residual_channels, m.net.residual_channels);
    ASSERT_EQ(r.net.layers.size(), 4u);
    for (std::size_t l = 0; l < 4; ++l) {
      EXPECT_EQ(r.net.layers[l].activation, m.net.layers[l].activation);
      ASSERT_TRUE(r.net.layers[l].weights.same_shape(m.net.layers[l].weights));
      for (std::size_t i = 0; i < m.net.layers[l].weights.size(); ++i)
        EXPECT_EQ(r.net.layers[l].weights.data[i],
                  static_cast<double>(static_cast<float>(m.net.layers[l].weights.data[i])));
    }
  }
}

TEST(ModelIo, DetailOnlyGhmWiring) {
  TempDir dir;
  const SrModel m = make_model(SrTransform::ghm(), 1, NetworkShape{3, 4, true});
  save_model(m, dir.file("m.json"));
  const SrModel r = load_model(dir.file("m.json"));
  EXPECT_EQ(r.net.residual_channels.size(), 12u);
  EXPECT_EQ(r.net.residual_channels, m.net.residual_channels);
}

TEST(ModelIo, Malformed) {
  std::stringstream wrong("{\"format\":\"other\"}\n");
  EXPECT_THROW(read_model(wrong), Error);
  const SrModel m = make_model(SrTransform::single("haar"), 1, NetworkShape{3, 4, false});
  std::stringstream ss;
  write_model(ss, m);
  std::string text = ss.str();
  text.resize(text.size() - 1);
  std::stringstream truncated(text);
  EXPECT_THROW(read_model(truncated), Error);
}
