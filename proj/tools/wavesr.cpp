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

#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "wavesr/dwt.hpp"
#include "wavesr/error.hpp"
#include "wavesr/ghm.hpp"
#include "wavesr/grid.hpp"
#include "wavesr/io.hpp"
#include "wavesr/iqa.hpp"
#include "wavesr/pipeline.hpp"
#include "wavesr/sr.hpp"
#include "wavesr/wavelets.hpp"

namespace {

using namespace wavesr;

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

void write_text(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  require(static_cast<bool>(f), path + ": cannot open for writing");
  f << text;
  require(static_cast<bool>(f), path + ": write failed");
}

std::string sibling_path(const std::string& path, const std::string& suffix) {
  std::filesystem::path p(path);
  return (p.parent_path() / (p.stem().string() + suffix + p.extension().string())).string();
}

struct TrainOptions {
  std::string data;
  double scale = 2.0;
  std::size_t patch = 32;
  std::size_t stride = 16;
  std::size_t max_images = 10;
  std::size_t epochs = 50;
  std::size_t batch = 8;
  std::uint64_t seed = 1;
  double lr = 0.01;
  std::size_t depth = Network::kDefaultDepth;
  std::size_t width = Network::kDefaultWidth;
  bool detail_only = false;

  void add_to(CLI::App* cmd, bool with_data) {
    if (with_data) cmd->add_option("--data", data, "Directory of ground-truth images")->required();
    cmd->add_option("--scale", scale, "Super-resolution factor")->capture_default_str();
    cmd->add_option("--patch", patch, "Training patch size")->capture_default_str();
    cmd->add_option("--stride", stride, "Patch stride")->capture_default_str();
    cmd->add_option("--max-images", max_images, "Training images used (0 = all)")->capture_default_str();
    cmd->add_option("--epochs", epochs, "Training epochs")->capture_default_str();
    cmd->add_option("--batch", batch, "Minibatch size")->capture_default_str();
    cmd->add_option("--seed", seed, "Initialisation and shuffle seed")->capture_default_str();
    cmd->add_option("--lr", lr, "Adam learning rate")->capture_default_str();
    cmd->add_option("--depth", depth, "Convolution layers")->capture_default_str();
    cmd->add_option("--width", width, "Hidden channels")->capture_default_str();
    cmd->add_flag("--detail-only", detail_only, "GHM: predict only the 12 detail bands");
  }

  DatasetSpec spec(const std::string& root) const {
    DatasetSpec s;
    s.root = root;
    s.scale = scale;
    s.patch_size = patch;
    s.stride = stride;
    s.max_images = max_images;
    s.validate();
    return s;
  }

  TrainBudget budget() const {
    TrainBudget b;
    b.epochs = epochs;
    b.batch = batch;
    b.seed = seed;
    b.lr = lr;
    b.shape = {depth, width, detail_only};
    return b;
  }
};

int run(int argc, char** argv) {
  CLI::App app{"Wavelet-domain super-resolution and image quality tools"};
  app.require_subcommand(1);

  auto* list_cmd = app.add_subcommand("list-wavelets", "Print the registered wavelet names");

  std::string dec_in, dec_out, dec_wavelet;
  bool dec_ghm = false;
  auto* dec = app.add_subcommand("decompose", "Single-level DWT or GHM decomposition of an image's luma");
  dec->add_option("--in", dec_in, "Input image")->required();
  dec->add_option("--out", dec_out, "Output band file")->required();
  auto* dec_w = dec->add_option("--wavelet", dec_wavelet, "Wavelet name");
  auto* dec_g = dec->add_flag("--ghm", dec_ghm, "Use the GHM multiwavelet");
  dec_w->excludes(dec_g);

  std::string rec_in, rec_out;
  auto* rec = app.add_subcommand("reconstruct", "Inverse transform of a band file");
  rec->add_option("--in", rec_in, "Band file")->required();
  rec->add_option("--out", rec_out, "Output image")->required();

  std::string iqa_ref, iqa_test, iqa_metrics;
  auto* iqa = app.add_subcommand("iqa", "Full-reference quality scores");
  iqa->add_option("--ref", iqa_ref, "Reference image")->required();
  iqa->add_option("--test", iqa_test, "Test image")->required();
  iqa->add_option("--metrics", iqa_metrics, "Comma-separated subset (default: all)");

  TrainOptions train_opts;
  std::string train_out, train_wavelet;
  bool train_ghm = false;
  auto* tr = app.add_subcommand("sr-train", "Train a super-resolution model");
  train_opts.add_to(tr, true);
  auto* tr_w = tr->add_option("--wavelet", train_wavelet, "Wavelet name");
  auto* tr_g = tr->add_flag("--ghm", train_ghm, "Use the GHM multiwavelet");
  tr_w->excludes(tr_g);
  tr->add_option("--out", train_out, "Model file")->required();

  std::string apply_model, apply_in, apply_out;
  std::size_t apply_h = 0, apply_w = 0;
  auto* ap = app.add_subcommand("sr-apply", "Upscale a low-resolution image with a trained model");
  ap->add_option("--model", apply_model, "Model file")->required();
  ap->add_option("--in", apply_in, "Low-resolution image")->required();
  ap->add_option("--out", apply_out, "Output image")->required();
  ap->add_option("--height", apply_h, "Output height (default: scale * input)");
  ap->add_option("--width", apply_w, "Output width (default: scale * input)");

  TrainOptions sweep_opts;
  std::string sweep_test, sweep_out, sweep_wavelets_opt, sweep_metrics;
  std::size_t sweep_test_images = 0;
  bool sweep_no_ghm = false;
  auto* sw = app.add_subcommand("sweep", "Train and score every wavelet; writes a method x metric table");
  sweep_opts.add_to(sw, true);
  sw->add_option("--test", sweep_test, "Directory of test images")->required();
  sw->add_option("--out", sweep_out, "Table CSV; per-image scores go to <stem>_per_image.csv")->required();
  sw->add_option("--wavelets", sweep_wavelets_opt, "Comma-separated subset (default: all)");
  sw->add_option("--metrics", sweep_metrics, "Comma-separated subset (default: all)");
  sw->add_option("--test-images", sweep_test_images, "Test images used (0 = all)");
  sw->add_flag("--no-ghm", sweep_no_ghm, "Skip the GHM row");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e);
  }

  auto parse_metrics = [](const std::string& list) {
    if (list.empty()) return all_metrics();
    std::vector<Metric> out;
    for (const auto& name : split_list(list)) out.push_back(metric_from_name(name));
    return out;
  };

  if (*list_cmd) {
    for (const auto& name : list_wavelets()) std::cout << name << '\n';
  } else if (*dec) {
    require(dec_ghm || !dec_wavelet.empty(), "decompose needs --wavelet NAME or --ghm");
    const Image plane = luma_plane(load_image(dec_in));
    if (dec_ghm)
      save_bands(ghm_decompose(plane), dec_out);
    else
      save_bands(dwt2d(plane, get_wavelet(dec_wavelet)), dec_out);
  } else if (*rec) {
    const BandFile bands = load_bands(rec_in);
    Image img;
    if (const auto* s = std::get_if<SubbandSet>(&bands))
      img = idwt2d(*s, get_wavelet(s->wavelet));
    else
      img = ghm_reconstruct(std::get<GhmSubbands>(bands));
    img.set_range(255.0);
    save_image(img, rec_out);
  } else if (*iqa) {
    const Image ref = load_image(iqa_ref);
    const Image test = load_image(iqa_test);
    std::cout << "metric,value\n";
    for (Metric m : parse_metrics(iqa_metrics)) {
      const IqaScore s = score(m, ref, test);
      char buf[64];
      std::snprintf(buf, sizeof buf, "%.10g", s.value);
      std::cout << s.metric << ',' << buf << '\n';
    }
  } else if (*tr) {
    require(train_ghm || !train_wavelet.empty(), "sr-train needs --wavelet NAME or --ghm");
    const DatasetSpec spec = train_opts.spec(train_opts.data);
    const NamedImages data = load_dataset(spec);
    const SrTransform t = train_ghm ? SrTransform::ghm() : SrTransform::single(train_wavelet);
    const TrainedModel tm = train_model(t, data.images, spec, train_opts.budget(), [](std::size_t e, double loss) {
      std::fprintf(stderr, "epoch %zu loss %.6g\n", e + 1, loss);
    });
    save_model(tm.model, train_out);
  } else if (*ap) {
    const SrModel model = load_model(apply_model);
    save_image(predict_sr(load_image(apply_in), model, apply_h, apply_w), apply_out);
  } else if (*sw) {
    SweepConfig cfg;
    cfg.train = sweep_opts.spec(sweep_opts.data);
    cfg.test = sweep_opts.spec(sweep_test);
    cfg.test.max_images = sweep_test_images;
    cfg.budget = sweep_opts.budget();
    cfg.metrics = parse_metrics(sweep_metrics);
    cfg.wavelets = split_list(sweep_wavelets_opt);
    cfg.include_ghm = !sweep_no_ghm;
    const IqaReport report = sweep_wavelets(cfg, [](const std::string& name) {
      std::fprintf(stderr, "done %s\n", name.c_str());
    });
    write_text(sweep_out, report.to_table_csv());
    write_text(sibling_path(sweep_out, "_per_image"), report.to_long_csv());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "wavesr: error: %s\n", e.what());
    return 1;
  }
}
