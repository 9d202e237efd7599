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

// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any
// failure. Budgets and thresholds are printed next to the measured values.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "support.hpp"
#include "wavesr/ghm.hpp"
#include "wavesr/iqa.hpp"
#include "wavesr/nn.hpp"
#include "wavesr/pipeline.hpp"
#include "wavesr/sr.hpp"
#include "wavesr/wavelets.hpp"

using namespace wavesr;
namespace ts = testing_support;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

std::string fmt(const char* f, double a, double b = 0.0, double c = 0.0, double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, f, a, b, c, d);
  return buf;
}

// --- 1 ----------------------------------------------------------------------

Outcome perfect_reconstruction() {
  double worst = 0.0;
  std::string worst_name;
  const auto names = list_wavelets();
  for (const auto& name : names) {
    const FilterBank& fb = get_wavelet(name);
    for (std::uint64_t s = 0; s < 20; ++s) {
      const Image p = ts::random_plane(64, 64, 1000 + s);
      const double e = max_abs_diff(idwt2d(dwt2d(p, fb), fb), p);
      if (e > worst) {
        worst = e;
        worst_name = name;
      }
    }
  }
  for (std::uint64_t s = 0; s < 20; ++s) {
    const Image p = ts::random_plane(64, 64, 2000 + s);
    const double e = max_abs_diff(ghm_reconstruct(ghm_decompose(p)), p);
    if (e > worst) {
      worst = e;
      worst_name = "ghm";
    }
  }
  return {worst < 1e-8, std::to_string(names.size()) + " wavelets + GHM, 20 planes each, max error " +
                            fmt("%.3g", worst) + " (" + worst_name + ") < 1e-8"};
}

// --- 2 ----------------------------------------------------------------------

Outcome oracle_equivalence() {
  std::mt19937_64 rng(77);
  double worst = 0.0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t h = 11 + rng() % 14;
    const std::size_t w = 11 + rng() % 14;
    const Image x = ts::random_plane(h, w, rng());
    const Image y = ts::random_plane(h, w, rng());
    const Image xw = crop(x, 0, 0, 11, 11);
    const Image yw = crop(y, 0, 0, 11, 11);
    const double m = mse(x, y);
    // MSE is compared relative to its magnitude (~1e4 here); the bounded
    // scores absolutely.
    worst = std::max(worst, std::fabs(m - ts::mse_oracle(x, y)) / m);
    worst = std::max(worst, std::fabs(psnr(x, y) - ts::psnr_oracle(x, y)));
    worst = std::max(worst, std::fabs(ssim_window(xw, yw) - ts::ssim_window_oracle(x, y, 0, 0)));
    worst = std::max(worst, std::fabs(mssim(x, y) - ts::mssim_oracle(x, y)));
    worst = std::max(worst, std::fabs(gsm(x, y) - ts::gsm_oracle(x, y)));
  }
  return {worst < 1e-12, "MSE/PSNR/SSIM window/MSSIM/GSM on 100 random pairs, max deviation " + fmt("%.3g", worst) +
                             " < 1e-12"};
}

// --- 3 ----------------------------------------------------------------------

Outcome metric_axioms() {
  bool ok = true;
  std::string why;
  for (std::uint64_t s = 0; s < 10; ++s) {
    const Image x = ts::random_image(64, 64, s % 2 ? 3 : 1, 3000 + s);
    for (Metric m : all_metrics()) {
      const double v = score(m, x, x).value;
      bool good = false;
      if (m == Metric::psnr)
        good = is_exact_psnr(v);
      else if (m == Metric::mad)
        good = v == 0.0;
      else
        good = std::fabs(v - 1.0) < 1e-12;
      if (!good) {
        ok = false;
        why += std::string(" identity ") + metric_name(m) + "=" + fmt("%.17g", v);
      }
    }
  }
  // Gated on one fixed natural image. The other two are reported but not
  // gated: on heavily textured content MAD's detection stage can mask weak
  // noise completely (d_lum = 0, so MAD = 0) for several sigma steps.
  const double sigmas[] = {2.0, 5.0, 10.0, 20.0};
  std::string info;
  for (const char* name : {"test/astronaut.png", "test/chelsea.png", "test/coffee.png"}) {
    const bool gated = std::string(name) == "test/astronaut.png";
    const Image x = ts::natural_plane(name);
    const Image noise = ts::gaussian_field(x.height(), x.width(), 4242);
    for (Metric m : all_metrics()) {
      double prev = 0.0;
      for (int i = 0; i < 4; ++i) {
        const double v = score(m, x, ts::add_scaled(x, noise, sigmas[i])).value;
        if (i > 0 && !(higher_is_better(m) ? v < prev : v > prev)) {
          const std::string what = std::string(metric_name(m)) + "@" + name + fmt(" sigma %g", sigmas[i]);
          if (gated) {
            ok = false;
            why += " order " + what;
          } else {
            info += " " + what;
          }
        }
        prev = v;
      }
    }
  }
  return {ok, "identity on 10 random images x 7 metrics; noise ladder (sigma 2,5,10,20) strictly ordered for "
              "all 7 metrics on test/astronaut.png" + why + "; ungated images: " +
                  (info.empty() ? std::string("all ordered") : "not ordered:" + info)};
}

// --- 4 ----------------------------------------------------------------------

Outcome gradient_check() {
  std::mt19937_64 rng(4);
  std::normal_distribution<double> d(0.0, 0.5);
  Network net;
  net.input_bands = 2;
  net.output_bands = 2;
  net.residual_channels = {0, 1};
  const std::size_t chans[] = {2, 4, 4, 2};
  for (int l = 0; l < 3; ++l) {
    ConvLayer layer = ConvLayer::zeros(chans[l], chans[l + 1], l == 2 ? Activation::linear : Activation::relu);
    for (double& w : layer.weights.data) w = d(rng);
    for (double& b : layer.bias) b = d(rng);
    net.layers.push_back(layer);
  }
  const Tensor4 x = ts::random_tensor(1, 2, 6, 6, 41);
  const Tensor4 t = ts::random_tensor(1, 2, 6, 6, 42);
  const LossAndGrad lg = loss_and_gradients(net, x, t);
  double worst = 0.0;
  for (int k = 0; k < 50; ++k) {
    const std::size_t l = rng() % 3;
    ConvLayer& layer = net.layers[l];
    const std::size_t idx = rng() % (layer.weights.size() + layer.bias.size());
    const bool is_w = idx < layer.weights.size();
    double& p = is_w ? layer.weights.data[idx] : layer.bias[idx - layer.weights.size()];
    const double analytic = is_w ? lg.grads.weights[l].data[idx] : lg.grads.bias[l][idx - layer.weights.size()];
    const double keep = p;
    const double h = 1e-4;
    p = keep + h;
    const double up = loss_and_gradients(net, x, t).loss;
    p = keep - h;
    const double down = loss_and_gradients(net, x, t).loss;
    p = keep;
    const double fd = (up - down) / (2 * h);
    worst = std::max(worst, std::fabs(analytic - fd) / std::max({std::fabs(analytic), std::fabs(fd), 1e-8}));
  }
  return {worst < 1e-4, "3-layer net, 50 sampled parameters, max relative error " + fmt("%.3g", worst) + " < 1e-4"};
}

// --- 5 ----------------------------------------------------------------------

Outcome desk_training() {
  DatasetSpec spec;
  spec.root = ts::data_path("train");
  spec.max_images = 10;
  spec.stride = 16;
  const NamedImages train = load_dataset(spec);
  TrainBudget budget;
  budget.epochs = 50;
  budget.batch = 32;
  budget.seed = 1;
  budget.lr = 0.01;
  const TrainedModel tm = train_model(SrTransform::single("haar"), train.images, spec, budget);
  NamedImages held;
  for (std::size_t i = 0; i < 3; ++i) {
    held.names.push_back(train.names[i]);
    held.images.push_back(train.images[i]);
  }
  const double base = evaluate_dataset({"bicubic", nullptr}, held, 2.0, {Metric::psnr}).mean("PSNR");
  const double model = evaluate_dataset({"haar", &tm.model}, held, 2.0, {Metric::psnr}).mean("PSNR");
  const double first = tm.loss_trace.front();
  const double last = tm.loss_trace.back();
  return {model - base > 0.0 && last < 0.5 * first,
          std::to_string(train.images.size()) + " images, 50 epochs, 10x64 net: Haar " + fmt("%.4f", model) +
              " dB vs bicubic " + fmt("%.4f", base) + fmt(" dB (gain %+.4f); loss %.4g -> %.4g", model - base, first, last)};
}

// --- 6 ----------------------------------------------------------------------

Outcome sweep_shape_and_spread() {
  SweepConfig shape;
  shape.train.root = ts::data_path("train");
  shape.train.max_images = 1;
  shape.test.root = ts::data_path("test");
  shape.budget.epochs = 1;
  shape.budget.shape = NetworkShape{3, 4, false};
  const IqaReport full = sweep_wavelets(shape);
  bool ok = full.methods.size() == 38 && full.metrics.size() == 7;
  std::size_t good_rows = 0;
  for (const auto& m : full.methods)
    if (m.ok() && m.scores.size() == 7) ++good_rows;
  ok = ok && good_rows == 38;
  std::istringstream table(full.to_table_csv());
  std::size_t lines = 0;
  for (std::string l; std::getline(table, l);) ++lines;
  ok = ok && lines == 39;

  // Same budget as the desk-scale training check. Narrower or shorter
  // budgets leave every model at (or indistinguishable from) bicubic, which
  // would make a zero spread meaningless.
  SweepConfig cfg;
  cfg.train.root = ts::data_path("train");
  cfg.train.stride = 16;
  cfg.test.root = ts::data_path("test");
  cfg.budget.epochs = 50;
  cfg.budget.batch = 32;
  cfg.budget.seed = 1;
  cfg.budget.lr = 0.01;
  cfg.metrics = {Metric::psnr};
  cfg.wavelets = {"haar", "db4", "sym8", "coif3", "rbio3.3"};
  cfg.include_ghm = false;
  const IqaReport r = sweep_wavelets(cfg, [](const std::string& m) {
    std::fprintf(stderr, "  criterion 6: %s done\n", m.c_str());
  });
  const double base = r.method("bicubic").mean("PSNR");
  double lo = 1e300, hi = -1e300;
  std::string values = fmt(" (bicubic %.3f):", base);
  for (const auto& m : r.methods) {
    if (m.method == "bicubic") continue;
    if (!m.ok()) {
      ok = false;
      values += " " + m.method + "=" + m.status;
      continue;
    }
    const double v = m.mean("PSNR");
    lo = std::min(lo, v);
    hi = std::max(hi, v);
    values += " " + m.method + fmt("=%.3f(%+.3f)", v, v - base);
  }
  ok = ok && hi - lo < 1.0;
  return {ok, std::to_string(full.methods.size()) + " rows x " + std::to_string(full.metrics.size()) +
                  " metrics (" + std::to_string(good_rows) + " ok); PSNR spread " + fmt("%.3f", hi - lo) +
                  " dB < 1.0 over" + values};
}

// --- 7 ----------------------------------------------------------------------

Outcome residual_identity() {
  double worst = 0.0;
  for (const SrTransform& t : {SrTransform::single("haar"), SrTransform::single("bior2.6"), SrTransform::ghm()}) {
    SrModel m;
    m.transform = t;
    m.net = Network::zeros(t.band_count(), t.residual_channels());
    for (std::uint64_t s = 0; s < 3; ++s) {
      const Image lr = ts::random_image(24 + s, 20 + 3 * s, s == 2 ? 3 : 1, 7000 + s);
      worst = std::max(worst, max_abs_diff(predict_sr(lr, m), bicubic_baseline(lr, 2.0)));
    }
  }
  return {worst < 1e-6, "zero 10-layer net, Haar/bior2.6/GHM: max |predict_sr - bicubic| " + fmt("%.3g", worst) +
                            " < 1e-6"};
}

// --- 8 ----------------------------------------------------------------------

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome determinism() {
  const fs::path root = fs::temp_directory_path() / "wavesr_acceptance_sweep";
  fs::remove_all(root);
  std::string table[2], per_image[2];
  for (int run = 0; run < 2; ++run) {
    const fs::path dir = root / std::to_string(run);
    fs::create_directories(dir);
    const std::string cmd = std::string("\"") + WAVESR_CLI + "\" sweep --data \"" + ts::data_path("train") +
                            "\" --test \"" + ts::data_path("test") + "\" --out \"" + (dir / "report.csv").string() +
                            "\" --wavelets haar,db2,bior2.6 --epochs 2 --max-images 2 --depth 3 --width 8 --seed 7"
                            " > \"" + (dir / "log.txt").string() + "\" 2>&1";
    if (std::system(cmd.c_str()) != 0) return {false, "sweep run " + std::to_string(run) + " failed: " + slurp(dir / "log.txt")};
    table[run] = slurp(dir / "report.csv");
    per_image[run] = slurp(dir / "report_per_image.csv");
  }
  fs::remove_all(root);
  const bool same = !table[0].empty() && table[0] == table[1] && per_image[0] == per_image[1];
  return {same, "two CLI sweeps (3 wavelets + GHM, 7 metrics, seed 7): table " +
                    std::string(table[0] == table[1] ? "identical" : "DIFFERS") + ", per-image " +
                    (per_image[0] == per_image[1] ? "identical" : "DIFFERS") + " (" +
                    std::to_string(per_image[0].size()) + " bytes)"};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double budget_s;  // 0 = no wall-clock limit
    std::function<Outcome()> run;
  };
  const Criterion criteria[] = {
      {1, "perfect reconstruction", 30, perfect_reconstruction},
      {2, "metric oracle equivalence", 10, oracle_equivalence},
      {3, "metric axioms", 60, metric_axioms},
      {4, "gradient check", 30, gradient_check},
      {5, "desk-scale training", 600, desk_training},
      {6, "sweep shape and wavelet spread", 0, sweep_shape_and_spread},
      {7, "residual identity", 10, residual_identity},
      {8, "determinism", 0, determinism},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    std::string timing = fmt("%.1fs", secs);
    if (c.budget_s > 0) {
      timing += fmt(" of %.0fs", c.budget_s);
      if (secs >= c.budget_s) {
        o.pass = false;
        timing += " OVER BUDGET";
      }
    }
    if (!o.pass) ++failures;
    std::printf("[%s] criterion %d: %s: %s (%s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name, o.detail.c_str(),
                timing.c_str());
    std::fflush(stdout);
  }
  std::printf("%d of 8 criteria passed\n", 8 - failures);
  return failures == 0 ? 0 : 1;
}
