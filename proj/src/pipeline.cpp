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

#include "wavesr/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <sstream>

#include "wavesr/error.hpp"
#include "wavesr/grid.hpp"
#include "wavesr/io.hpp"
#include "wavesr/wavelets.hpp"

namespace wavesr {

namespace {

bool wildcard_match(std::string_view pat, std::string_view s) {
  std::size_t p = 0, i = 0, star = std::string_view::npos, mark = 0;
  while (i < s.size()) {
    if (p < pat.size() && (pat[p] == '?' || pat[p] == s[i])) {
      ++p;
      ++i;
    } else if (p < pat.size() && pat[p] == '*') {
      star = p++;
      mark = i;
    } else if (star != std::string_view::npos) {
      p = star + 1;
      i = ++mark;
    } else {
      return false;
    }
  }
  while (p < pat.size() && pat[p] == '*') ++p;
  return p == pat.size();
}

bool is_image_file(const std::filesystem::path& p) {
  std::string ext = p.extension().string();
  for (char& c : ext) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return ext == ".png" || ext == ".pgm" || ext == ".ppm" || ext == ".pnm";
}

std::string format_value(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string format_mean(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.6f", v);
  return buf;
}

// CSV fields here never need quoting except free-text status messages.
std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c == '\n' ? ' ' : c;
  }
  return out + "\"";
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char c = line[i];
    if (quoted) {
      if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        cur += '"';
        ++i;
      } else if (c == '"') {
        quoted = false;
      } else {
        cur += c;
      }
    } else if (c == '"') {
      quoted = true;
    } else if (c == ',') {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

Image bicubic_fit(const Image& src, double factor, std::size_t h, std::size_t w) {
  Image out(h, w, src.channels(), src.range());
  for (std::size_t c = 0; c < src.channels(); ++c)
    out.set_channel(c, fit_to(bicubic_resize(src.channel(c), factor), h, w));
  return out;
}

}  // namespace

void DatasetSpec::validate() const {
  require(patch_size >= 8 && patch_size % 2 == 0, "patch_size must be even and >= 8");
  require(stride >= 1, "stride must be >= 1");
  require(scale > 1.0, "scale factor must be > 1");
}

std::vector<std::string> list_images(const DatasetSpec& spec) {
  namespace fs = std::filesystem;
  require(fs::is_directory(spec.root), spec.root + ": not a directory");
  std::vector<std::string> out;
  for (const auto& e : fs::directory_iterator(spec.root)) {
    if (!e.is_regular_file() || !is_image_file(e.path())) continue;
    if (!wildcard_match(spec.glob, e.path().filename().string())) continue;
    out.push_back(e.path().string());
  }
  std::sort(out.begin(), out.end());
  if (spec.max_images > 0 && out.size() > spec.max_images) out.resize(spec.max_images);
  return out;
}

NamedImages load_dataset(const DatasetSpec& spec) {
  NamedImages out;
  for (const auto& path : list_images(spec)) {
    out.names.push_back(std::filesystem::path(path).filename().string());
    out.images.push_back(load_image(path));
  }
  require(!out.images.empty(), spec.root + ": no images match '" + spec.glob + "'");
  return out;
}

LrPair make_lr_pair(const Image& hr, double scale, std::size_t min_size) {
  require(scale > 0.0, "scale must be positive");
  require(!hr.empty(), "make_lr_pair: empty image");
  if (hr.height() < min_size || hr.width() < min_size)
    throw Error("image too small: " + std::to_string(hr.height()) + "x" + std::to_string(hr.width()) +
                " < " + std::to_string(min_size));
  const Image lr = bicubic_fit(hr, 1.0 / scale,
                               std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(hr.height() / scale))),
                               std::max<std::size_t>(1, static_cast<std::size_t>(std::llround(hr.width() / scale))));
  return {bicubic_baseline(lr, scale, hr.height(), hr.width()), hr};
}

std::vector<PatchPair> extract_patches(const LrPair& pair, const DatasetSpec& spec) {
  require(pair.input.same_shape(pair.hr), "extract_patches: pair dims mismatch");
  const std::size_t p = spec.patch_size;
  std::vector<PatchPair> out;
  for (std::size_t r = 0; r + p <= pair.hr.height(); r += spec.stride)
    for (std::size_t c = 0; c + p <= pair.hr.width(); c += spec.stride)
      out.push_back({crop(pair.input, r, c, p, p), crop(pair.hr, r, c, p, p), r, c});
  return out;
}

std::vector<TrainingPair> build_training_set(const std::vector<Image>& hr_images, const DatasetSpec& spec,
                                             const SrTransform& transform) {
  spec.validate();
  std::vector<TrainingPair> out;
  for (const Image& hr : hr_images) {
    const LrPair pair = make_lr_pair(luma_plane(hr), spec.scale, spec.patch_size);
    for (const auto& patch : extract_patches(pair, spec))
      out.push_back(make_training_pair(patch.input, patch.hr, transform));
  }
  require(!out.empty(), "training set is empty");
  return out;
}

TrainedModel train_model(const SrTransform& transform, const std::vector<Image>& hr_images,
                         const DatasetSpec& spec, const TrainBudget& budget,
                         const std::function<void(std::size_t, double)>& on_epoch) {
  TrainedModel out;
  out.model = make_model(transform, budget.seed, budget.shape, spec.scale);
  const auto data = build_training_set(hr_images, spec, transform);
  TrainConfig cfg;
  cfg.epochs = budget.epochs;
  cfg.batch = budget.batch;
  cfg.seed = budget.seed;
  cfg.lr = budget.lr;
  out.loss_trace = train(out.model.net, data, cfg, on_epoch).epoch_loss;
  return out;
}

double MethodResult::mean(const std::string& metric) const {
  const auto it = scores.find(metric);
  require(it != scores.end() && !it->second.empty(), method + ": no scores for " + metric);
  double total = 0.0;
  for (double v : it->second) total += v;
  return total / static_cast<double>(it->second.size());
}

const MethodResult& IqaReport::method(const std::string& name) const {
  for (const auto& m : methods)
    if (m.method == name) return m;
  throw Error("report has no method '" + name + "'");
}

std::string IqaReport::to_long_csv() const {
  std::ostringstream out;
  out << "method,status,metric,image,value\n";
  for (const auto& m : methods) {
    if (!m.ok()) {
      out << csv_field(m.method) << ',' << csv_field(m.status) << ",,,\n";
      continue;
    }
    for (const auto& metric : metrics) {
      const auto it = m.scores.find(metric);
      if (it == m.scores.end()) continue;
      for (std::size_t i = 0; i < m.images.size(); ++i)
        out << csv_field(m.method) << ",ok," << metric << ',' << csv_field(m.images[i]) << ','
            << format_value(it->second.at(i)) << '\n';
    }
  }
  return out.str();
}

std::string IqaReport::to_table_csv() const {
  std::ostringstream out;
  out << "method,status";
  for (const auto& metric : metrics) out << ',' << metric;
  out << '\n';
  for (const auto& m : methods) {
    out << csv_field(m.method) << ',' << csv_field(m.status);
    for (const auto& metric : metrics) {
      out << ',';
      if (m.ok() && m.scores.count(metric)) out << format_mean(m.mean(metric));
    }
    out << '\n';
  }
  return out.str();
}

IqaReport IqaReport::from_long_csv(const std::string& csv) {
  std::istringstream in(csv);
  std::string line;
  require(std::getline(in, line) && line == "method,status,metric,image,value", "report CSV: bad header");
  IqaReport r;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    require(f.size() == 5, "report CSV: expected 5 fields in '" + line + "'");
    if (r.methods.empty() || r.methods.back().method != f[0]) {
      r.methods.push_back({});
      r.methods.back().method = f[0];
      r.methods.back().status = f[1];
    }
    MethodResult& m = r.methods.back();
    if (f[1] != "ok") continue;
    const std::string& metric = f[2];
    if (std::find(r.metrics.begin(), r.metrics.end(), metric) == r.metrics.end()) r.metrics.push_back(metric);
    auto& column = m.scores[metric];
    if (column.size() == m.images.size()) m.images.push_back(f[3]);
    require(column.size() < m.images.size() && m.images[column.size()] == f[3],
            "report CSV: image order differs between metrics");
    char* end = nullptr;
    const double v = std::strtod(f[4].c_str(), &end);
    require(end && *end == '\0' && !f[4].empty(), "report CSV: bad value '" + f[4] + "'");
    column.push_back(v);
  }
  return r;
}

MethodResult evaluate_dataset(const Method& method, const NamedImages& data, double scale,
                              const std::vector<Metric>& metrics) {
  require(data.names.size() == data.images.size(), "evaluate_dataset: names and images differ in count");
  MethodResult out;
  out.method = method.name;
  out.images = data.names;
  for (Metric m : metrics) out.scores[metric_name(m)];
  for (const Image& hr : data.images) {
    const Image truth = luma_plane(hr);
    const LrPair pair = make_lr_pair(truth, scale);
    const Image test = method.model ? enhance(pair.input, *method.model) : pair.input;
    for (Metric m : metrics) out.scores[metric_name(m)].push_back(score(m, truth, test).value);
  }
  return out;
}

IqaReport sweep_wavelets(const SweepConfig& cfg, const std::function<void(const std::string&)>& progress) {
  IqaReport report;
  for (Metric m : cfg.metrics) report.metrics.push_back(metric_name(m));
  const NamedImages train_set = load_dataset(cfg.train);
  const NamedImages test_set = load_dataset(cfg.test);
  const double scale = cfg.train.scale;

  report.methods.push_back(evaluate_dataset({"bicubic", nullptr}, test_set, scale, cfg.metrics));
  if (progress) progress("bicubic");

  std::vector<SrTransform> transforms;
  for (const auto& name : cfg.wavelets.empty() ? list_wavelets() : cfg.wavelets) {
    SrTransform t;
    t.kind = SrTransform::Kind::single;
    t.wavelet = name;
    transforms.push_back(t);
  }
  if (cfg.include_ghm) transforms.push_back(SrTransform::ghm());

  for (const auto& t : transforms) {
    const std::string name = t.name();
    try {
      const TrainedModel tm = train_model(t, train_set.images, cfg.train, cfg.budget);
      report.methods.push_back(evaluate_dataset({name, &tm.model}, test_set, scale, cfg.metrics));
    } catch (const std::exception& e) {
      MethodResult failed;
      failed.method = name;
      failed.status = std::string("error: ") + e.what();
      report.methods.push_back(std::move(failed));
    }
    if (progress) progress(name);
  }
  return report;
}

}  // namespace wavesr
