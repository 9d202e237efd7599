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

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wavesr/image.hpp"
#include "wavesr/iqa.hpp"
#include "wavesr/sr.hpp"

namespace wavesr {

struct DatasetSpec {
  std::string root;
  std::string glob = "*";  ///< '*' and '?' wildcards on the file name
  double scale = 2.0;
  std::size_t patch_size = 32;
  std::size_t stride = 32;
  std::size_t max_images = 10;  ///< 0 = no limit

  /// Throws unless patch_size is even and >= 8, stride >= 1 and scale > 1.
  void validate() const;
};

/// Image files (png, pgm, ppm, pnm) under root matching glob, sorted by
/// name, truncated to max_images.
std::vector<std::string> list_images(const DatasetSpec& spec);

struct LrPair {
  Image input;  ///< bicubic(bicubic(hr, 1/scale), scale), fitted to hr dims
  Image hr;
};

/// Throws "image too small" unless both hr dims are >= min_size.
LrPair make_lr_pair(const Image& hr, double scale, std::size_t min_size = 0);

struct PatchPair {
  Image input;
  Image hr;
  std::size_t row = 0;
  std::size_t col = 0;
};

/// Aligned grid of patch_size windows at the given stride, row-major.
std::vector<PatchPair> extract_patches(const LrPair& pair, const DatasetSpec& spec);

struct TrainBudget {
  std::size_t epochs = 50;
  std::size_t batch = 8;
  std::uint64_t seed = 1;
  double lr = 0.01;
  NetworkShape shape;
};

struct TrainedModel {
  SrModel model;
  std::vector<double> loss_trace;
};

/// Training pairs from already-loaded ground-truth images.
std::vector<TrainingPair> build_training_set(const std::vector<Image>& hr_images, const DatasetSpec& spec,
                                             const SrTransform& transform);

TrainedModel train_model(const SrTransform& transform, const std::vector<Image>& hr_images,
                         const DatasetSpec& spec, const TrainBudget& budget,
                         const std::function<void(std::size_t, double)>& on_epoch = {});

/// Loads every image of the spec; names are file names.
struct NamedImages {
  std::vector<std::string> names;
  std::vector<Image> images;
};
NamedImages load_dataset(const DatasetSpec& spec);

/// Per-image scores of one method. `scores[metric]` aligns with `images`.
struct MethodResult {
  std::string method;
  std::string status = "ok";
  std::vector<std::string> images;
  std::map<std::string, std::vector<double>> scores;

  bool ok() const { return status == "ok"; }
  /// Arithmetic mean of the per-image column. Throws if the metric is absent.
  double mean(const std::string& metric) const;
};

struct IqaReport {
  std::vector<std::string> metrics;
  std::vector<MethodResult> methods;

  const MethodResult& method(const std::string& name) const;

  /// method,status,metric,image,value; a failed method has one row with
  /// empty metric/image/value. Values use %.17g.
  std::string to_long_csv() const;
  /// method,status,<metric means...>; one row per method.
  std::string to_table_csv() const;
  static IqaReport from_long_csv(const std::string& csv);
};

/// Evaluation target: nullptr model means the bicubic baseline.
struct Method {
  std::string name;
  const SrModel* model = nullptr;
};

/// Scores method output against each ground truth on luma. The input is
/// make_lr_pair(hr, scale).input, refined by the model if present.
MethodResult evaluate_dataset(const Method& method, const NamedImages& data, double scale,
                              const std::vector<Metric>& metrics);

struct SweepConfig {
  DatasetSpec train;
  DatasetSpec test;
  TrainBudget budget;
  std::vector<Metric> metrics = all_metrics();
  /// Single-level wavelet rows; empty = every registered wavelet.
  std::vector<std::string> wavelets;
  bool include_ghm = true;
};

/// Bicubic row, one row per wavelet, then GHM. A failure while training or
/// scoring one method becomes that row's status.
IqaReport sweep_wavelets(const SweepConfig& cfg,
                         const std::function<void(const std::string&)>& progress = {});

}  // namespace wavesr
