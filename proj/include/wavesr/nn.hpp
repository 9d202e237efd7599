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
#include <vector>

#include "wavesr/tensor.hpp"

namespace wavesr {

enum class Activation { relu, linear };

/// 3x3 convolution, stride 1, zero padding 1.
struct ConvLayer {
  Tensor4 weights;  ///< out_ch x in_ch x 3 x 3
  std::vector<double> bias;
  Activation activation = Activation::relu;

  std::size_t in_channels() const { return weights.channels; }
  std::size_t out_channels() const { return weights.batch; }
  /// He-normal weights (std sqrt(2 / fan_in)), zero bias.
  static ConvLayer he_normal(std::size_t in_ch, std::size_t out_ch, Activation act,
                             std::uint64_t seed);
  static ConvLayer zeros(std::size_t in_ch, std::size_t out_ch, Activation act);
};

/// Stack of ConvLayers predicting residuals for a subset of the input bands.
///
/// Output channel k is added to input channel residual_channels[k].
struct Network {
  std::vector<ConvLayer> layers;
  std::size_t input_bands = 0;
  std::size_t output_bands = 0;
  std::vector<std::size_t> residual_channels;

  static constexpr std::size_t kDefaultDepth = 10;
  static constexpr std::size_t kDefaultWidth = 64;

  /// `depth` layers; all but the last have `width` channels and ReLU.
  static Network create(std::size_t input_bands, std::vector<std::size_t> residual_channels,
                        std::uint64_t seed, std::size_t depth = kDefaultDepth,
                        std::size_t width = kDefaultWidth);
  /// Same architecture with every weight and bias zero.
  static Network zeros(std::size_t input_bands, std::vector<std::size_t> residual_channels,
                       std::size_t depth = kDefaultDepth, std::size_t width = kDefaultWidth);

  std::size_t parameter_count() const;
  /// Throws on inconsistent channel chaining or residual wiring.
  void validate() const;
};

Tensor4 conv_forward(const Tensor4& x, const ConvLayer& layer);

/// Activations kept by a forward pass for backprop.
struct ForwardCache {
  std::vector<Tensor4> inputs;       ///< input of each layer
  std::vector<Tensor4> pre_activation;
  bool valid = false;
};

Tensor4 network_forward(const Tensor4& x, const Network& net);
Tensor4 network_forward(const Tensor4& x, const Network& net, ForwardCache& cache);

/// Sum over predicted coefficients of (input + pred - target)^2, divided by
/// the batch size. All three tensors cover the predicted bands only.
double l2_loss(const Tensor4& pred_residual, const Tensor4& input_bands, const Tensor4& target_bands);

/// d l2_loss / d pred_residual.
Tensor4 l2_loss_gradient(const Tensor4& pred_residual, const Tensor4& input_bands,
                         const Tensor4& target_bands);

struct Gradients {
  std::vector<Tensor4> weights;
  std::vector<std::vector<double>> bias;

  static Gradients zeros_like(const Network& net);
};

/// Reverse-mode gradients given d loss / d output. Throws "missing cache"
/// unless `cache` came from network_forward on the same net.
Gradients network_backward(const Network& net, const ForwardCache& cache, const Tensor4& grad_output);

struct LossAndGrad {
  double loss = 0.0;
  Gradients grads;
};

/// Forward, loss and backward for one batch of full band stacks
/// (input_bands channels each).
LossAndGrad loss_and_gradients(const Network& net, const Tensor4& input, const Tensor4& target);

struct AdamState {
  std::uint64_t step = 0;
  double lr = 0.01;
  double beta1 = 0.9;
  double beta2 = 0.999;
  double eps = 1e-8;
  Gradients m;
  Gradients v;

  static AdamState for_network(const Network& net, double lr = 0.01);
};

/// One bias-corrected Adam update of every parameter of `net`.
void adam_step(Network& net, const Gradients& grads, AdamState& state);

struct TrainingPair {
  Tensor4 input;   ///< 1 x input_bands x h x w
  Tensor4 target;  ///< same shape
};

struct TrainConfig {
  std::size_t epochs = 50;
  std::size_t batch = 8;
  std::uint64_t seed = 1;
  double lr = 0.01;
};

struct TrainResult {
  std::vector<double> epoch_loss;  ///< mean per-sample loss of each epoch
};

/// Shuffled minibatch Adam. `on_epoch`, when set, is called after each epoch.
TrainResult train(Network& net, const std::vector<TrainingPair>& data, const TrainConfig& cfg,
                  const std::function<void(std::size_t, double)>& on_epoch = {});

}  // namespace wavesr
