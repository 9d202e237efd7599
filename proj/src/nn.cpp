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

#include "wavesr/nn.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

#include "wavesr/error.hpp"

namespace wavesr {

namespace {

using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using ConstMap = Eigen::Map<const RowMatrix>;
using Map = Eigen::Map<RowMatrix>;

// (C*9) x (H*W) patch matrix of item n, zero padded.
RowMatrix im2col(const Tensor4& x, std::size_t n) {
  const std::size_t h = x.height;
  const std::size_t w = x.width;
  RowMatrix cols = RowMatrix::Zero(static_cast<Eigen::Index>(x.channels * 9),
                                   static_cast<Eigen::Index>(h * w));
  for (std::size_t c = 0; c < x.channels; ++c) {
    const double* src = x.plane(n, c);
    for (std::size_t ky = 0; ky < 3; ++ky)
      for (std::size_t kx = 0; kx < 3; ++kx) {
        double* row = cols.row(static_cast<Eigen::Index>(c * 9 + ky * 3 + kx)).data();
        for (std::size_t y = 0; y < h; ++y) {
          const std::ptrdiff_t sy = static_cast<std::ptrdiff_t>(y + ky) - 1;
          if (sy < 0 || sy >= static_cast<std::ptrdiff_t>(h)) continue;
          for (std::size_t xx = 0; xx < w; ++xx) {
            const std::ptrdiff_t sx = static_cast<std::ptrdiff_t>(xx + kx) - 1;
            if (sx < 0 || sx >= static_cast<std::ptrdiff_t>(w)) continue;
            row[y * w + xx] = src[static_cast<std::size_t>(sy) * w + static_cast<std::size_t>(sx)];
          }
        }
      }
  }
  return cols;
}

void col2im_add(const RowMatrix& cols, Tensor4& dx, std::size_t n) {
  const std::size_t h = dx.height;
  const std::size_t w = dx.width;
  for (std::size_t c = 0; c < dx.channels; ++c) {
    double* dst = dx.plane(n, c);
    for (std::size_t ky = 0; ky < 3; ++ky)
      for (std::size_t kx = 0; kx < 3; ++kx) {
        const double* row = cols.row(static_cast<Eigen::Index>(c * 9 + ky * 3 + kx)).data();
        for (std::size_t y = 0; y < h; ++y) {
          const std::ptrdiff_t sy = static_cast<std::ptrdiff_t>(y + ky) - 1;
          if (sy < 0 || sy >= static_cast<std::ptrdiff_t>(h)) continue;
          for (std::size_t xx = 0; xx < w; ++xx) {
            const std::ptrdiff_t sx = static_cast<std::ptrdiff_t>(xx + kx) - 1;
            if (sx < 0 || sx >= static_cast<std::ptrdiff_t>(w)) continue;
            dst[static_cast<std::size_t>(sy) * w + static_cast<std::size_t>(sx)] += row[y * w + xx];
          }
        }
      }
  }
}

ConstMap weight_matrix(const ConvLayer& layer) {
  return ConstMap(layer.weights.data.data(), static_cast<Eigen::Index>(layer.out_channels()),
                  static_cast<Eigen::Index>(layer.in_channels() * 9));
}

// Pre-activation output of a conv layer.
Tensor4 conv_linear(const Tensor4& x, const ConvLayer& layer) {
  require(x.channels == layer.in_channels(), "conv: channel mismatch (input has " +
                                                 std::to_string(x.channels) + ", layer expects " +
                                                 std::to_string(layer.in_channels()) + ")");
  Tensor4 y(x.batch, layer.out_channels(), x.height, x.width);
  const auto wm = weight_matrix(layer);
  const auto hw = static_cast<Eigen::Index>(x.plane_size());
  for (std::size_t n = 0; n < x.batch; ++n) {
    Map out(y.plane(n, 0), static_cast<Eigen::Index>(layer.out_channels()), hw);
    out.noalias() = wm * im2col(x, n);
    for (std::size_t o = 0; o < layer.out_channels(); ++o)
      out.row(static_cast<Eigen::Index>(o)).array() += layer.bias[o];
  }
  return y;
}

void relu_inplace(Tensor4& t) {
  for (double& v : t.data) v = v > 0.0 ? v : 0.0;
}

void check_same(const Tensor4& a, const Tensor4& b, const char* what) {
  require(a.same_shape(b), std::string(what) + ": shape mismatch");
}

}  // namespace

ConvLayer ConvLayer::he_normal(std::size_t in_ch, std::size_t out_ch, Activation act, std::uint64_t seed) {
  ConvLayer l = zeros(in_ch, out_ch, act);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> dist(0.0, std::sqrt(2.0 / static_cast<double>(in_ch * 9)));
  for (double& v : l.weights.data) v = dist(rng);
  return l;
}

ConvLayer ConvLayer::zeros(std::size_t in_ch, std::size_t out_ch, Activation act) {
  require(in_ch > 0 && out_ch > 0, "conv layer needs at least one channel in and out");
  ConvLayer l;
  l.weights = Tensor4(out_ch, in_ch, 3, 3);
  l.bias.assign(out_ch, 0.0);
  l.activation = act;
  return l;
}

Network Network::zeros(std::size_t input_bands, std::vector<std::size_t> residual_channels,
                       std::size_t depth, std::size_t width) {
  require(depth >= 1, "network depth must be >= 1");
  Network net;
  net.input_bands = input_bands;
  net.output_bands = residual_channels.size();
  net.residual_channels = std::move(residual_channels);
  std::size_t in = input_bands;
  for (std::size_t i = 0; i + 1 < depth; ++i) {
    net.layers.push_back(ConvLayer::zeros(in, width, Activation::relu));
    in = width;
  }
  net.layers.push_back(ConvLayer::zeros(in, net.output_bands, Activation::linear));
  net.validate();
  return net;
}

Network Network::create(std::size_t input_bands, std::vector<std::size_t> residual_channels,
                        std::uint64_t seed, std::size_t depth, std::size_t width) {
  Network net = zeros(input_bands, std::move(residual_channels), depth, width);
  std::mt19937_64 seeder(seed);
  for (auto& layer : net.layers) {
    const std::uint64_t layer_seed = seeder();
    layer = ConvLayer::he_normal(layer.in_channels(), layer.out_channels(), layer.activation, layer_seed);
  }
  return net;
}

std::size_t Network::parameter_count() const {
  std::size_t n = 0;
  for (const auto& l : layers) n += l.weights.size() + l.bias.size();
  return n;
}

void Network::validate() const {
  require(!layers.empty(), "network has no layers");
  require(output_bands == residual_channels.size(), "residual wiring does not match output bands");
  for (std::size_t ch : residual_channels)
    require(ch < input_bands, "residual channel out of range");
  std::size_t in = input_bands;
  for (std::size_t i = 0; i < layers.size(); ++i) {
    const auto& l = layers[i];
    require(l.weights.height == 3 && l.weights.width == 3, "conv kernels must be 3x3");
    require(l.in_channels() == in, "layer " + std::to_string(i) + " input channels do not chain");
    require(l.bias.size() == l.out_channels(), "layer " + std::to_string(i) + " bias size mismatch");
    in = l.out_channels();
  }
  require(in == output_bands, "last layer does not produce output_bands channels");
}

Tensor4 conv_forward(const Tensor4& x, const ConvLayer& layer) {
  Tensor4 y = conv_linear(x, layer);
  if (layer.activation == Activation::relu) relu_inplace(y);
  return y;
}

Tensor4 network_forward(const Tensor4& x, const Network& net) {
  require(x.channels == net.input_bands, "network input has wrong channel count");
  Tensor4 cur = x;
  for (const auto& layer : net.layers) cur = conv_forward(cur, layer);
  return cur;
}

Tensor4 network_forward(const Tensor4& x, const Network& net, ForwardCache& cache) {
  require(x.channels == net.input_bands, "network input has wrong channel count");
  cache.inputs.clear();
  cache.pre_activation.clear();
  Tensor4 cur = x;
  for (const auto& layer : net.layers) {
    cache.inputs.push_back(cur);
    Tensor4 z = conv_linear(cur, layer);
    cache.pre_activation.push_back(z);
    if (layer.activation == Activation::relu) relu_inplace(z);
    cur = std::move(z);
  }
  cache.valid = true;
  return cur;
}

double l2_loss(const Tensor4& pred_residual, const Tensor4& input_bands, const Tensor4& target_bands) {
  check_same(pred_residual, input_bands, "l2_loss");
  check_same(pred_residual, target_bands, "l2_loss");
  require(pred_residual.batch > 0, "l2_loss: empty batch");
  double acc = 0.0;
  for (std::size_t i = 0; i < pred_residual.size(); ++i) {
    const double d = input_bands.data[i] + pred_residual.data[i] - target_bands.data[i];
    acc += d * d;
  }
  return acc / static_cast<double>(pred_residual.batch);
}

Tensor4 l2_loss_gradient(const Tensor4& pred_residual, const Tensor4& input_bands,
                         const Tensor4& target_bands) {
  check_same(pred_residual, input_bands, "l2_loss_gradient");
  check_same(pred_residual, target_bands, "l2_loss_gradient");
  Tensor4 g = pred_residual;
  const double scale = 2.0 / static_cast<double>(pred_residual.batch);
  for (std::size_t i = 0; i < g.size(); ++i)
    g.data[i] = scale * (input_bands.data[i] + pred_residual.data[i] - target_bands.data[i]);
  return g;
}

Gradients Gradients::zeros_like(const Network& net) {
  Gradients g;
  for (const auto& l : net.layers) {
    g.weights.emplace_back(l.weights.batch, l.weights.channels, 3, 3);
    g.bias.emplace_back(l.bias.size(), 0.0);
  }
  return g;
}

Gradients network_backward(const Network& net, const ForwardCache& cache, const Tensor4& grad_output) {
  if (!cache.valid || cache.inputs.size() != net.layers.size()) throw Error("missing cache");
  Gradients g = Gradients::zeros_like(net);
  Tensor4 grad = grad_output;
  require(grad.same_shape(cache.pre_activation.back()), "gradient shape does not match network output");
  for (std::size_t li = net.layers.size(); li-- > 0;) {
    const ConvLayer& layer = net.layers[li];
    const Tensor4& z = cache.pre_activation[li];
    const Tensor4& x = cache.inputs[li];
    if (layer.activation == Activation::relu)
      for (std::size_t i = 0; i < grad.size(); ++i)
        if (!(z.data[i] > 0.0)) grad.data[i] = 0.0;

    const auto out_ch = static_cast<Eigen::Index>(layer.out_channels());
    const auto hw = static_cast<Eigen::Index>(x.plane_size());
    Map dw(g.weights[li].data.data(), out_ch, static_cast<Eigen::Index>(layer.in_channels() * 9));
    const auto wm = weight_matrix(layer);
    Tensor4 grad_in(x.batch, x.channels, x.height, x.width);
    for (std::size_t n = 0; n < x.batch; ++n) {
      ConstMap dz(grad.plane(n, 0), out_ch, hw);
      const RowMatrix cols = im2col(x, n);
      dw.noalias() += dz * cols.transpose();
      // Plain loop: Eigen's vectorised sum() peels by address alignment, which
      // would make the result depend on heap layout.
      for (Eigen::Index o = 0; o < out_ch; ++o) {
        const double* row = grad.plane(n, static_cast<std::size_t>(o));
        double acc = 0.0;
        for (Eigen::Index k = 0; k < hw; ++k) acc += row[k];
        g.bias[li][static_cast<std::size_t>(o)] += acc;
      }
      if (li > 0) {
        const RowMatrix dcols = wm.transpose() * dz;
        col2im_add(dcols, grad_in, n);
      }
    }
    grad = std::move(grad_in);
  }
  return g;
}

LossAndGrad loss_and_gradients(const Network& net, const Tensor4& input, const Tensor4& target) {
  check_same(input, target, "loss_and_gradients");
  ForwardCache cache;
  const Tensor4 pred = network_forward(input, net, cache);
  const Tensor4 in_sel = select_channels(input, net.residual_channels);
  const Tensor4 tgt_sel = select_channels(target, net.residual_channels);
  LossAndGrad out;
  out.loss = l2_loss(pred, in_sel, tgt_sel);
  out.grads = network_backward(net, cache, l2_loss_gradient(pred, in_sel, tgt_sel));
  return out;
}

AdamState AdamState::for_network(const Network& net, double lr) {
  AdamState s;
  s.lr = lr;
  s.m = Gradients::zeros_like(net);
  s.v = Gradients::zeros_like(net);
  return s;
}

void adam_step(Network& net, const Gradients& grads, AdamState& state) {
  require(grads.weights.size() == net.layers.size() && grads.bias.size() == net.layers.size() &&
              state.m.weights.size() == net.layers.size() && state.v.weights.size() == net.layers.size(),
          "adam_step: layer count mismatch");
  state.step += 1;
  const double t = static_cast<double>(state.step);
  const double c1 = 1.0 - std::pow(state.beta1, t);
  const double c2 = 1.0 - std::pow(state.beta2, t);
  auto update = [&](double& p, double g, double& m, double& v) {
    m = state.beta1 * m + (1.0 - state.beta1) * g;
    v = state.beta2 * v + (1.0 - state.beta2) * g * g;
    p -= state.lr * (m / c1) / (std::sqrt(v / c2) + state.eps);
  };
  for (std::size_t li = 0; li < net.layers.size(); ++li) {
    auto& layer = net.layers[li];
    require(grads.weights[li].same_shape(layer.weights) && grads.bias[li].size() == layer.bias.size(),
            "adam_step: gradient shape mismatch");
    for (std::size_t i = 0; i < layer.weights.size(); ++i)
      update(layer.weights.data[i], grads.weights[li].data[i], state.m.weights[li].data[i],
             state.v.weights[li].data[i]);
    for (std::size_t i = 0; i < layer.bias.size(); ++i)
      update(layer.bias[i], grads.bias[li][i], state.m.bias[li][i], state.v.bias[li][i]);
  }
}

TrainResult train(Network& net, const std::vector<TrainingPair>& data, const TrainConfig& cfg,
                  const std::function<void(std::size_t, double)>& on_epoch) {
  require(!data.empty(), "train: empty dataset");
  require(cfg.batch >= 1, "train: batch must be >= 1");
  net.validate();
  for (const auto& p : data) {
    require(p.input.batch == 1 && p.input.same_shape(p.target), "train: malformed training pair");
    require(p.input.same_shape(data.front().input), "train: all pairs must share one shape");
    require(p.input.channels == net.input_bands, "train: pair band count does not match network");
  }

  AdamState state = AdamState::for_network(net, cfg.lr);
  std::mt19937_64 rng(cfg.seed);
  std::vector<std::size_t> order(data.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  TrainResult result;
  for (std::size_t epoch = 0; epoch < cfg.epochs; ++epoch) {
    // Fisher-Yates with an explicit draw so the order does not depend on the
    // standard library's shuffle.
    for (std::size_t i = order.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(rng() % i);
      std::swap(order[i - 1], order[j]);
    }
    double total = 0.0;
    for (std::size_t start = 0; start < order.size(); start += cfg.batch) {
      const std::size_t end = std::min(order.size(), start + cfg.batch);
      std::vector<const Tensor4*> ins;
      std::vector<const Tensor4*> tgts;
      for (std::size_t k = start; k < end; ++k) {
        ins.push_back(&data[order[k]].input);
        tgts.push_back(&data[order[k]].target);
      }
      const LossAndGrad lg = loss_and_gradients(net, stack_batch(ins), stack_batch(tgts));
      require(std::isfinite(lg.loss), "train: loss diverged (non-finite)");
      total += lg.loss * static_cast<double>(end - start);
      adam_step(net, lg.grads, state);
    }
    const double mean = total / static_cast<double>(data.size());
    result.epoch_loss.push_back(mean);
    if (on_epoch) on_epoch(epoch, mean);
  }
  return result;
}

}  // namespace wavesr
