// Copyright 2026 The infocomp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "infocomp/infoflow/network.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "infocomp/errors.h"

namespace infocomp {

namespace {

constexpr std::uint64_t kShuffleTag = 0x5f;

void log_softmax_rows(Matrix& m) {
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto row = m.row(r);
    const double peak = *std::max_element(row.begin(), row.end());
    double s = 0.0;
    for (double v : row) s += std::exp(v - peak);
    const double lse = peak + std::log(s);
    for (double& v : row) v -= lse;
  }
}

// Multiplies m by 1 + sqrt(ntsr) * eps entrywise; stores the factors when
// requested.
void apply_noise(Matrix& m, double noise_to_signal, Rng& rng, Matrix* factors) {
  const double sd = std::sqrt(noise_to_signal);
  if (factors) *factors = Matrix(m.rows(), m.cols());
  double* f = factors ? factors->data().data() : nullptr;
  std::size_t i = 0;
  for (double& v : m.data()) {
    const double k = 1.0 + sd * rng.normal();
    v *= k;
    if (f) f[i++] = k;
  }
}

void check_data(const StochasticDenseNet& net, const LabeledSamples& data) {
  if (data.features.cols() != net.input_dim()) {
    throw ValidationError("classifier expects " + std::to_string(net.input_dim()) +
                          " features, got " + std::to_string(data.features.cols()));
  }
  if (data.labels.size() != data.features.rows()) {
    throw ValidationError("classifier: label count does not match sample count");
  }
  for (int y : data.labels) {
    if (y < 0 || static_cast<std::size_t>(y) >= net.num_classes()) {
      throw ValidationError("classifier: label " + std::to_string(y) + " outside [0, " +
                            std::to_string(net.num_classes()) + ")");
    }
  }
}

Matrix forward_clean(const StochasticDenseNet& net, const SampleMatrix& inputs) {
  Matrix x = inputs, pre, post;
  for (std::size_t l = 0; l < net.depth(); ++l) {
    apply_layer(net.layers[l], x, pre, post);
    if (l + 1 == net.depth()) log_softmax_rows(post);
    x = std::move(post);
    post = Matrix();
  }
  return x;
}

// Mean NLL of the batch and its gradient, accumulated into grads. noise
// holds one generator per layer; an empty span runs noiselessly.
double batch_gradient(const StochasticDenseNet& net, Matrix x,
                      std::span<const std::size_t> ids, const std::vector<int>& labels,
                      std::span<Rng> noise, std::vector<LayerGradient>& grads) {
  const std::size_t depth = net.depth();
  const std::size_t b = x.rows();
  const bool noisy = !noise.empty() && net.noise_to_signal > 0.0;
  std::vector<Matrix> inputs(depth), pres(depth), factors(depth);
  Matrix post;
  for (std::size_t l = 0; l < depth; ++l) {
    inputs[l] = std::move(x);
    apply_layer(net.layers[l], inputs[l], pres[l], post);
    if (l + 1 == depth) log_softmax_rows(post);
    if (noisy) apply_noise(post, net.noise_to_signal, noise[l], &factors[l]);
    x = std::move(post);
    post = Matrix();
  }

  // x holds the (noisy) log-probabilities; dLoss/dx is -1/b at the label.
  double loss = 0.0;
  Matrix d(b, net.num_classes());
  for (std::size_t r = 0; r < b; ++r) {
    const int y = labels[ids[r]];
    loss -= x(r, y);
    d(r, y) = -1.0 / static_cast<double>(b);
  }
  loss /= static_cast<double>(b);
  if (!std::isfinite(loss)) return loss;

  for (std::size_t l = depth; l-- > 0;) {
    if (noisy) {
      const auto f = factors[l].data();
      auto dd = d.data();
      for (std::size_t i = 0; i < dd.size(); ++i) dd[i] *= f[i];
    }
    if (l + 1 == depth) {
      // Through log-softmax: d_pre = d_out - softmax * sum(d_out).
      for (std::size_t r = 0; r < b; ++r) {
        auto row = d.row(r);
        const auto z = pres[l].row(r);
        const double peak = *std::max_element(z.begin(), z.end());
        double s = 0.0;
        for (double v : z) s += std::exp(v - peak);
        double total = 0.0;
        for (double v : row) total += v;
        for (std::size_t j = 0; j < row.size(); ++j) {
          row[j] -= std::exp(z[j] - peak) / s * total;
        }
      }
    }
    d = backprop_layer(net.layers[l], inputs[l], pres[l], d, grads[l], l > 0);
  }
  return loss;
}

}  // namespace

StochasticDenseNet make_stochastic_net(const NetSpec& spec, std::uint64_t seed) {
  if (spec.sizes.size() < 2) throw ValidationError("network needs an input and an output size");
  if (spec.sizes.back() < 2) throw ValidationError("network needs at least 2 classes");
  if (!(spec.noise_to_signal >= 0.0)) throw ValidationError("noise_to_signal must be >= 0");
  Rng rng(seed);
  StochasticDenseNet net;
  net.noise_to_signal = spec.noise_to_signal;
  for (std::size_t i = 0; i + 1 < spec.sizes.size(); ++i) {
    const bool head = i + 2 == spec.sizes.size();
    net.layers.push_back(make_dense_layer(spec.sizes[i], spec.sizes[i + 1],
                                          head ? Activation::kLinear : Activation::kLeakyRelu,
                                          spec.leak, rng));
  }
  return net;
}

SampleMatrix collect_activations(const StochasticDenseNet& net, const SampleMatrix& inputs,
                                 std::size_t layer, bool noise_on, std::uint64_t noise_seed) {
  if (layer > net.depth()) {
    throw ValidationError("layer " + std::to_string(layer) + " exceeds depth " +
                          std::to_string(net.depth()));
  }
  Matrix x = inputs, pre, post;
  for (std::size_t l = 0; l < layer; ++l) {
    apply_layer(net.layers[l], x, pre, post);
    if (l + 1 == net.depth()) log_softmax_rows(post);
    if (noise_on && net.noise_to_signal > 0.0) {
      Rng rng(derive_seed(noise_seed, {l + 1}));
      apply_noise(post, net.noise_to_signal, rng, nullptr);
    }
    x = std::move(post);
    post = Matrix();
  }
  return x;
}

std::vector<int> predict(const StochasticDenseNet& net, const SampleMatrix& inputs) {
  const Matrix logp = forward_clean(net, inputs);
  std::vector<int> out(logp.rows());
  for (std::size_t r = 0; r < logp.rows(); ++r) {
    const auto row = logp.row(r);
    out[r] = static_cast<int>(std::max_element(row.begin(), row.end()) - row.begin());
  }
  return out;
}

double classifier_loss_gradient(const StochasticDenseNet& net, const LabeledSamples& data,
                                std::vector<double>& gradient) {
  check_data(net, data);
  std::vector<std::size_t> ids(data.features.rows());
  std::iota(ids.begin(), ids.end(), 0);
  auto grads = zero_gradients(net.layers);
  const double loss = batch_gradient(net, data.features, ids, data.labels, {}, grads);
  gradient = flatten_gradients(grads);
  return loss;
}

ClassifierMetrics evaluate_classifier(const StochasticDenseNet& net, const LabeledSamples& data) {
  check_data(net, data);
  const Matrix logp = forward_clean(net, data.features);
  ClassifierMetrics m;
  std::size_t hits = 0;
  for (std::size_t r = 0; r < logp.rows(); ++r) {
    const auto row = logp.row(r);
    m.loss -= row[data.labels[r]];
    const auto best = std::max_element(row.begin(), row.end()) - row.begin();
    hits += best == data.labels[r] ? 1 : 0;
  }
  const double n = static_cast<double>(logp.rows());
  m.loss /= n;
  m.accuracy = static_cast<double>(hits) / n;
  return m;
}

ClassifierTrainer::ClassifierTrainer(StochasticDenseNet& net, const LabeledSamples& data,
                                     const ClassifierTrainConfig& config)
    : net_(net), data_(data), config_(config), adam_(net.layers, config.learning_rate) {
  check_data(net, data);
  if (config.batch_size == 0) throw ValidationError("batch size must be positive");
  if (data.features.rows() == 0) throw ValidationError("classifier: empty training set");
}

ClassifierMetrics ClassifierTrainer::train_epoch() {
  const std::size_t depth = net_.depth();
  const std::size_t n = data_.features.rows();
  std::vector<Rng> noise;
  for (std::size_t l = 0; l < depth; ++l) {
    noise.emplace_back(derive_seed(config_.seed, {epoch_, l + 1}));
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  Rng shuffle_rng(derive_seed(config_.seed, {epoch_, kShuffleTag}));
  shuffle_rng.shuffle(std::span<std::size_t>(order));

  for (std::size_t start = 0; start < n; start += config_.batch_size) {
    const std::size_t end = std::min(n, start + config_.batch_size);
    const std::span<const std::size_t> ids(order.data() + start, end - start);
    auto grads = zero_gradients(net_.layers);
    const double loss = batch_gradient(net_, select_rows(data_.features, ids), ids,
                                       data_.labels, noise, grads);
    if (!std::isfinite(loss)) {
      throw NumericalError("classifier training: non-finite loss at epoch " +
                           std::to_string(epoch_));
    }
    adam_.step(net_.layers, grads);
  }
  ++epoch_;
  const ClassifierMetrics m = evaluate_classifier(net_, data_);
  if (!std::isfinite(m.loss)) {
    throw NumericalError("classifier training: non-finite loss after epoch " +
                         std::to_string(epoch_));
  }
  return m;
}

TrainedClassifier train_classifier(const LabeledSamples& data, const NetSpec& spec,
                                   const ClassifierTrainConfig& config) {
  TrainedClassifier out{make_stochastic_net(spec, derive_seed(config.seed, {0x1a})), {}};
  ClassifierTrainer trainer(out.net, data, config);
  for (std::size_t e = 0; e < config.epochs; ++e) out.log.push_back(trainer.train_epoch());
  return out;
}

LabeledSamples make_blob_classes(std::size_t samples, std::size_t dim, std::size_t classes,
                                 double separation, std::uint64_t seed) {
  if (classes < 2 || dim == 0 || samples < classes) {
    throw ValidationError("blob classes: need >= 2 classes, dim >= 1, samples >= classes");
  }
  Rng rng(seed);
  Matrix means(classes, dim);
  for (double& v : means.data()) v = separation * rng.normal();
  LabeledSamples out{SampleMatrix(samples, dim), std::vector<int>(samples)};
  for (std::size_t r = 0; r < samples; ++r) {
    const std::size_t c = r % classes;
    out.labels[r] = static_cast<int>(c);
    for (std::size_t j = 0; j < dim; ++j) out.features(r, j) = means(c, j) + rng.normal();
  }
  return out;
}

}  // namespace infocomp
