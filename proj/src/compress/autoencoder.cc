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

#include "infocomp/compress/autoencoder.h"

#include <bit>
#include <cmath>
#include <cstring>
#include <fstream>
#include <numeric>
#include <string>

#include "infocomp/errors.h"
#include "infocomp/numerics/rng.h"

namespace infocomp {

namespace {

constexpr double kHiddenLeak = 0.2;
constexpr std::uint16_t kModelVersion = 1;

struct Trace {
  std::vector<Matrix> pre;
  std::vector<Matrix> post;
};

Matrix run_layers(std::span<const DenseLayer> layers, const Matrix& input,
                  Trace* trace) {
  Matrix current = input;
  Matrix pre;
  for (const auto& layer : layers) {
    Matrix post;
    apply_layer(layer, current, pre, post);
    if (trace) {
      trace->pre.push_back(pre);
      trace->post.push_back(current);
    }
    current = std::move(post);
  }
  return current;
}

// dLoss/d output for the mean-over-entries loss; returns the loss.
double loss_and_seed(const Matrix& out, const Matrix& target, LossKind loss,
                     double denom, Matrix* d_out) {
  double total = 0.0;
  const auto o = out.data();
  const auto t = target.data();
  if (d_out) *d_out = Matrix(out.rows(), out.cols());
  for (std::size_t i = 0; i < o.size(); ++i) {
    const double r = o[i] - t[i];
    if (loss == LossKind::kMae) {
      total += std::abs(r);
      if (d_out) d_out->data()[i] = (r > 0.0 ? 1.0 : (r < 0.0 ? -1.0 : 0.0)) / denom;
    } else {
      total += r * r;
      if (d_out) d_out->data()[i] = 2.0 * r / denom;
    }
  }
  return total;
}

double batch_step(const DenseAutoencoder& model, const Matrix& batch, LossKind loss,
                  std::vector<LayerGradient>& grads) {
  Trace trace;
  const Matrix out = run_layers(model.layers, batch, &trace);
  const double denom = static_cast<double>(batch.size());
  Matrix d;
  const double total = loss_and_seed(out, batch, loss, denom, &d);
  for (std::size_t l = model.layers.size(); l-- > 0;) {
    d = backprop_layer(model.layers[l], trace.post[l], trace.pre[l], d, grads[l], l > 0);
  }
  return total / denom;
}

template <typename T>
void put(std::ofstream& out, T value) {
  static_assert(std::endian::native == std::endian::little,
                "model files are written on little-endian hosts only");
  out.write(reinterpret_cast<const char*>(&value), sizeof(T));
}

template <typename T>
T take(std::ifstream& in, const std::filesystem::path& path) {
  T value;
  in.read(reinterpret_cast<char*>(&value), sizeof(T));
  if (!in) throw IoError("truncated model file " + path.string());
  return value;
}

}  // namespace

std::string_view loss_name(LossKind loss) {
  return loss == LossKind::kMae ? "mae" : "mse";
}

LossKind parse_loss(std::string_view name) {
  if (name == "mae") return LossKind::kMae;
  if (name == "mse") return LossKind::kMse;
  throw ValidationError("unknown loss '" + std::string(name) + "'; valid names: mae, mse");
}

DenseAutoencoder make_autoencoder(std::span<const std::size_t> sizes, std::uint64_t seed) {
  if (sizes.size() < 2) throw ValidationError("autoencoder needs input and latent sizes");
  Rng rng(seed);
  DenseAutoencoder model;
  const std::size_t depth = sizes.size() - 1;
  for (std::size_t i = 0; i < depth; ++i) {
    const bool latent = i + 1 == depth;
    model.layers.push_back(make_dense_layer(
        sizes[i], sizes[i + 1], latent ? Activation::kSigmoid : Activation::kLeakyRelu,
        kHiddenLeak, rng));
  }
  for (std::size_t i = depth; i-- > 0;) {
    const bool output = i == 0;
    model.layers.push_back(make_dense_layer(
        sizes[i + 1], sizes[i], output ? Activation::kLinear : Activation::kLeakyRelu,
        kHiddenLeak, rng));
  }
  model.encoder_depth = depth;
  return model;
}

DenseAutoencoder ae_train(const SampleMatrix& points, std::span<const std::size_t> sizes,
                          const TrainConfig& config) {
  DenseAutoencoder model = make_autoencoder(sizes, config.seed);
  ae_fit(model, points, config);
  return model;
}

void ae_fit(DenseAutoencoder& model, const SampleMatrix& points, const TrainConfig& config) {
  if (config.batch_size == 0 || config.epochs == 0) {
    throw ValidationError("epochs and batch size must be positive");
  }
  if (points.rows() < config.batch_size) {
    throw ValidationError("ae_train: N=" + std::to_string(points.rows()) +
                          " is smaller than the batch size " +
                          std::to_string(config.batch_size));
  }
  if (points.cols() != model.input_dim()) {
    throw ValidationError("ae_train: input dimension mismatch");
  }
  if (!points.all_finite()) throw ValidationError("ae_train: non-finite samples");

  Rng rng(derive_seed(config.seed, {0x7ae}));
  AdamOptimizer adam(model.layers, config.learning_rate);
  std::vector<std::size_t> order(points.rows());
  std::iota(order.begin(), order.end(), 0);
  auto best = model.layers;
  double best_loss = ae_loss(model, points, config.loss);

  for (std::size_t epoch = 0; epoch < config.epochs; ++epoch) {
    rng.shuffle(std::span<std::size_t>(order));
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t end = std::min(order.size(), start + config.batch_size);
      const Matrix batch = select_rows(
          points, std::span<const std::size_t>(order.data() + start, end - start));
      auto grads = zero_gradients(model.layers);
      batch_step(model, batch, config.loss, grads);
      adam.step(model.layers, grads);
    }
    const double loss = ae_loss(model, points, config.loss);
    if (!std::isfinite(loss)) {
      model.layers = best;
      model.diverged = true;
      return;
    }
    model.loss_log.push_back(loss);
    if (loss <= best_loss) {
      best_loss = loss;
      best = model.layers;
    }
  }
}

SampleMatrix ae_encode(const DenseAutoencoder& model, const SampleMatrix& points) {
  return run_layers(std::span(model.layers).first(model.encoder_depth), points, nullptr);
}

SampleMatrix ae_decode(const DenseAutoencoder& model, const SampleMatrix& codes) {
  return run_layers(std::span(model.layers).subspan(model.encoder_depth), codes, nullptr);
}

SampleMatrix ae_reconstruct(const DenseAutoencoder& model, const SampleMatrix& points) {
  return run_layers(model.layers, points, nullptr);
}

double ae_loss(const DenseAutoencoder& model, const SampleMatrix& points, LossKind loss) {
  const Matrix out = ae_reconstruct(model, points);
  return loss_and_seed(out, points, loss, 1.0, nullptr) /
         static_cast<double>(points.size());
}

double ae_loss_gradient(const DenseAutoencoder& model, const SampleMatrix& points,
                        LossKind loss, std::vector<double>& gradient) {
  auto grads = zero_gradients(model.layers);
  const double value = batch_step(model, points, loss, grads);
  gradient = flatten_gradients(grads);
  return value;
}

void save_autoencoder(const DenseAutoencoder& model, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write("ICAE", 4);
  put<std::uint16_t>(out, kModelVersion);
  put<std::uint32_t>(out, static_cast<std::uint32_t>(model.layers.size()));
  put<std::uint32_t>(out, static_cast<std::uint32_t>(model.encoder_depth));
  for (const auto& l : model.layers) {
    put<std::uint32_t>(out, static_cast<std::uint32_t>(l.in_dim()));
    put<std::uint32_t>(out, static_cast<std::uint32_t>(l.out_dim()));
    put<std::uint8_t>(out, static_cast<std::uint8_t>(l.activation));
    put<double>(out, l.leak);
    for (double w : l.weight.data()) put<double>(out, w);
    for (double b : l.bias) put<double>(out, b);
  }
  if (!out) throw IoError("write failed for " + path.string());
}

DenseAutoencoder load_autoencoder(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open model file " + path.string());
  char magic[4];
  in.read(magic, 4);
  if (!in || std::memcmp(magic, "ICAE", 4) != 0) {
    throw IoError("bad magic at offset 0 of " + path.string());
  }
  const auto version = take<std::uint16_t>(in, path);
  if (version != kModelVersion) {
    throw IoError("unsupported model version " + std::to_string(version));
  }
  const auto count = take<std::uint32_t>(in, path);
  const auto depth = take<std::uint32_t>(in, path);
  if (count == 0 || depth == 0 || depth >= count) throw IoError("malformed layer counts");
  DenseAutoencoder model;
  model.encoder_depth = depth;
  for (std::uint32_t i = 0; i < count; ++i) {
    const auto in_dim = take<std::uint32_t>(in, path);
    const auto out_dim = take<std::uint32_t>(in, path);
    const auto act = take<std::uint8_t>(in, path);
    if (act > static_cast<std::uint8_t>(Activation::kSigmoid)) {
      throw IoError("unknown activation code " + std::to_string(act));
    }
    DenseLayer layer{Matrix(out_dim, in_dim), std::vector<double>(out_dim),
                     static_cast<Activation>(act), take<double>(in, path)};
    for (double& w : layer.weight.data()) w = take<double>(in, path);
    for (double& b : layer.bias) b = take<double>(in, path);
    if (!model.layers.empty() && model.layers.back().out_dim() != in_dim) {
      throw IoError("layer " + std::to_string(i) + " input width does not chain");
    }
    model.layers.push_back(std::move(layer));
  }
  return model;
}

}  // namespace infocomp
