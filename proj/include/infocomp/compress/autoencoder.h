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

#ifndef INFOCOMP_COMPRESS_AUTOENCODER_H_
#define INFOCOMP_COMPRESS_AUTOENCODER_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string_view>
#include <vector>

#include "infocomp/compress/dense.h"
#include "infocomp/numerics/matrix.h"

namespace infocomp {

enum class LossKind { kMae, kMse };

std::string_view loss_name(LossKind loss);
LossKind parse_loss(std::string_view name);

struct TrainConfig {
  std::size_t epochs = 100;
  std::size_t batch_size = 128;
  double learning_rate = 1e-3;
  LossKind loss = LossKind::kMae;
  std::uint64_t seed = 0;
};

// Encoder layers take the input down to the latent code; the decoder mirrors
// them back. Hidden layers are leaky rectifiers (slope 0.2), the latent layer
// is a sigmoid and the output layer is linear.
struct DenseAutoencoder {
  std::vector<DenseLayer> layers;
  std::size_t encoder_depth = 0;
  // Full-data loss after each epoch.
  std::vector<double> loss_log;
  // Set when training hit a non-finite loss; the weights are then the best
  // checkpoint seen before that.
  bool diverged = false;

  std::size_t input_dim() const { return layers.front().in_dim(); }
  std::size_t latent_dim() const { return layers[encoder_depth - 1].out_dim(); }
};

// sizes = {input, hidden..., latent}; at least two entries.
DenseAutoencoder make_autoencoder(std::span<const std::size_t> sizes, std::uint64_t seed);

// Trains from the initialization make_autoencoder(sizes, config.seed).
DenseAutoencoder ae_train(const SampleMatrix& points, std::span<const std::size_t> sizes,
                          const TrainConfig& config);
// Continues training an existing model in place.
void ae_fit(DenseAutoencoder& model, const SampleMatrix& points, const TrainConfig& config);

SampleMatrix ae_encode(const DenseAutoencoder& model, const SampleMatrix& points);
SampleMatrix ae_decode(const DenseAutoencoder& model, const SampleMatrix& codes);
SampleMatrix ae_reconstruct(const DenseAutoencoder& model, const SampleMatrix& points);

// Mean over all entries of |r| or r^2 for the reconstruction residual.
double ae_loss(const DenseAutoencoder& model, const SampleMatrix& points, LossKind loss);
// Loss and its gradient with respect to flatten_parameters(model.layers).
double ae_loss_gradient(const DenseAutoencoder& model, const SampleMatrix& points,
                        LossKind loss, std::vector<double>& gradient);

// Binary model file: "ICAE", u16 version, u32 layer count, u32 encoder depth,
// per layer u32 in, u32 out, u8 activation, f64 leak, then f64 weights
// (row-major) and biases. Little-endian throughout.
void save_autoencoder(const DenseAutoencoder& model, const std::filesystem::path& path);
DenseAutoencoder load_autoencoder(const std::filesystem::path& path);

}  // namespace infocomp

#endif  // INFOCOMP_COMPRESS_AUTOENCODER_H_
