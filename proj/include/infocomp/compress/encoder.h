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

#ifndef INFOCOMP_COMPRESS_ENCODER_H_
#define INFOCOMP_COMPRESS_ENCODER_H_

#include <cstddef>
#include <memory>
#include <string>

#include "infocomp/compress/autoencoder.h"
#include "infocomp/compress/pca.h"
#include "infocomp/numerics/matrix.h"

namespace infocomp {

// A fitted compression map. Implementations are immutable after
// construction and safe to share across threads.
class Encoder {
 public:
  virtual ~Encoder() = default;
  virtual SampleMatrix encode(const SampleMatrix& points) const = 0;
  // decode(encode(points)); the identity for lossless encoders.
  virtual SampleMatrix reconstruct(const SampleMatrix& points) const = 0;
  virtual std::size_t latent_dim(std::size_t input_dim) const = 0;
  virtual std::string name() const = 0;
};

class IdentityEncoder final : public Encoder {
 public:
  SampleMatrix encode(const SampleMatrix& points) const override { return points; }
  SampleMatrix reconstruct(const SampleMatrix& points) const override { return points; }
  std::size_t latent_dim(std::size_t input_dim) const override { return input_dim; }
  std::string name() const override { return "none"; }
};

class PcaEncoder final : public Encoder {
 public:
  explicit PcaEncoder(PcaModel model) : model_(std::move(model)) {}
  SampleMatrix encode(const SampleMatrix& points) const override;
  SampleMatrix reconstruct(const SampleMatrix& points) const override;
  std::size_t latent_dim(std::size_t) const override { return model_.latent_dim(); }
  std::string name() const override;
  const PcaModel& model() const { return model_; }

 private:
  PcaModel model_;
};

class AutoencoderEncoder final : public Encoder {
 public:
  explicit AutoencoderEncoder(DenseAutoencoder model) : model_(std::move(model)) {}
  SampleMatrix encode(const SampleMatrix& points) const override;
  SampleMatrix reconstruct(const SampleMatrix& points) const override;
  std::size_t latent_dim(std::size_t) const override { return model_.latent_dim(); }
  std::string name() const override;
  const DenseAutoencoder& model() const { return model_; }

 private:
  DenseAutoencoder model_;
};

// Parsed form of "none", "pca:<k>" or "ae:<path>".
struct CompressionSpec {
  enum class Kind { kNone, kPca, kAutoencoder } kind = Kind::kNone;
  std::size_t latent_dim = 0;
  std::string model_path;
};

CompressionSpec parse_compression(const std::string& text);
std::string to_string(const CompressionSpec& spec);

// Fits PCA on the given points, loads an autoencoder from disk, or returns
// the identity.
std::unique_ptr<Encoder> make_encoder(const CompressionSpec& spec,
                                      const SampleMatrix& fit_points);

}  // namespace infocomp

#endif  // INFOCOMP_COMPRESS_ENCODER_H_
