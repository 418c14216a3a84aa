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

#include "infocomp/compress/encoder.h"

#include <charconv>

#include "infocomp/errors.h"

namespace infocomp {

SampleMatrix PcaEncoder::encode(const SampleMatrix& points) const {
  return pca_encode(model_, points);
}

SampleMatrix PcaEncoder::reconstruct(const SampleMatrix& points) const {
  return pca_decode(model_, pca_encode(model_, points));
}

std::string PcaEncoder::name() const { return "pca:" + std::to_string(model_.latent_dim()); }

SampleMatrix AutoencoderEncoder::encode(const SampleMatrix& points) const {
  return ae_encode(model_, points);
}

SampleMatrix AutoencoderEncoder::reconstruct(const SampleMatrix& points) const {
  return ae_reconstruct(model_, points);
}

std::string AutoencoderEncoder::name() const {
  return "ae:" + std::to_string(model_.latent_dim());
}

CompressionSpec parse_compression(const std::string& text) {
  CompressionSpec spec;
  if (text.empty() || text == "none") return spec;
  if (text.rfind("pca:", 0) == 0) {
    const std::string digits = text.substr(4);
    std::size_t k = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), k);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || k == 0) {
      throw ValidationError("bad --compress value '" + text + "': expected pca:<k>, k >= 1");
    }
    spec.kind = CompressionSpec::Kind::kPca;
    spec.latent_dim = k;
    return spec;
  }
  if (text.rfind("ae:", 0) == 0 && text.size() > 3) {
    spec.kind = CompressionSpec::Kind::kAutoencoder;
    spec.model_path = text.substr(3);
    return spec;
  }
  throw ValidationError("bad --compress value '" + text +
                        "'; expected none, pca:<k> or ae:<path>");
}

std::string to_string(const CompressionSpec& spec) {
  switch (spec.kind) {
    case CompressionSpec::Kind::kNone:
      return "none";
    case CompressionSpec::Kind::kPca:
      return "pca:" + std::to_string(spec.latent_dim);
    case CompressionSpec::Kind::kAutoencoder:
      return "ae:" + spec.model_path;
  }
  return "none";
}

std::unique_ptr<Encoder> make_encoder(const CompressionSpec& spec,
                                      const SampleMatrix& fit_points) {
  switch (spec.kind) {
    case CompressionSpec::Kind::kNone:
      return std::make_unique<IdentityEncoder>();
    case CompressionSpec::Kind::kPca:
      return std::make_unique<PcaEncoder>(pca_fit(fit_points, spec.latent_dim));
    case CompressionSpec::Kind::kAutoencoder: {
      auto model = load_autoencoder(spec.model_path);
      if (model.input_dim() != fit_points.cols()) {
        throw ValidationError("autoencoder expects " + std::to_string(model.input_dim()) +
                              " inputs but the data has " +
                              std::to_string(fit_points.cols()) + " columns");
      }
      return std::make_unique<AutoencoderEncoder>(std::move(model));
    }
  }
  return std::make_unique<IdentityEncoder>();
}

}  // namespace infocomp
