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

#ifndef INFOCOMP_SYNTH_EMBEDDING_H_
#define INFOCOMP_SYNTH_EMBEDDING_H_

#include <cstddef>
#include <string_view>

#include "infocomp/numerics/matrix.h"

namespace infocomp {

enum class EmbeddingKind { kGaussianImage, kRectangleImage, kNonlinearManifold };

std::string_view embedding_name(EmbeddingKind kind);
EmbeddingKind parse_embedding(std::string_view name);

// Smooth injective maps from latent vectors to high-dimensional samples.
// Each map first squashes the latent through a logistic into bounded shape
// parameters (the structured latent) and then renders them.
struct EmbeddingSpec {
  EmbeddingKind kind = EmbeddingKind::kGaussianImage;
  // Image side length in pixels for the image kinds.
  std::size_t side = 16;
  // Output dimension for the manifold kind.
  std::size_t ambient_dim = 32;
  // Gaussian blob width as a fraction of the image side.
  double blob_width = 0.1;
};

std::size_t embedding_latent_dim(const EmbeddingSpec& spec);
std::size_t embedding_output_dim(const EmbeddingSpec& spec);

// Shape parameters fed to the renderer, one row per latent row.
SampleMatrix structured_latent(const SampleMatrix& latents, const EmbeddingSpec& spec);

// Full map: render(structured_latent(latents)). Image pixels are row-major.
SampleMatrix embed(const SampleMatrix& latents, const EmbeddingSpec& spec);

}  // namespace infocomp

#endif  // INFOCOMP_SYNTH_EMBEDDING_H_
