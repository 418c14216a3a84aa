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

#include "infocomp/synth/embedding.h"

#include <cmath>
#include <string>

#include "infocomp/errors.h"
#include "infocomp/numerics/special.h"

namespace infocomp {

namespace {

double logistic(double x) {
  return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
}

// Blob centres stay in [0.2, 0.8] of the frame.
constexpr double kCentreLow = 0.2;
constexpr double kCentreSpan = 0.6;
// Edge softness of the rectangle renderer, in pixels.
constexpr double kEdgePixels = 0.35;

void render_gaussian(std::span<const double> centre, std::size_t side, double width,
                     std::span<double> out) {
  const double s = static_cast<double>(side);
  const double inv = 1.0 / (2.0 * width * width);
  for (std::size_t i = 0; i < side; ++i) {
    const double di = static_cast<double>(i) / s - centre[0];
    for (std::size_t j = 0; j < side; ++j) {
      const double dj = static_cast<double>(j) / s - centre[1];
      out[i * side + j] = std::exp(-(di * di + dj * dj) * inv);
    }
  }
}

// params: centre row, centre col, half height, half width.
void render_rectangle(std::span<const double> p, std::size_t side, std::span<double> out) {
  const double s = static_cast<double>(side);
  const double tau = kEdgePixels / s;
  for (std::size_t i = 0; i < side; ++i) {
    const double u = (static_cast<double>(i) + 0.5) / s;
    const double rows = logistic((u - (p[0] - p[2])) / tau) * logistic(((p[0] + p[2]) - u) / tau);
    for (std::size_t j = 0; j < side; ++j) {
      const double v = (static_cast<double>(j) + 0.5) / s;
      const double cols =
          logistic((v - (p[1] - p[3])) / tau) * logistic(((p[1] + p[3]) - v) / tau);
      out[i * side + j] = rows * cols;
    }
  }
}

// The first two coordinates, cos(pi t), are injective on (0,1)^2; the rest
// wrap the surface through sinusoids of frequency up to 4 per axis.
void render_manifold(std::span<const double> t, std::span<double> out) {
  out[0] = std::cos(kPi * t[0]);
  out[1] = std::cos(kPi * t[1]);
  for (std::size_t k = 2; k < out.size(); ++k) {
    const double fa = static_cast<double>(1 + k % 4);
    const double fb = static_cast<double>(1 + (k / 4) % 4);
    out[k] = std::sin(kPi * (fa * t[0] + fb * t[1]) + 0.7 * static_cast<double>(k));
  }
}

}  // namespace

std::string_view embedding_name(EmbeddingKind kind) {
  switch (kind) {
    case EmbeddingKind::kGaussianImage:
      return "gaussian_image";
    case EmbeddingKind::kRectangleImage:
      return "rectangle_image";
    case EmbeddingKind::kNonlinearManifold:
      return "nonlinear_manifold";
  }
  return "unknown";
}

EmbeddingKind parse_embedding(std::string_view name) {
  for (auto k : {EmbeddingKind::kGaussianImage, EmbeddingKind::kRectangleImage,
                 EmbeddingKind::kNonlinearManifold}) {
    if (name == embedding_name(k)) return k;
  }
  throw ValidationError("unknown embedding '" + std::string(name) +
                        "'; valid names: gaussian_image, rectangle_image, nonlinear_manifold");
}

std::size_t embedding_latent_dim(const EmbeddingSpec& spec) {
  return spec.kind == EmbeddingKind::kRectangleImage ? 4 : 2;
}

std::size_t embedding_output_dim(const EmbeddingSpec& spec) {
  if (spec.kind == EmbeddingKind::kNonlinearManifold) return spec.ambient_dim;
  return spec.side * spec.side;
}

SampleMatrix structured_latent(const SampleMatrix& latents, const EmbeddingSpec& spec) {
  const std::size_t d = embedding_latent_dim(spec);
  if (latents.cols() != d) {
    throw ValidationError(std::string(embedding_name(spec.kind)) + " expects " +
                          std::to_string(d) + "-dimensional latents, got " +
                          std::to_string(latents.cols()));
  }
  SampleMatrix out(latents.rows(), d);
  for (std::size_t r = 0; r < latents.rows(); ++r) {
    for (std::size_t c = 0; c < d; ++c) {
      const double p = logistic(latents(r, c));
      switch (spec.kind) {
        case EmbeddingKind::kGaussianImage:
          out(r, c) = kCentreLow + kCentreSpan * p;
          break;
        case EmbeddingKind::kRectangleImage:
          out(r, c) = c < 2 ? 0.25 + 0.5 * p : 0.05 + 0.15 * p;
          break;
        case EmbeddingKind::kNonlinearManifold:
          out(r, c) = p;
          break;
      }
    }
  }
  return out;
}

SampleMatrix embed(const SampleMatrix& latents, const EmbeddingSpec& spec) {
  if (spec.kind != EmbeddingKind::kNonlinearManifold && spec.side < 2) {
    throw ValidationError("image side must be at least 2");
  }
  if (spec.kind == EmbeddingKind::kNonlinearManifold && spec.ambient_dim < 2) {
    throw ValidationError("manifold ambient dimension must be at least 2");
  }
  if (!(spec.blob_width > 0.0)) throw ValidationError("blob width must be positive");
  const SampleMatrix params = structured_latent(latents, spec);
  SampleMatrix out(latents.rows(), embedding_output_dim(spec));
  for (std::size_t r = 0; r < latents.rows(); ++r) {
    switch (spec.kind) {
      case EmbeddingKind::kGaussianImage:
        render_gaussian(params.row(r), spec.side, spec.blob_width, out.row(r));
        break;
      case EmbeddingKind::kRectangleImage:
        render_rectangle(params.row(r), spec.side, out.row(r));
        break;
      case EmbeddingKind::kNonlinearManifold:
        render_manifold(params.row(r), out.row(r));
        break;
    }
  }
  return out;
}

}  // namespace infocomp
