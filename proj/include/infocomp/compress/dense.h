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

#ifndef INFOCOMP_COMPRESS_DENSE_H_
#define INFOCOMP_COMPRESS_DENSE_H_

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

#include "infocomp/numerics/matrix.h"
#include "infocomp/numerics/rng.h"

namespace infocomp {

enum class Activation { kLinear, kLeakyRelu, kSigmoid };

std::string_view activation_name(Activation a);

// y = act(W x + b), batched over rows.
struct DenseLayer {
  Matrix weight;  // out x in
  std::vector<double> bias;
  Activation activation = Activation::kLinear;
  double leak = 0.2;

  std::size_t in_dim() const { return weight.cols(); }
  std::size_t out_dim() const { return weight.rows(); }
};

// Weights and biases uniform on +-1/sqrt(in).
DenseLayer make_dense_layer(std::size_t in, std::size_t out, Activation activation,
                            double leak, Rng& rng);

// Fills pre with W x + b and post with the activation of pre.
void apply_layer(const DenseLayer& layer, const Matrix& input, Matrix& pre,
                 Matrix& post);

struct LayerGradient {
  Matrix weight;
  std::vector<double> bias;
};

std::vector<LayerGradient> zero_gradients(std::span<const DenseLayer> layers);

// Backpropagates d_post (dLoss/d post-activation) through one layer.
// Accumulates into grad and returns dLoss/d input when want_input is set
// (an empty matrix otherwise). d_post is overwritten.
Matrix backprop_layer(const DenseLayer& layer, const Matrix& input, const Matrix& pre,
                      Matrix& d_post, LayerGradient& grad, bool want_input);

// Adam with bias correction.
class AdamOptimizer {
 public:
  AdamOptimizer(std::span<const DenseLayer> layers, double learning_rate,
                double beta1 = 0.9, double beta2 = 0.999, double epsilon = 1e-8);
  void step(std::span<DenseLayer> layers, std::span<const LayerGradient> grads);

 private:
  double lr_, beta1_, beta2_, eps_;
  long steps_ = 0;
  std::vector<LayerGradient> m_;
  std::vector<LayerGradient> v_;
};

std::size_t parameter_count(std::span<const DenseLayer> layers);
// Weights (row-major) then bias, layer by layer.
std::vector<double> flatten_parameters(std::span<const DenseLayer> layers);
void assign_parameters(std::span<DenseLayer> layers, std::span<const double> flat);
std::vector<double> flatten_gradients(std::span<const LayerGradient> grads);

}  // namespace infocomp

#endif  // INFOCOMP_COMPRESS_DENSE_H_
