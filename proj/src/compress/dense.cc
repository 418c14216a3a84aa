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

#include "infocomp/compress/dense.h"

#include <cmath>
#include <string>

#include "infocomp/errors.h"

namespace infocomp {

namespace {

double activate(Activation a, double leak, double x) {
  switch (a) {
    case Activation::kLinear:
      return x;
    case Activation::kLeakyRelu:
      return x > 0.0 ? x : leak * x;
    case Activation::kSigmoid:
      return x >= 0.0 ? 1.0 / (1.0 + std::exp(-x)) : std::exp(x) / (1.0 + std::exp(x));
  }
  return x;
}

// Derivative expressed through both pre and post values.
double activate_slope(Activation a, double leak, double pre, double post) {
  switch (a) {
    case Activation::kLinear:
      return 1.0;
    case Activation::kLeakyRelu:
      return pre > 0.0 ? 1.0 : leak;
    case Activation::kSigmoid:
      return post * (1.0 - post);
  }
  return 1.0;
}

}  // namespace

std::string_view activation_name(Activation a) {
  switch (a) {
    case Activation::kLinear:
      return "linear";
    case Activation::kLeakyRelu:
      return "leaky_relu";
    case Activation::kSigmoid:
      return "sigmoid";
  }
  return "unknown";
}

DenseLayer make_dense_layer(std::size_t in, std::size_t out, Activation activation,
                            double leak, Rng& rng) {
  if (in == 0 || out == 0) throw ValidationError("dense layer with zero width");
  DenseLayer layer{Matrix(out, in), std::vector<double>(out), activation, leak};
  const double scale = 1.0 / std::sqrt(static_cast<double>(in));
  for (double& w : layer.weight.data()) w = rng.uniform(-scale, scale);
  for (double& b : layer.bias) b = rng.uniform(-scale, scale);
  return layer;
}

void apply_layer(const DenseLayer& layer, const Matrix& input, Matrix& pre,
                 Matrix& post) {
  const std::size_t in = layer.in_dim();
  const std::size_t out = layer.out_dim();
  if (input.cols() != in) {
    throw ValidationError("layer expects " + std::to_string(in) + " inputs, got " +
                          std::to_string(input.cols()));
  }
  if (pre.rows() != input.rows() || pre.cols() != out) pre = Matrix(input.rows(), out);
  if (post.rows() != input.rows() || post.cols() != out) post = Matrix(input.rows(), out);
  for (std::size_t r = 0; r < input.rows(); ++r) {
    const auto x = input.row(r);
    auto z = pre.row(r);
    auto y = post.row(r);
    for (std::size_t o = 0; o < out; ++o) {
      const auto w = layer.weight.row(o);
      double s = layer.bias[o];
      for (std::size_t i = 0; i < in; ++i) s += w[i] * x[i];
      z[o] = s;
      y[o] = activate(layer.activation, layer.leak, s);
    }
  }
}

std::vector<LayerGradient> zero_gradients(std::span<const DenseLayer> layers) {
  std::vector<LayerGradient> out;
  out.reserve(layers.size());
  for (const auto& l : layers) {
    out.push_back({Matrix(l.out_dim(), l.in_dim()), std::vector<double>(l.out_dim())});
  }
  return out;
}

Matrix backprop_layer(const DenseLayer& layer, const Matrix& input, const Matrix& pre,
                      Matrix& d_post, LayerGradient& grad, bool want_input) {
  const std::size_t in = layer.in_dim();
  const std::size_t out = layer.out_dim();
  const std::size_t batch = input.rows();
  // d_post becomes d_pre in place.
  for (std::size_t r = 0; r < batch; ++r) {
    auto d = d_post.row(r);
    const auto z = pre.row(r);
    for (std::size_t o = 0; o < out; ++o) {
      const double y = activate(layer.activation, layer.leak, z[o]);
      d[o] *= activate_slope(layer.activation, layer.leak, z[o], y);
    }
  }
  for (std::size_t r = 0; r < batch; ++r) {
    const auto d = d_post.row(r);
    const auto x = input.row(r);
    for (std::size_t o = 0; o < out; ++o) {
      const double g = d[o];
      if (g == 0.0) continue;
      auto gw = grad.weight.row(o);
      for (std::size_t i = 0; i < in; ++i) gw[i] += g * x[i];
      grad.bias[o] += g;
    }
  }
  if (!want_input) return Matrix();
  Matrix d_input(batch, in);
  for (std::size_t r = 0; r < batch; ++r) {
    const auto d = d_post.row(r);
    auto dx = d_input.row(r);
    for (std::size_t o = 0; o < out; ++o) {
      const double g = d[o];
      if (g == 0.0) continue;
      const auto w = layer.weight.row(o);
      for (std::size_t i = 0; i < in; ++i) dx[i] += g * w[i];
    }
  }
  return d_input;
}

AdamOptimizer::AdamOptimizer(std::span<const DenseLayer> layers, double learning_rate,
                             double beta1, double beta2, double epsilon)
    : lr_(learning_rate),
      beta1_(beta1),
      beta2_(beta2),
      eps_(epsilon),
      m_(zero_gradients(layers)),
      v_(zero_gradients(layers)) {
  if (!(learning_rate >= 0.0)) throw ValidationError("learning rate must be >= 0");
}

void AdamOptimizer::step(std::span<DenseLayer> layers,
                         std::span<const LayerGradient> grads) {
  ++steps_;
  const double c1 = 1.0 - std::pow(beta1_, static_cast<double>(steps_));
  const double c2 = 1.0 - std::pow(beta2_, static_cast<double>(steps_));
  auto update = [&](std::span<double> p, std::span<const double> g, std::span<double> m,
                    std::span<double> v) {
    for (std::size_t i = 0; i < p.size(); ++i) {
      m[i] = beta1_ * m[i] + (1.0 - beta1_) * g[i];
      v[i] = beta2_ * v[i] + (1.0 - beta2_) * g[i] * g[i];
      const double mhat = m[i] / c1;
      const double vhat = v[i] / c2;
      p[i] -= lr_ * mhat / (std::sqrt(vhat) + eps_);
    }
  };
  for (std::size_t l = 0; l < layers.size(); ++l) {
    update(layers[l].weight.data(), grads[l].weight.data(), m_[l].weight.data(),
           v_[l].weight.data());
    update(layers[l].bias, grads[l].bias, m_[l].bias, v_[l].bias);
  }
}

std::size_t parameter_count(std::span<const DenseLayer> layers) {
  std::size_t n = 0;
  for (const auto& l : layers) n += l.weight.size() + l.bias.size();
  return n;
}

std::vector<double> flatten_parameters(std::span<const DenseLayer> layers) {
  std::vector<double> out;
  out.reserve(parameter_count(layers));
  for (const auto& l : layers) {
    out.insert(out.end(), l.weight.data().begin(), l.weight.data().end());
    out.insert(out.end(), l.bias.begin(), l.bias.end());
  }
  return out;
}

void assign_parameters(std::span<DenseLayer> layers, std::span<const double> flat) {
  std::size_t expected = 0;
  for (const auto& l : layers) expected += l.weight.size() + l.bias.size();
  if (flat.size() != expected) throw ValidationError("parameter vector size mismatch");
  std::size_t at = 0;
  for (auto& l : layers) {
    for (double& w : l.weight.data()) w = flat[at++];
    for (double& b : l.bias) b = flat[at++];
  }
}

std::vector<double> flatten_gradients(std::span<const LayerGradient> grads) {
  std::vector<double> out;
  for (const auto& g : grads) {
    out.insert(out.end(), g.weight.data().begin(), g.weight.data().end());
    out.insert(out.end(), g.bias.begin(), g.bias.end());
  }
  return out;
}

}  // namespace infocomp
