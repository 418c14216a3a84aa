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

#include "infocomp/mi/mutual_information.h"

#include <cmath>
#include <map>
#include <string>

#include "infocomp/errors.h"

namespace infocomp {

namespace {

double sum_log(const std::vector<double>& scales) {
  double s = 0.0;
  for (double v : scales) s += std::log(v);
  return s;
}

EntropyEstimate shifted(EntropyEstimate e, double shift) {
  e.value += shift;
  e.ci_low += shift;
  e.ci_high += shift;
  return e;
}

// value = sum w_i c_i; half-widths combined in quadrature with |w_i|.
MiEstimate combine(std::vector<EntropyEstimate> components, std::vector<double> weights,
                   EntropyMethod method) {
  MiEstimate out;
  out.method = method;
  double var = 0.0;
  std::size_t clamped = 0;
  for (std::size_t i = 0; i < components.size(); ++i) {
    out.value += weights[i] * components[i].value;
    const double hw = weights[i] * components[i].half_width();
    var += hw * hw;
    clamped += components[i].clamped;
  }
  const double half = std::sqrt(var);
  out.ci_low = out.value - half;
  out.ci_high = out.value + half;
  if (clamped > 0) {
    out.warnings.push_back(std::to_string(clamped) +
                           " degenerate distances or densities were clamped");
  }
  out.components = std::move(components);
  out.weights = std::move(weights);
  return out;
}

void note_latent(MiEstimate& est, std::size_t latent, const char* side) {
  if (latent >= kLatentDimWarning) {
    est.warnings.push_back(std::string(side) + " latent dimension " + std::to_string(latent) +
                           " is high for nonparametric entropy estimation");
  }
}

}  // namespace

SampleMatrix standardize_columns(const SampleMatrix& x, std::vector<double>* scales) {
  const auto mean = column_means(x);
  std::vector<double> sd(x.cols(), 0.0);
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) {
      const double d = x(r, c) - mean[c];
      sd[c] += d * d;
    }
  for (double& s : sd) {
    s = std::sqrt(s / static_cast<double>(x.rows()));
    if (!(s > 0.0)) s = 1.0;
  }
  SampleMatrix z(x.rows(), x.cols());
  for (std::size_t r = 0; r < x.rows(); ++r)
    for (std::size_t c = 0; c < x.cols(); ++c) z(r, c) = (x(r, c) - mean[c]) / sd[c];
  if (scales) *scales = std::move(sd);
  return z;
}

MiEstimate mi_continuous(const SampleMatrix& x, const SampleMatrix& y,
                         const EstimatorConfig& config) {
  if (x.rows() != y.rows()) {
    throw ValidationError("mi_continuous: x has " + std::to_string(x.rows()) +
                          " rows but y has " + std::to_string(y.rows()));
  }
  if (x.cols() == 0 || y.cols() == 0) throw ValidationError("mi_continuous: empty variable");
  if (x.rows() < min_samples(config)) {
    throw ValidationError("mi_continuous: too few samples for the estimator");
  }
  std::vector<double> sx, sy;
  const SampleMatrix zx = standardize_columns(x, &sx);
  const SampleMatrix zy = standardize_columns(y, &sy);
  const double lx = sum_log(sx);
  const double ly = sum_log(sy);
  auto hx = shifted(estimate_entropy(zx, config), lx);
  auto hy = shifted(estimate_entropy(zy, config), ly);
  auto hxy = shifted(estimate_entropy(concat_columns(zx, zy), config), lx + ly);
  return combine({hx, hy, hxy}, {1.0, 1.0, -1.0}, config.method);
}

MiEstimate mi_discrete(const SampleMatrix& x, const std::vector<int>& labels,
                       const EstimatorConfig& config) {
  if (labels.size() != x.rows()) {
    throw ValidationError("mi_discrete: " + std::to_string(labels.size()) + " labels for " +
                          std::to_string(x.rows()) + " samples");
  }
  std::map<int, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < labels.size(); ++i) classes[labels[i]].push_back(i);
  const std::size_t need = min_samples(config);
  for (const auto& [label, ids] : classes) {
    if (ids.size() < need) {
      throw ValidationError("mi_discrete: class " + std::to_string(label) + " has " +
                            std::to_string(ids.size()) + " samples, the estimator needs " +
                            std::to_string(need));
    }
  }
  std::vector<double> scales;
  const SampleMatrix z = standardize_columns(x, &scales);
  const double shift = sum_log(scales);
  std::vector<EntropyEstimate> components{shifted(estimate_entropy(z, config), shift)};
  std::vector<double> weights{1.0};
  const double n = static_cast<double>(x.rows());
  for (const auto& [label, ids] : classes) {
    components.push_back(shifted(estimate_entropy(select_rows(z, ids), config), shift));
    weights.push_back(-static_cast<double>(ids.size()) / n);
  }
  return combine(std::move(components), std::move(weights), config.method);
}

MiEstimate mi_compressed(const SampleMatrix& x, const SampleMatrix& y,
                         const Encoder& x_encoder, const Encoder* y_encoder,
                         const EstimatorConfig& config) {
  const SampleMatrix cx = x_encoder.encode(x);
  const SampleMatrix cy = y_encoder ? y_encoder->encode(y) : y;
  MiEstimate est = mi_continuous(cx, cy, config);
  est.reconstruction_mse_x = mean_squared_row_error(x, x_encoder.reconstruct(x));
  if (y_encoder) est.reconstruction_mse_y = mean_squared_row_error(y, y_encoder->reconstruct(y));
  note_latent(est, cx.cols(), "x");
  note_latent(est, cy.cols(), "y");
  return est;
}

MiEstimate mi_compressed(const SampleMatrix& x, const std::vector<int>& labels,
                         const Encoder& x_encoder, const EstimatorConfig& config) {
  const SampleMatrix cx = x_encoder.encode(x);
  MiEstimate est = mi_discrete(cx, labels, config);
  est.reconstruction_mse_x = mean_squared_row_error(x, x_encoder.reconstruct(x));
  note_latent(est, cx.cols(), "x");
  return est;
}

double discrete_mi(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) throw ValidationError("discrete_mi: length mismatch");
  if (a.empty()) throw ValidationError("discrete_mi: empty input");
  std::map<std::pair<int, int>, double> joint;
  std::map<int, double> pa, pb;
  const double n = static_cast<double>(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    joint[{a[i], b[i]}] += 1.0;
    pa[a[i]] += 1.0;
    pb[b[i]] += 1.0;
  }
  double mi = 0.0;
  for (const auto& [key, count] : joint) {
    mi += count / n * std::log(count * n / (pa[key.first] * pb[key.second]));
  }
  return mi;
}

}  // namespace infocomp
