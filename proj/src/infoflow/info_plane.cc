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

#include "infocomp/infoflow/info_plane.h"

#include <algorithm>
#include <string>
#include <utility>

#include "infocomp/compress/pca.h"
#include "infocomp/errors.h"
#include "infocomp/numerics/parallel.h"
#include "infocomp/numerics/rng.h"

namespace infocomp {

namespace {

constexpr std::uint64_t kCollectTag = 0xc011;
// Total variance below this counts as a constant layer.
constexpr double kDegenerateVariance = 1e-12;

SampleMatrix compress(const SampleMatrix& x, std::size_t latent) {
  if (x.cols() <= latent) return x;
  return pca_encode(pca_fit(x, latent), x);
}

void measure_layer(const StochasticDenseNet& net, const LabeledSamples& data,
                   const SampleMatrix& input_codes, const InfoPlaneConfig& config,
                   std::size_t epoch, InfoPlaneRecord& rec) {
  const SampleMatrix acts =
      collect_activations(net, data.features, rec.layer, true,
                          derive_seed(config.train.seed, {kCollectTag, epoch}));
  const Matrix cov = covariance(acts);
  double total = 0.0;
  for (std::size_t i = 0; i < cov.rows(); ++i) total += cov(i, i);
  if (!(total > kDegenerateVariance)) {
    rec.degenerate = true;
    rec.warning = "layer " + std::to_string(rec.layer) + " output has no variance";
    return;
  }
  try {
    const SampleMatrix codes = compress(acts, config.layer_latent);
    rec.mi_x_l = mi_continuous(input_codes, codes, config.estimator);
    rec.mi_l_y = mi_discrete(codes, data.labels, config.estimator);
  } catch (const NumericalError& e) {
    rec.mi_x_l = MiEstimate{};
    rec.mi_l_y = MiEstimate{};
    rec.degenerate = true;
    rec.warning = "layer " + std::to_string(rec.layer) + ": " + e.what();
  }
}

}  // namespace

InfoPlaneRun run_info_plane(const LabeledSamples& data, const NetSpec& spec,
                            const InfoPlaneConfig& config) {
  return run_info_plane(data, make_stochastic_net(spec, derive_seed(config.train.seed, {0x1a})),
                        config);
}

InfoPlaneRun run_info_plane(const LabeledSamples& data, StochasticDenseNet initial,
                            const InfoPlaneConfig& config) {
  if (!(initial.noise_to_signal > 0.0)) {
    throw ValidationError(
        "information plane needs a stochastic network: noise_to_signal must be > 0 "
        "(MI through a deterministic map is infinite)");
  }
  if (config.train.epochs == 0) throw ValidationError("information plane needs epochs >= 1");
  if (config.input_latent == 0 || config.layer_latent == 0) {
    throw ValidationError("latent sizes must be positive");
  }
  InfoPlaneRun run{{}, std::move(initial)};
  std::vector<std::size_t> layers = config.layers;
  if (layers.empty()) {
    for (std::size_t l = 1; l <= run.net.depth(); ++l) layers.push_back(l);
  }
  for (std::size_t l : layers) {
    if (l == 0 || l > run.net.depth()) {
      throw ValidationError("tracked layer " + std::to_string(l) + " outside 1.." +
                            std::to_string(run.net.depth()));
    }
  }

  ClassifierTrainer trainer(run.net, data, config.train);
  const SampleMatrix input_codes = compress(data.features, config.input_latent);
  double previous_loss = evaluate_classifier(run.net, data).loss;

  for (std::size_t epoch = 0; epoch < config.train.epochs; ++epoch) {
    std::vector<InfoPlaneRecord> batch(layers.size());
    const double predicted = prediction_mi(run.net, data);
    for (std::size_t i = 0; i < layers.size(); ++i) {
      batch[i].epoch = epoch;
      batch[i].layer = layers[i];
      batch[i].prediction_mi = predicted;
    }
    parallel_for(layers.size(), [&](std::size_t i) {
      measure_layer(run.net, data, input_codes, config, epoch, batch[i]);
    });
    const ClassifierMetrics metrics = trainer.train_epoch();
    for (auto& r : batch) {
      r.loss = metrics.loss;
      r.loss_delta = metrics.loss - previous_loss;
      r.accuracy = metrics.accuracy;
    }
    previous_loss = metrics.loss;
    run.records.insert(run.records.end(), batch.begin(), batch.end());
  }
  return run;
}

double prediction_mi(const StochasticDenseNet& net, const LabeledSamples& data) {
  return discrete_mi(predict(net, data.features), data.labels);
}

}  // namespace infocomp
