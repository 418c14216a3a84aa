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

#ifndef INFOCOMP_INFOFLOW_NETWORK_H_
#define INFOCOMP_INFOFLOW_NETWORK_H_

#include <cstddef>
#include <cstdint>
#include <vector>

#include "infocomp/compress/dense.h"
#include "infocomp/mi/mutual_information.h"
#include "infocomp/numerics/matrix.h"
#include "infocomp/numerics/rng.h"

namespace infocomp {

struct NetSpec {
  // Input width, hidden widths, class count.
  std::vector<std::size_t> sizes{16, 32, 32, 32, 32, 10};
  double leak = 0.01;
  // Variance of eps in x * (1 + eps); 0 makes the net deterministic.
  double noise_to_signal = 1e-3;
};

// Dense layers with leaky hidden units and a log-softmax head. After every
// layer's activation (including the head) the output is multiplied by
// 1 + eps, eps ~ N(0, noise_to_signal), drawn fresh per entry. Layer l reads
// only the noisy output of layer l-1.
struct StochasticDenseNet {
  std::vector<DenseLayer> layers;
  double noise_to_signal = 0.0;

  std::size_t input_dim() const { return layers.front().in_dim(); }
  std::size_t num_classes() const { return layers.back().out_dim(); }
  std::size_t depth() const { return layers.size(); }
};

StochasticDenseNet make_stochastic_net(const NetSpec& spec, std::uint64_t seed);

// Output of layer `layer` (1..depth) for every row; layer 0 is the input
// itself. With noise on, each layer l draws from Rng(derive_seed(noise_seed,
// {l})).
SampleMatrix collect_activations(const StochasticDenseNet& net, const SampleMatrix& inputs,
                                 std::size_t layer, bool noise_on, std::uint64_t noise_seed);

// Argmax of the noiseless log-probabilities.
std::vector<int> predict(const StochasticDenseNet& net, const SampleMatrix& inputs);

struct ClassifierTrainConfig {
  std::size_t epochs = 30;
  std::size_t batch_size = 128;
  double learning_rate = 1e-3;
  std::uint64_t seed = 0;
};

// Noiseless mean negative log-likelihood and accuracy on a labelled set.
struct ClassifierMetrics {
  double loss = 0.0;
  double accuracy = 0.0;
};
ClassifierMetrics evaluate_classifier(const StochasticDenseNet& net, const LabeledSamples& data);

// Noiseless mean NLL over the whole set and its gradient, flattened in
// flatten_parameters order.
double classifier_loss_gradient(const StochasticDenseNet& net, const LabeledSamples& data,
                                std::vector<double>& gradient);

// Minibatch Adam on the NLL of the noisy log-softmax output. Noise for
// epoch e, layer l comes from derive_seed(seed, {e, l}); batch order from
// derive_seed(seed, {e, 0x5f}).
class ClassifierTrainer {
 public:
  ClassifierTrainer(StochasticDenseNet& net, const LabeledSamples& data,
                    const ClassifierTrainConfig& config);

  // Runs one epoch and returns metrics measured afterwards. Throws
  // NumericalError on a non-finite loss.
  ClassifierMetrics train_epoch();
  std::size_t epochs_done() const { return epoch_; }

 private:
  StochasticDenseNet& net_;
  const LabeledSamples& data_;
  ClassifierTrainConfig config_;
  AdamOptimizer adam_;
  std::size_t epoch_ = 0;
};

struct TrainedClassifier {
  StochasticDenseNet net;
  std::vector<ClassifierMetrics> log;  // one entry per epoch
};

TrainedClassifier train_classifier(const LabeledSamples& data, const NetSpec& spec,
                                   const ClassifierTrainConfig& config);

// Balanced Gaussian classes: means ~ N(0, separation^2 I), unit noise.
LabeledSamples make_blob_classes(std::size_t samples, std::size_t dim,
                                 std::size_t classes, double separation,
                                 std::uint64_t seed);

}  // namespace infocomp

#endif  // INFOCOMP_INFOFLOW_NETWORK_H_
