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

#ifndef INFOCOMP_INFOFLOW_INFO_PLANE_H_
#define INFOCOMP_INFOFLOW_INFO_PLANE_H_

#include <cstddef>
#include <string>
#include <vector>

#include "infocomp/entropy/estimate.h"
#include "infocomp/infoflow/network.h"
#include "infocomp/mi/mutual_information.h"

namespace infocomp {

struct InfoPlaneConfig {
  ClassifierTrainConfig train;
  EstimatorConfig estimator;
  std::size_t input_latent = 4;
  std::size_t layer_latent = 4;
  // Layers to track (1..depth); empty tracks all of them.
  std::vector<std::size_t> layers;
};

struct InfoPlaneRecord {
  std::size_t epoch = 0;
  std::size_t layer = 0;
  MiEstimate mi_x_l;
  MiEstimate mi_l_y;
  // Noiseless loss and accuracy after this epoch's training.
  double loss = 0.0;
  // loss minus the previous epoch's loss (the untrained loss for epoch 0).
  double loss_delta = 0.0;
  double accuracy = 0.0;
  // Exact MI between hard predictions and labels for the measured network.
  double prediction_mi = 0.0;
  // Set when the layer output had no variance; both MI values are 0.
  bool degenerate = false;
  std::string warning;
};

struct InfoPlaneRun {
  std::vector<InfoPlaneRecord> records;  // epoch-major, then layer order
  StochasticDenseNet net;
};

// For each of config.train.epochs epochs: measures every tracked layer, then
// trains one epoch. Inputs are PCA-compressed once; each layer's PCA is
// refit at every measurement. Activations are collected with noise on.
// Throws ValidationError when the net has no noise.
InfoPlaneRun run_info_plane(const LabeledSamples& data, const NetSpec& spec,
                            const InfoPlaneConfig& config);

// Same, starting from a given network instead of a fresh one.
InfoPlaneRun run_info_plane(const LabeledSamples& data, StochasticDenseNet initial,
                            const InfoPlaneConfig& config);

// Exact MI between the net's hard predictions and the labels.
double prediction_mi(const StochasticDenseNet& net, const LabeledSamples& data);

}  // namespace infocomp

#endif  // INFOCOMP_INFOFLOW_INFO_PLANE_H_
