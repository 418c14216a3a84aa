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

#ifndef INFOCOMP_INFOFLOW_IDX_H_
#define INFOCOMP_INFOFLOW_IDX_H_

#include <cstddef>
#include <filesystem>

#include "infocomp/mi/mutual_information.h"

namespace infocomp {

// Reads an MNIST-style image/label pair (big-endian IDX, magic 0x803 for
// images, 0x801 for labels). Pixels are scaled to [0, 1]. crop > 0 keeps the
// central crop x crop window. Throws IoError for unreadable, malformed or
// mismatched files and ValidationError for a crop larger than the image.
LabeledSamples load_mnist_idx(const std::filesystem::path& images,
                              const std::filesystem::path& labels, std::size_t crop = 0);

}  // namespace infocomp

#endif  // INFOCOMP_INFOFLOW_IDX_H_
