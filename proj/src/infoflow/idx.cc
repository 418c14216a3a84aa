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

#include "infocomp/infoflow/idx.h"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iterator>
#include <string>
#include <vector>

#include "infocomp/errors.h"

namespace infocomp {

namespace {

constexpr std::uint32_t kImageMagic = 0x00000803;
constexpr std::uint32_t kLabelMagic = 0x00000801;

std::vector<unsigned char> read_all(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::uint32_t read_be32(const std::vector<unsigned char>& bytes, std::size_t offset,
                        const std::filesystem::path& path) {
  if (offset + 4 > bytes.size()) {
    throw IoError(path.string() + ": truncated header at offset " + std::to_string(offset));
  }
  return (std::uint32_t{bytes[offset]} << 24) | (std::uint32_t{bytes[offset + 1]} << 16) |
         (std::uint32_t{bytes[offset + 2]} << 8) | std::uint32_t{bytes[offset + 3]};
}

void expect_magic(const std::vector<unsigned char>& bytes, std::uint32_t magic,
                  const std::filesystem::path& path) {
  const std::uint32_t got = read_be32(bytes, 0, path);
  if (got != magic) {
    char buf[96];
    std::snprintf(buf, sizeof buf, ": bad magic number 0x%08x at offset 0 (expected 0x%08x)",
                  got, magic);
    throw IoError(path.string() + buf);
  }
}

}  // namespace

LabeledSamples load_mnist_idx(const std::filesystem::path& images,
                              const std::filesystem::path& labels, std::size_t crop) {
  const auto img = read_all(images);
  const auto lab = read_all(labels);
  expect_magic(img, kImageMagic, images);
  expect_magic(lab, kLabelMagic, labels);

  const std::size_t count = read_be32(img, 4, images);
  const std::size_t rows = read_be32(img, 8, images);
  const std::size_t cols = read_be32(img, 12, images);
  const std::size_t label_count = read_be32(lab, 4, labels);
  if (count != label_count) {
    throw IoError("image file has " + std::to_string(count) + " entries but label file has " +
                  std::to_string(label_count));
  }
  const std::size_t pixels = rows * cols;
  if (img.size() < 16 + count * pixels) {
    throw IoError(images.string() + ": truncated payload, expected " +
                  std::to_string(16 + count * pixels) + " bytes, found " +
                  std::to_string(img.size()));
  }
  if (lab.size() < 8 + count) {
    throw IoError(labels.string() + ": truncated payload, expected " +
                  std::to_string(8 + count) + " bytes, found " + std::to_string(lab.size()));
  }
  if (crop > rows || crop > cols) {
    throw ValidationError("crop " + std::to_string(crop) + " exceeds image size " +
                          std::to_string(rows) + "x" + std::to_string(cols));
  }
  const std::size_t out_rows = crop ? crop : rows;
  const std::size_t out_cols = crop ? crop : cols;
  const std::size_t top = (rows - out_rows) / 2;
  const std::size_t left = (cols - out_cols) / 2;

  LabeledSamples out{SampleMatrix(count, out_rows * out_cols), std::vector<int>(count)};
  for (std::size_t n = 0; n < count; ++n) {
    const unsigned char* src = img.data() + 16 + n * pixels;
    auto dst = out.features.row(n);
    for (std::size_t i = 0; i < out_rows; ++i) {
      for (std::size_t j = 0; j < out_cols; ++j) {
        dst[i * out_cols + j] = src[(top + i) * cols + left + j] / 255.0;
      }
    }
    out.labels[n] = lab[8 + n];
  }
  return out;
}

}  // namespace infocomp
