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

#ifndef INFOCOMP_CLI_MATRIX_IO_H_
#define INFOCOMP_CLI_MATRIX_IO_H_

#include <cstdio>
#include <filesystem>
#include <string>
#include <vector>

#include "infocomp/numerics/matrix.h"

namespace infocomp {

// Binary sample file: "ICMX", u32 rows, u32 cols (little-endian), then
// rows*cols little-endian f64 in row-major order.
void write_icmx(const Matrix& m, const std::filesystem::path& path);
Matrix read_icmx(const std::filesystem::path& path);

// Comma-separated, header "<prefix>0,<prefix>1,...", one row per line.
void write_matrix_csv(const Matrix& m, const std::filesystem::path& path,
                      const std::string& prefix = "c");

// ICMX when the file starts with the magic, otherwise CSV (a first line with
// a non-numeric field is taken as a header).
Matrix read_matrix(const std::filesystem::path& path);

// Integer class labels from a one-column sample file.
std::vector<int> read_labels(const std::filesystem::path& path);

// %.9g, with "nan", "inf" and "-inf" for non-finite values.
std::string format_double(double v);

}  // namespace infocomp

#endif  // INFOCOMP_CLI_MATRIX_IO_H_
