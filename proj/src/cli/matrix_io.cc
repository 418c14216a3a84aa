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

#include "infocomp/cli/matrix_io.h"

#include <bit>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <fstream>
#include <sstream>

#include "infocomp/errors.h"

namespace infocomp {

namespace {

constexpr char kMagic[4] = {'I', 'C', 'M', 'X'};

void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out.push_back(static_cast<char>((v >> (8 * i)) & 0xff));
}

std::uint32_t get_u32(const unsigned char* p) {
  return std::uint32_t{p[0]} | (std::uint32_t{p[1]} << 8) | (std::uint32_t{p[2]} << 16) |
         (std::uint32_t{p[3]} << 24);
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void dump(const std::string& bytes, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
  if (!out) throw IoError("write failed for " + path.string());
}

bool parse_number(const std::string& field, double& value) {
  const char* begin = field.c_str();
  while (*begin == ' ') ++begin;
  char* end = nullptr;
  value = std::strtod(begin, &end);
  if (end == begin) return false;
  while (*end == ' ' || *end == '\r') ++end;
  return *end == '\0';
}

std::vector<std::string> split(const std::string& line) {
  std::vector<std::string> out;
  std::string field;
  std::istringstream ss(line);
  while (std::getline(ss, field, ',')) out.push_back(field);
  return out;
}

Matrix read_csv(const std::string& text, const std::filesystem::path& path) {
  std::istringstream in(text);
  std::string line;
  std::vector<double> values;
  std::size_t cols = 0, rows = 0, line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto fields = split(line);
    std::vector<double> row;
    bool numeric = true;
    for (const auto& f : fields) {
      double v;
      if (!parse_number(f, v)) {
        numeric = false;
        break;
      }
      row.push_back(v);
    }
    if (!numeric) {
      if (rows == 0 && cols == 0) {
        cols = fields.size();
        continue;
      }
      throw IoError(path.string() + ": non-numeric field on line " + std::to_string(line_no));
    }
    if (cols == 0) cols = row.size();
    if (row.size() != cols) {
      throw IoError(path.string() + ": line " + std::to_string(line_no) + " has " +
                    std::to_string(row.size()) + " fields, expected " + std::to_string(cols));
    }
    values.insert(values.end(), row.begin(), row.end());
    ++rows;
  }
  return Matrix(rows, cols, std::move(values));
}

}  // namespace

std::string format_double(double v) {
  if (std::isnan(v)) return "nan";
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

void write_icmx(const Matrix& m, const std::filesystem::path& path) {
  if (m.rows() > UINT32_MAX || m.cols() > UINT32_MAX) {
    throw ValidationError("matrix too large for the sample file format");
  }
  std::string out(kMagic, 4);
  put_u32(out, static_cast<std::uint32_t>(m.rows()));
  put_u32(out, static_cast<std::uint32_t>(m.cols()));
  out.reserve(out.size() + 8 * m.size());
  for (double v : m.data()) {
    const auto bits = std::bit_cast<std::uint64_t>(v);
    for (int i = 0; i < 8; ++i) out.push_back(static_cast<char>((bits >> (8 * i)) & 0xff));
  }
  dump(out, path);
}

Matrix read_icmx(const std::filesystem::path& path) {
  const std::string bytes = slurp(path);
  if (bytes.size() < 12 || std::memcmp(bytes.data(), kMagic, 4) != 0) {
    throw IoError(path.string() + ": not an ICMX sample file");
  }
  const auto* p = reinterpret_cast<const unsigned char*>(bytes.data());
  const std::size_t rows = get_u32(p + 4);
  const std::size_t cols = get_u32(p + 8);
  if (bytes.size() != 12 + 8 * rows * cols) {
    throw IoError(path.string() + ": expected " + std::to_string(12 + 8 * rows * cols) +
                  " bytes for " + std::to_string(rows) + "x" + std::to_string(cols) +
                  ", found " + std::to_string(bytes.size()));
  }
  Matrix m(rows, cols);
  auto data = m.data();
  for (std::size_t i = 0; i < data.size(); ++i) {
    std::uint64_t bits = 0;
    for (int b = 0; b < 8; ++b) bits |= std::uint64_t{p[12 + 8 * i + b]} << (8 * b);
    data[i] = std::bit_cast<double>(bits);
  }
  return m;
}

void write_matrix_csv(const Matrix& m, const std::filesystem::path& path,
                      const std::string& prefix) {
  std::string out;
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (c) out += ',';
    out += prefix + std::to_string(c);
  }
  out += '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (c) out += ',';
      out += format_double(m(r, c));
    }
    out += '\n';
  }
  dump(out, path);
}

Matrix read_matrix(const std::filesystem::path& path) {
  const std::string bytes = slurp(path);
  if (bytes.size() >= 4 && std::memcmp(bytes.data(), kMagic, 4) == 0) return read_icmx(path);
  return read_csv(bytes, path);
}

std::vector<int> read_labels(const std::filesystem::path& path) {
  const Matrix m = read_matrix(path);
  if (m.cols() != 1) {
    throw ValidationError(path.string() + ": labels need exactly one column, found " +
                          std::to_string(m.cols()));
  }
  std::vector<int> out;
  out.reserve(m.rows());
  for (double v : m.data()) {
    if (v != std::round(v) || std::abs(v) > 1e9) {
      throw ValidationError(path.string() + ": label " + format_double(v) + " is not an integer");
    }
    out.push_back(static_cast<int>(v));
  }
  return out;
}

}  // namespace infocomp
