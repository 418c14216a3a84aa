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

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "infocomp/cli/commands.h"
#include "infocomp/cli/config.h"
#include "infocomp/cli/matrix_io.h"
#include "infocomp/compress/encoder.h"
#include "infocomp/errors.h"
#include "infocomp/mi/mutual_information.h"

namespace infocomp {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string f;
  while (std::getline(in, f, ',')) out.push_back(f);
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("infocomp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  Result run(std::vector<std::string> args) {
    args.insert(args.begin(), "infocomp");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int code = run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
    return {code, out.str(), err.str()};
  }

  std::string write_config(const std::string& name, const std::string& json) {
    const fs::path p = dir_ / name;
    std::ofstream(p) << json;
    return p.string();
  }

  std::string path(const std::string& name) const { return (dir_ / name).string(); }

  fs::path dir_;
};

TEST(MatrixIoTest, IcmxRoundTrip) {
  const fs::path p = fs::temp_directory_path() / "infocomp_roundtrip.icmx";
  const Matrix m{{1.5, -2.0, 1e-300}, {NAN, 3.0, -0.0}};
  write_icmx(m, p);
  const Matrix back = read_matrix(p);
  ASSERT_EQ(back.rows(), 2u);
  ASSERT_EQ(back.cols(), 3u);
  EXPECT_EQ(back(0, 2), 1e-300);
  EXPECT_TRUE(std::isnan(back(1, 0)));
  EXPECT_TRUE(std::signbit(back(1, 2)));
  const std::string bytes = slurp(p);
  EXPECT_EQ(bytes.substr(0, 4), "ICMX");
  EXPECT_EQ(bytes.size(), 12u + 6u * 8u);
  // Little-endian row count.
  EXPECT_EQ(static_cast<unsigned char>(bytes[4]), 2);
  EXPECT_EQ(bytes[5], 0);
  fs::remove(p);
}

TEST(MatrixIoTest, CsvRoundTripAndHeader) {
  const fs::path p = fs::temp_directory_path() / "infocomp_roundtrip.csv";
  const Matrix m{{0.1, 2.0}, {1.0 / 3.0, -4e-12}};
  write_matrix_csv(m, p, "x");
  EXPECT_EQ(slurp(p), "x0,x1\n0.1,2\n0.333333333,-4e-12\n");
  const Matrix back = read_matrix(p);
  EXPECT_EQ(back(1, 0), 0.333333333);
  std::ofstream(p) << "1,2\n3\n";
  EXPECT_THROW(read_matrix(p), IoError);
  std::ofstream(p) << "a,b\n1,x\n";
  EXPECT_THROW(read_matrix(p), IoError);
  std::ofstream(p) << "label\n1\n2.5\n";
  EXPECT_THROW(read_labels(p), ValidationError);
  fs::remove(p);
}

TEST(MatrixIoTest, TruncatedIcmx) {
  const fs::path p = fs::temp_directory_path() / "infocomp_trunc.icmx";
  write_icmx(Matrix{{1.0, 2.0}}, p);
  std::string bytes = slurp(p);
  bytes.pop_back();
  std::ofstream(p, std::ios::binary) << bytes;
  EXPECT_THROW(read_matrix(p), IoError);
  fs::remove(p);
}

TEST(MatrixIoTest, FormatDouble) {
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(0.1234567891234), "0.123456789");
  EXPECT_EQ(format_double(NAN), "nan");
  EXPECT_EQ(format_double(-INFINITY), "-inf");
}

TEST(ConfigTest, MergeRejectsUnknownAndMistyped) {
  const Json defaults = {{"a", 1u}, {"b", 0.5}, {"c", "x"}, {"d", {1.0, 2.0}}, {"e", false}};
  const Json merged = merge_config(defaults, Json{{"a", 3}, {"b", 2}, {"d", {3}}});
  EXPECT_EQ(config_size(merged, "a"), 3u);
  EXPECT_DOUBLE_EQ(config_double(merged, "b"), 2.0);
  EXPECT_EQ(config_doubles(merged, "d"), std::vector<double>{3.0});
  EXPECT_THROW(merge_config(defaults, Json{{"z", 1}}), ValidationError);
  EXPECT_THROW(merge_config(defaults, Json{{"a", -1}}), ValidationError);
  EXPECT_THROW(merge_config(defaults, Json{{"a", 1.5}}), ValidationError);
  EXPECT_THROW(merge_config(defaults, Json{{"c", 1}}), ValidationError);
  EXPECT_THROW(merge_config(defaults, Json{{"d", {"q"}}}), ValidationError);
  EXPECT_THROW(merge_config(defaults, Json{{"e", 1}}), ValidationError);
}

TEST(ConfigTest, FlagsOverrideFile) {
  const fs::path p = fs::temp_directory_path() / "infocomp_cfg.json";
  std::ofstream(p) << R"({"seed": 5, "kappa": 2.0, "samples": 10})";
  CliFlags flags;
  flags.config = p.string();
  flags.samples = 20;
  const Json c = resolve_config("synth", flags);
  EXPECT_EQ(config_u64(c, "seed"), 5u);
  EXPECT_EQ(config_size(c, "samples"), 20u);
  EXPECT_DOUBLE_EQ(config_double(c, "kappa"), 2.0);
  flags.x = "a.icmx";
  EXPECT_THROW(resolve_config("synth", flags), ValidationError);
  std::ofstream(p) << "{not json";
  flags = CliFlags{};
  flags.config = p.string();
  EXPECT_THROW(resolve_config("synth", flags), ValidationError);
  fs::remove(p);
}

TEST_F(CliTest, SynthWritesFilesAndManifest) {
  const auto r = run({"synth", "--out", path("s"), "--samples", "100", "--seed", "4", "--config",
                      write_config("c.json", R"({"kappa": 1, "n_prime": 2, "m_prime": 2,
                                                 "embedding": "gaussian_image", "side": 16,
                                                 "csv": true})")});
  ASSERT_EQ(r.code, 0) << r.err;
  for (const char* name : {"xi", "eta", "x", "y"}) {
    const Matrix m = read_matrix(dir_ / "s" / (std::string(name) + ".icmx"));
    EXPECT_EQ(m.rows(), 100u) << name;
    // The CSV export keeps 9 significant digits.
    const Matrix c = read_matrix(dir_ / "s" / (std::string(name) + ".csv"));
    ASSERT_EQ(c.rows(), m.rows());
    ASSERT_EQ(c.cols(), m.cols());
    for (std::size_t i = 0; i < m.size(); ++i) {
      EXPECT_NEAR(c.data()[i], m.data()[i], 1e-8 * std::max(1.0, std::abs(m.data()[i])));
    }
  }
  EXPECT_EQ(read_matrix(dir_ / "s" / "x.icmx").cols(), 256u);
  const Json manifest = Json::parse(slurp(dir_ / "s" / "manifest.json"));
  EXPECT_EQ(manifest["true_mi"].get<double>(), 1.0);
  EXPECT_EQ(manifest["samples"].get<int>(), 100);
  EXPECT_TRUE(fs::exists(dir_ / "s" / "synth_config.json"));
}

TEST_F(CliTest, SynthIsByteIdenticalAndSnapshotReplays) {
  ASSERT_EQ(run({"synth", "--out", path("a"), "--samples", "50", "--seed", "9"}).code, 0);
  ASSERT_EQ(run({"synth", "--out", path("b"), "--samples", "50", "--seed", "9"}).code, 0);
  for (const char* f : {"xi.icmx", "eta.icmx", "x.icmx", "y.icmx", "manifest.json"}) {
    EXPECT_EQ(slurp(dir_ / "a" / f), slurp(dir_ / "b" / f)) << f;
  }
  // The snapshot pins every parameter; only the output directory changes.
  ASSERT_EQ(run({"synth", "--config", path("a/synth_config.json"), "--out", path("c")}).code, 0);
  EXPECT_EQ(slurp(dir_ / "a" / "x.icmx"), slurp(dir_ / "c" / "x.icmx"));
  ASSERT_EQ(run({"synth", "--out", path("d"), "--samples", "50", "--seed", "10"}).code, 0);
  EXPECT_NE(slurp(dir_ / "a" / "xi.icmx"), slurp(dir_ / "d" / "xi.icmx"));
}

TEST_F(CliTest, ValidationExitCodes) {
  EXPECT_EQ(run({"synth", "--out", path("s"), "--config",
                 write_config("neg.json", R"({"kappa": -1})")}).code, 2);
  EXPECT_EQ(run({"synth", "--out", path("s"), "--config",
                 write_config("typo.json", R"({"kapa": 1})")}).code, 2);
  EXPECT_EQ(run({"synth", "--bogus"}).code, 2);
  EXPECT_EQ(run({}).code, 2);
  EXPECT_EQ(run({"synth", "--config", path("missing.json")}).code, 4);
  EXPECT_EQ(run({"bounds", "--compress", "pca:2"}).code, 2);
  EXPECT_EQ(run({"--help"}).code, 0);
}

class EstimateCliTest : public CliTest {
 protected:
  void make_pair(const std::string& name, double kappa, const std::string& extra = "") {
    const auto cfg = write_config(name + ".json", R"({"kappa": )" + std::to_string(kappa) +
                                                     R"(, "n_prime": 1, "m_prime": 1,
                                                     "embedding": "none")" + extra + "}");
    ASSERT_EQ(run({"synth", "--out", path(name), "--samples", "5000", "--seed", "11",
                   "--config", cfg}).code, 0);
  }

  std::vector<std::string> last_row(const std::string& out_dir) {
    const auto rows = lines(slurp(dir_ / out_dir / "estimate.csv"));
    return fields(rows.back());
  }
};

TEST_F(EstimateCliTest, IndependentPairCoversZero) {
  make_pair("ind", 0.0);
  const auto r = run({"estimate", "--x", path("ind/xi.icmx"), "--y", path("ind/eta.icmx"),
                      "--out", path("ind")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto row = last_row("ind");
  ASSERT_EQ(row.size(), 9u);
  EXPECT_LE(std::stod(row[7]), 0.0);
  EXPECT_GE(std::stod(row[8]), 0.0);
  EXPECT_NE(r.out.find("I(X;Y)"), std::string::npos);
}

TEST_F(EstimateCliTest, CorrelatedPairCoversTruth) {
  make_pair("cor", 0.5);
  const auto r = run({"estimate", "--x", path("cor/xi.icmx"), "--y", path("cor/eta.icmx"),
                      "--out", path("cor")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto row = last_row("cor");
  EXPECT_LE(std::stod(row[7]), 0.5);
  EXPECT_GE(std::stod(row[8]), 0.5);
  // A second run appends a row.
  ASSERT_EQ(run({"estimate", "--x", path("cor/xi.icmx"), "--y", path("cor/eta.icmx"), "--out",
                 path("cor"), "--estimator", "kl"}).code, 0);
  const auto all = lines(slurp(dir_ / "cor" / "estimate.csv"));
  ASSERT_EQ(all.size(), 3u);
  EXPECT_EQ(all[0], "x,y,estimator,k,compress,samples,mi,ci_low,ci_high");
  EXPECT_EQ(fields(all[2])[2], "kl");
}

TEST_F(EstimateCliTest, CompressedImagesRoute) {
  ASSERT_EQ(run({"synth", "--out", path("img"), "--samples", "2000", "--seed", "3"}).code, 0);
  const auto r = run({"estimate", "--x", path("img/x.icmx"), "--y", path("img/y.icmx"),
                      "--compress", "pca:2", "--out", path("img")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto row = last_row("img");
  EXPECT_EQ(row[4], "pca:2");
  const Matrix x = read_matrix(dir_ / "img" / "x.icmx");
  const Matrix y = read_matrix(dir_ / "img" / "y.icmx");
  const PcaEncoder ex(pca_fit(x, 2)), ey(pca_fit(y, 2));
  const MiEstimate direct = mi_compressed(x, y, ex, &ey, EstimatorConfig{});
  EXPECT_EQ(row[6], format_double(direct.value));
}

TEST_F(EstimateCliTest, LabelsPath) {
  // y = sign of x carries ln 2 nats.
  Matrix x(4000, 1), labels(4000, 1);
  for (std::size_t i = 0; i < 4000; ++i) {
    x(i, 0) = (static_cast<double>(i) + 0.5) / 4000.0 - 0.5;
    labels(i, 0) = x(i, 0) > 0 ? 1 : 0;
  }
  write_icmx(x, dir_ / "x.icmx");
  write_matrix_csv(labels, dir_ / "labels.csv", "label");
  const auto r = run({"estimate", "--x", path("x.icmx"), "--labels", path("labels.csv"),
                      "--out", path("o")});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NEAR(std::stod(last_row("o")[6]), std::log(2.0), 0.05);
}

TEST_F(EstimateCliTest, Errors) {
  make_pair("e", 0.5);
  const auto bad = run({"estimate", "--x", path("e/xi.icmx"), "--y", path("e/eta.icmx"),
                        "--estimator", "nope"});
  EXPECT_EQ(bad.code, 2);
  EXPECT_NE(bad.err.find("kde_ml, kde_lse, kl, wkl"), std::string::npos) << bad.err;
  EXPECT_EQ(run({"estimate", "--x", path("e/missing.icmx"), "--y", path("e/eta.icmx"), "--out",
                 path("e")}).code, 4);
  EXPECT_EQ(run({"estimate", "--x", path("e/xi.icmx"), "--out", path("e")}).code, 2);
  EXPECT_EQ(run({"estimate", "--x", path("e/xi.icmx"), "--y", path("e/eta.icmx"), "--compress",
                 "zip:3", "--out", path("e")}).code, 2);
}

TEST_F(CliTest, BenchmarkGrid) {
  const auto cfg = write_config("b.json", R"({"kappas": [0.5, 1.0],
                                              "variants": ["raw_latent", "compressed"]})");
  const auto r = run({"benchmark", "--config", cfg, "--samples", "500", "--out", path("b")});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto rows = lines(slurp(dir_ / "b" / "benchmark.csv"));
  ASSERT_EQ(rows.size(), 5u);
  EXPECT_EQ(rows[0], "true_mi,estimate,ci_low,ci_high,variant,estimator,seed");
  EXPECT_EQ(fields(rows[1])[4], "raw_latent");
  EXPECT_EQ(fields(rows[2])[4], "compressed");
  EXPECT_EQ(fields(rows[3])[0], "1");
  // Idempotent.
  ASSERT_EQ(run({"benchmark", "--config", cfg, "--samples", "500", "--out", path("b2")}).code, 0);
  EXPECT_EQ(slurp(dir_ / "b" / "benchmark.csv"), slurp(dir_ / "b2" / "benchmark.csv"));
}

TEST_F(CliTest, BenchmarkErrors) {
  EXPECT_EQ(run({"benchmark", "--config", write_config("e.json", R"({"kappas": []})"), "--out",
                 path("b")}).code, 2);
  EXPECT_EQ(run({"benchmark", "--compress", "ae:model.icae", "--out", path("b")}).code, 2);
  EXPECT_EQ(run({"benchmark", "--config", write_config("v.json", R"({"variants": ["x"]})"),
                 "--out", path("b")}).code, 2);
}

TEST_F(CliTest, BenchmarkAllRowsFailing) {
  const auto cfg = write_config("f.json", R"({"kappas": [1.0], "variants": ["compressed"],
                                              "compressor": "ae", "ae_learning_rate": 1e300,
                                              "ae_epochs": 2})");
  const auto r = run({"benchmark", "--config", cfg, "--samples", "300", "--out", path("f")});
  EXPECT_EQ(r.code, 3) << r.out << r.err;
  const auto rows = lines(slurp(dir_ / "f" / "benchmark.csv"));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(fields(rows[1])[1], "nan");
}

TEST_F(CliTest, IbflowFilesAndReproducibility) {
  const auto cfg = write_config("i.json", R"({"epochs": 3, "layers": [1, 3, 5]})");
  ASSERT_EQ(run({"ibflow", "--config", cfg, "--samples", "1000", "--out", path("i")}).code, 0);
  for (int layer : {1, 3, 5}) {
    const auto rows = lines(slurp(dir_ / "i" / ("layer_" + std::to_string(layer) + ".csv")));
    ASSERT_EQ(rows.size(), 4u);
    EXPECT_EQ(rows[0],
              "epoch,mi_x_l,mi_x_l_ci_low,mi_x_l_ci_high,mi_l_y,mi_l_y_ci_low,mi_l_y_ci_high,"
              "loss,loss_delta,accuracy");
    EXPECT_EQ(fields(rows[3])[0], "2");
  }
  EXPECT_EQ(lines(slurp(dir_ / "i" / "metrics.csv")).size(), 4u);
  ASSERT_EQ(run({"ibflow", "--config", cfg, "--samples", "1000", "--out", path("j")}).code, 0);
  for (const char* f : {"layer_1.csv", "layer_3.csv", "layer_5.csv", "metrics.csv"}) {
    EXPECT_EQ(slurp(dir_ / "i" / f), slurp(dir_ / "j" / f)) << f;
  }
}

TEST_F(CliTest, IbflowErrors) {
  EXPECT_EQ(run({"ibflow", "--config", write_config("n.json", R"({"noise_to_signal": 0.0})"),
                 "--out", path("i")}).code, 2);
  EXPECT_EQ(run({"ibflow", "--config", write_config("m.json", R"({"dataset": "mnist",
                 "mnist_images": "/nonexistent/a", "mnist_labels": "/nonexistent/b"})"),
                 "--out", path("i")}).code, 4);
}

TEST_F(CliTest, BoundsConstructions) {
  ASSERT_EQ(run({"bounds", "--out", path("c"), "--config",
                 write_config("c.json", R"({"seeds": 20})")}).code, 0);
  auto rows = lines(slurp(dir_ / "c" / "bounds.csv"));
  ASSERT_EQ(rows.size(), 21u);
  EXPECT_EQ(rows[0], "seed,i_xy_true,i_exz_y_est,gap_bound,within_bounds");

  ASSERT_EQ(run({"bounds", "--out", path("l"), "--config",
                 write_config("l.json", R"({"seeds": 5, "construction": "lossless"})")}).code, 0);
  rows = lines(slurp(dir_ / "l" / "bounds.csv"));
  for (std::size_t i = 1; i < rows.size(); ++i) EXPECT_EQ(fields(rows[i])[3], "0");

  ASSERT_EQ(run({"bounds", "--out", path("i"), "--config",
                 write_config("i.json", R"({"seeds": 20, "construction": "independence"})")})
                .code,
            0);
  rows = lines(slurp(dir_ / "i" / "bounds.csv"));
  int within = 0;
  for (std::size_t i = 1; i < rows.size(); ++i) within += fields(rows[i])[4] == "true";
  EXPECT_GE(within, 18);
}

}  // namespace
}  // namespace infocomp
