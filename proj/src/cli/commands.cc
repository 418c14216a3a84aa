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

#include "infocomp/cli/commands.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <string>

#include "infocomp/bounds/chain.h"
#include "infocomp/cli/matrix_io.h"
#include "infocomp/compress/encoder.h"
#include "infocomp/errors.h"
#include "infocomp/infoflow/idx.h"
#include "infocomp/infoflow/info_plane.h"
#include "infocomp/mi/mutual_information.h"
#include "infocomp/synth/benchmark.h"
#include "infocomp/synth/embedding.h"
#include "infocomp/synth/gaussian_pair.h"

namespace infocomp {

namespace fs = std::filesystem;

namespace {

Json synth_defaults() {
  return {{"seed", 0u},          {"out", "."},        {"samples", 5000u},
          {"n_prime", 2u},       {"m_prime", 2u},     {"kappa", 1.0},
          {"embedding", "gaussian_image"},            {"side", 16u},
          {"ambient_dim", 32u},  {"blob_width", 0.1}, {"csv", false}};
}

Json estimate_defaults() {
  return {{"seed", 0u},         {"out", "."},  {"x", ""},         {"y", ""},
          {"labels", ""},       {"estimator", "wkl"},             {"k", 5u},
          {"compress", "none"}, {"samples", 0u}};
}

Json benchmark_defaults() {
  return {{"seed", 0u},
          {"out", "."},
          {"kappas", {0.0, 0.5, 1.0, 1.5, 2.0, 2.5, 3.0, 3.5, 4.0, 4.5, 5.0}},
          {"samples", 5000u},
          {"embedding", "gaussian_image"},
          {"side", 16u},
          {"ambient_dim", 32u},
          {"blob_width", 0.1},
          {"variants", {"raw_latent", "structured_latent", "compressed"}},
          {"compressor", "pca"},
          {"code_dim", 0u},
          {"ae_hidden", {64u}},
          {"ae_epochs", 100u},
          {"ae_batch_size", 128u},
          {"ae_learning_rate", 1e-3},
          {"ae_loss", "mae"},
          {"estimator", "wkl"},
          {"k", 5u}};
}

Json ibflow_defaults() {
  return {{"seed", 0u},
          {"out", "."},
          {"dataset", "blob"},
          {"mnist_images", ""},
          {"mnist_labels", ""},
          {"crop", 0u},
          {"samples", 5000u},
          {"blob_dim", 16u},
          {"blob_classes", 10u},
          {"blob_separation", 1.0},
          {"hidden", {32u, 32u, 32u, 32u}},
          {"leak", 0.01},
          {"noise_to_signal", 1e-3},
          {"epochs", 30u},
          {"batch_size", 128u},
          {"learning_rate", 1e-3},
          {"input_latent", 4u},
          {"layer_latent", 4u},
          {"layers", Json::array()},
          {"estimator", "wkl"},
          {"k", 5u}};
}

Json bounds_defaults() {
  return {{"seed", 1u},           {"out", "."},         {"construction", "chain"},
          {"seeds", 20u},         {"samples", 5000u},   {"max_ambient_dim", 5u},
          {"sigma_min", 0.05},    {"sigma_max", 0.5},   {"lost_variance_max", 0.3},
          {"estimator", "wkl"},   {"k", 5u}};
}

fs::path prepare_output(const Json& config, std::string_view command) {
  const fs::path dir = config_string(config, "out");
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw IoError("cannot create output directory " + dir.string() + ": " + ec.message());
  std::ofstream snap(dir / (std::string(command) + "_config.json"), std::ios::trunc);
  if (!snap) throw IoError("cannot write config snapshot in " + dir.string());
  snap << config.dump(2) << '\n';
  return dir;
}

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write " + path.string());
  out << text;
  if (!out) throw IoError("write failed for " + path.string());
}

EstimatorConfig estimator_from(const Json& config) {
  return {parse_entropy_method(config_string(config, "estimator")), config_size(config, "k")};
}

EmbeddingSpec embedding_from(const Json& config, const std::string& kind) {
  EmbeddingSpec spec;
  spec.kind = parse_embedding(kind);
  spec.side = config_size(config, "side");
  spec.ambient_dim = config_size(config, "ambient_dim");
  spec.blob_width = config_double(config, "blob_width");
  return spec;
}

std::string csv_row(std::initializer_list<std::string> fields) {
  std::string s;
  for (const auto& f : fields) {
    if (!s.empty()) s += ',';
    s += f;
  }
  return s + '\n';
}

SampleMatrix first_rows(const SampleMatrix& m, std::size_t n) {
  if (n == 0 || n >= m.rows()) return m;
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return select_rows(m, ids);
}

}  // namespace

Json default_config(std::string_view command) {
  if (command == "synth") return synth_defaults();
  if (command == "estimate") return estimate_defaults();
  if (command == "benchmark") return benchmark_defaults();
  if (command == "ibflow") return ibflow_defaults();
  if (command == "bounds") return bounds_defaults();
  throw ValidationError("unknown command '" + std::string(command) +
                        "' (valid: synth, estimate, benchmark, ibflow, bounds)");
}

Json resolve_config(std::string_view command, const CliFlags& flags) {
  Json config = default_config(command);
  if (flags.config) config = merge_config(config, load_config_file(*flags.config));

  Json overrides = Json::object();
  if (flags.seed) overrides["seed"] = *flags.seed;
  if (flags.out) overrides["out"] = *flags.out;
  if (flags.samples) overrides["samples"] = *flags.samples;
  const std::string name(command);
  if (flags.estimator) {
    if (!config.contains("estimator")) {
      throw ValidationError("--estimator is not used by " + name);
    }
    parse_entropy_method(*flags.estimator);
    overrides["estimator"] = *flags.estimator;
  }
  if (flags.compress) {
    const CompressionSpec spec = parse_compression(*flags.compress);
    if (command == "estimate") {
      overrides["compress"] = *flags.compress;
    } else if (command == "benchmark" && spec.kind == CompressionSpec::Kind::kPca) {
      overrides["compressor"] = "pca";
      overrides["code_dim"] = spec.latent_dim;
    } else if (command == "benchmark" && spec.kind == CompressionSpec::Kind::kNone) {
      auto variants = config_strings(config, "variants");
      for (auto& v : variants) {
        if (v == "compressed") v = "uncompressed";
      }
      overrides["variants"] = variants;
    } else if (command == "ibflow" && spec.kind == CompressionSpec::Kind::kPca) {
      overrides["input_latent"] = spec.latent_dim;
      overrides["layer_latent"] = spec.latent_dim;
    } else {
      throw ValidationError("--compress " + *flags.compress + " is not supported by " + name +
                            (command == "benchmark"
                                 ? " (it trains its own autoencoders; set \"compressor\": \"ae\")"
                                 : ""));
    }
  }
  for (const auto& [key, value] :
       {std::pair{"x", flags.x}, std::pair{"y", flags.y}, std::pair{"labels", flags.labels}}) {
    if (!value) continue;
    if (command != "estimate") throw ValidationError(std::string("--") + key + " is only used by estimate");
    overrides[key] = *value;
  }
  return merge_config(config, overrides);
}

void cmd_synth(const Json& config, std::ostream& out) {
  GaussianPairSpec spec;
  spec.n_prime = config_size(config, "n_prime");
  spec.m_prime = config_size(config, "m_prime");
  spec.kappa = config_double(config, "kappa");
  spec.seed = config_u64(config, "seed");
  const std::size_t samples = config_size(config, "samples");
  if (samples == 0) throw ValidationError("samples must be positive");
  const std::string kind = config_string(config, "embedding");
  std::optional<EmbeddingSpec> embedding;
  if (kind != "none") embedding = embedding_from(config, kind);
  build_covariance(spec);  // validates before any file is touched

  const fs::path dir = prepare_output(config, "synth");
  const GaussianPair pair = sample_gaussian_pair(spec, samples);
  const bool csv = config_bool(config, "csv");
  Json files = Json::object();
  auto save = [&](const std::string& name, const Matrix& m) {
    write_icmx(m, dir / (name + ".icmx"));
    files[name] = name + ".icmx";
    if (csv) write_matrix_csv(m, dir / (name + ".csv"), name + "_");
  };
  save("xi", pair.xi);
  save("eta", pair.eta);
  if (embedding) {
    save("x", embed(pair.xi, *embedding));
    save("y", embed(pair.eta, *embedding));
  }
  const Json manifest = {{"true_mi", pair.true_mi}, {"kappa", spec.kappa},
                         {"n_prime", spec.n_prime}, {"m_prime", spec.m_prime},
                         {"samples", samples},      {"seed", spec.seed},
                         {"embedding", kind},       {"files", files}};
  write_text(dir / "manifest.json", manifest.dump(2) + "\n");
  out << "wrote " << samples << " samples with I(xi;eta) = " << format_double(pair.true_mi)
      << " nats to " << dir.string() << "\n";
}

void cmd_estimate(const Json& config, std::ostream& out) {
  const std::string x_path = config_string(config, "x");
  const std::string y_path = config_string(config, "y");
  const std::string label_path = config_string(config, "labels");
  if (x_path.empty()) throw ValidationError("estimate needs an x sample file (--x)");
  if (y_path.empty() == label_path.empty()) {
    throw ValidationError("estimate needs exactly one of a y sample file (--y) or labels (--labels)");
  }
  const EstimatorConfig estimator = estimator_from(config);
  const CompressionSpec compression = parse_compression(config_string(config, "compress"));
  const std::size_t limit = config_size(config, "samples");

  const SampleMatrix x = first_rows(read_matrix(x_path), limit);
  MiEstimate est;
  const auto x_encoder = make_encoder(compression, x);
  if (!label_path.empty()) {
    std::vector<int> labels = read_labels(label_path);
    if (limit > 0 && labels.size() > limit) labels.resize(limit);
    if (labels.size() != x.rows()) {
      throw ValidationError("x has " + std::to_string(x.rows()) + " rows but there are " +
                            std::to_string(labels.size()) + " labels");
    }
    est = mi_compressed(x, labels, *x_encoder, estimator);
  } else {
    const SampleMatrix y = first_rows(read_matrix(y_path), limit);
    if (y.rows() != x.rows()) {
      throw ValidationError("x has " + std::to_string(x.rows()) + " rows but y has " +
                            std::to_string(y.rows()));
    }
    const auto y_encoder = make_encoder(compression, y);
    est = mi_compressed(x, y, *x_encoder, y_encoder.get(), estimator);
  }

  const fs::path dir = prepare_output(config, "estimate");
  const fs::path csv = dir / "estimate.csv";
  const bool fresh = !fs::exists(csv);
  std::ofstream file(csv, std::ios::app);
  if (!file) throw IoError("cannot write " + csv.string());
  if (fresh) file << "x,y,estimator,k,compress,samples,mi,ci_low,ci_high\n";
  file << csv_row({x_path, label_path.empty() ? y_path : label_path,
                   std::string(method_name(estimator.method)), std::to_string(estimator.k),
                   to_string(compression), std::to_string(x.rows()), format_double(est.value),
                   format_double(est.ci_low), format_double(est.ci_high)});
  out << "I(X;Y) = " << format_double(est.value) << " nats, 95% CI ["
      << format_double(est.ci_low) << ", " << format_double(est.ci_high) << "] ("
      << method_name(estimator.method) << ", k=" << estimator.k << ", N=" << x.rows()
      << ", compress=" << to_string(compression) << ")\n";
  for (const auto& w : est.warnings) out << "warning: " << w << "\n";
}

void cmd_benchmark(const Json& config, std::ostream& out, std::ostream& err) {
  BenchmarkConfig bc;
  bc.kappas = config_doubles(config, "kappas");
  if (bc.kappas.empty()) throw ValidationError("benchmark grid is empty: give at least one kappa");
  bc.samples = config_size(config, "samples");
  bc.embedding = embedding_from(config, config_string(config, "embedding"));
  bc.variants.clear();
  for (const auto& v : config_strings(config, "variants")) bc.variants.push_back(parse_variant(v));
  if (bc.variants.empty()) throw ValidationError("benchmark needs at least one variant");
  const std::string compressor = config_string(config, "compressor");
  if (compressor == "pca") {
    bc.compressor = CompressorKind::kPca;
  } else if (compressor == "ae") {
    bc.compressor = CompressorKind::kAutoencoder;
  } else {
    throw ValidationError("compressor must be pca or ae, got '" + compressor + "'");
  }
  bc.code_dim = config_size(config, "code_dim");
  bc.ae_hidden = config_sizes(config, "ae_hidden");
  bc.ae_train.epochs = config_size(config, "ae_epochs");
  bc.ae_train.batch_size = config_size(config, "ae_batch_size");
  bc.ae_train.learning_rate = config_double(config, "ae_learning_rate");
  bc.ae_train.loss = parse_loss(config_string(config, "ae_loss"));
  bc.estimator = estimator_from(config);
  bc.seed = config_u64(config, "seed");
  for (double k : bc.kappas) {
    if (!(k >= 0.0 && k <= kMaxKappa)) {
      throw ValidationError("kappa " + format_double(k) + " outside [0, 30]");
    }
  }

  const fs::path dir = prepare_output(config, "benchmark");
  const auto rows = run_benchmark(bc);
  std::string csv = "true_mi,estimate,ci_low,ci_high,variant,estimator,seed\n";
  std::size_t ok = 0;
  for (const auto& r : rows) {
    csv += csv_row({format_double(r.true_mi), format_double(r.estimate.value),
                    format_double(r.estimate.ci_low), format_double(r.estimate.ci_high),
                    std::string(variant_name(r.variant)),
                    std::string(method_name(bc.estimator.method)), std::to_string(r.seed)});
    if (r.failed) {
      err << "row kappa=" << format_double(r.true_mi) << " " << variant_name(r.variant)
          << " failed: " << r.note << "\n";
    } else {
      ++ok;
    }
  }
  write_text(dir / "benchmark.csv", csv);
  for (BenchmarkVariant v : bc.variants) {
    out << variant_name(v) << ": grid MSE " << format_double(grid_mse(rows, v)) << " nats^2\n";
  }
  if (ok == 0) throw NumericalError("every benchmark row failed");
}

void cmd_ibflow(const Json& config, std::ostream& out, std::ostream& err) {
  const std::uint64_t seed = config_u64(config, "seed");
  const std::string dataset = config_string(config, "dataset");
  const std::size_t samples = config_size(config, "samples");
  LabeledSamples data;
  if (dataset == "blob") {
    data = make_blob_classes(samples, config_size(config, "blob_dim"),
                             config_size(config, "blob_classes"),
                             config_double(config, "blob_separation"), derive_seed(seed, {0xb10b}));
  } else if (dataset == "mnist") {
    const std::string images = config_string(config, "mnist_images");
    const std::string labels = config_string(config, "mnist_labels");
    if (images.empty() || labels.empty()) {
      throw ValidationError("dataset mnist needs mnist_images and mnist_labels");
    }
    data = load_mnist_idx(images, labels, config_size(config, "crop"));
    if (samples > 0 && samples < data.features.rows()) {
      data.features = first_rows(data.features, samples);
      data.labels.resize(samples);
    }
  } else {
    throw ValidationError("dataset must be blob or mnist, got '" + dataset + "'");
  }
  if (data.labels.empty()) throw ValidationError("ibflow: empty dataset");

  NetSpec spec;
  spec.sizes = {data.features.cols()};
  for (std::size_t h : config_sizes(config, "hidden")) spec.sizes.push_back(h);
  spec.sizes.push_back(static_cast<std::size_t>(
      *std::max_element(data.labels.begin(), data.labels.end()) + 1));
  spec.leak = config_double(config, "leak");
  spec.noise_to_signal = config_double(config, "noise_to_signal");

  InfoPlaneConfig ic;
  ic.train.epochs = config_size(config, "epochs");
  ic.train.batch_size = config_size(config, "batch_size");
  ic.train.learning_rate = config_double(config, "learning_rate");
  ic.train.seed = seed;
  ic.estimator = estimator_from(config);
  ic.input_latent = config_size(config, "input_latent");
  ic.layer_latent = config_size(config, "layer_latent");
  ic.layers = config_sizes(config, "layers");

  const fs::path dir = prepare_output(config, "ibflow");
  const InfoPlaneRun run = run_info_plane(data, spec, ic);

  std::vector<std::size_t> layers;
  for (const auto& r : run.records) {
    if (std::find(layers.begin(), layers.end(), r.layer) == layers.end()) layers.push_back(r.layer);
  }
  std::string metrics = "epoch,loss,loss_delta,accuracy,prediction_mi\n";
  for (std::size_t layer : layers) {
    std::string csv =
        "epoch,mi_x_l,mi_x_l_ci_low,mi_x_l_ci_high,mi_l_y,mi_l_y_ci_low,mi_l_y_ci_high,"
        "loss,loss_delta,accuracy\n";
    for (const auto& r : run.records) {
      if (r.layer != layer) continue;
      csv += csv_row({std::to_string(r.epoch), format_double(r.mi_x_l.value),
                      format_double(r.mi_x_l.ci_low), format_double(r.mi_x_l.ci_high),
                      format_double(r.mi_l_y.value), format_double(r.mi_l_y.ci_low),
                      format_double(r.mi_l_y.ci_high), format_double(r.loss),
                      format_double(r.loss_delta), format_double(r.accuracy)});
      if (layer == layers.front()) {
        metrics += csv_row({std::to_string(r.epoch), format_double(r.loss),
                            format_double(r.loss_delta), format_double(r.accuracy),
                            format_double(r.prediction_mi)});
      }
      if (!r.warning.empty()) err << "epoch " << r.epoch << ": " << r.warning << "\n";
    }
    write_text(dir / ("layer_" + std::to_string(layer) + ".csv"), csv);
  }
  write_text(dir / "metrics.csv", metrics);
  const auto& last = run.records.back();
  out << "trained " << ic.train.epochs << " epochs on " << data.features.rows()
      << " samples: accuracy " << format_double(last.accuracy) << ", loss "
      << format_double(last.loss) << "\n";
  out << "I(prediction;Y) = " << format_double(prediction_mi(run.net, data)) << " nats\n";
}

void cmd_bounds(const Json& config, std::ostream& out) {
  ChainConstruction c;
  c.max_ambient_dim = config_size(config, "max_ambient_dim");
  c.sigma_min = config_double(config, "sigma_min");
  c.sigma_max = config_double(config, "sigma_max");
  c.lost_variance_max = config_double(config, "lost_variance_max");
  c.samples = config_size(config, "samples");
  c.estimator = estimator_from(config);
  const std::string construction = config_string(config, "construction");
  if (construction == "lossless") {
    c.lost_variance_max = 0.0;
  } else if (construction != "chain" && construction != "independence") {
    throw ValidationError("construction must be chain, lossless or independence, got '" +
                          construction + "'");
  }
  const std::size_t count = config_size(config, "seeds");
  if (count == 0) throw ValidationError("seeds must be positive");
  std::vector<std::uint64_t> seeds(count);
  std::iota(seeds.begin(), seeds.end(), config_u64(config, "seed"));

  const fs::path dir = prepare_output(config, "bounds");
  std::string csv = "seed,i_xy_true,i_exz_y_est,gap_bound,within_bounds\n";
  double rate = 0.0;
  if (construction == "independence") {
    const auto report = verify_independence_monte_carlo(c, seeds);
    // Z is independent of (X, Y) and removable, so the gap is zero.
    for (const auto& r : report.rows) {
      csv += csv_row({std::to_string(r.seed), format_double(r.i_xy_true),
                      format_double(r.i_xz_y_est), format_double(0.0),
                      r.within_bounds ? "true" : "false"});
    }
    rate = report.within_rate;
  } else {
    const auto report = verify_chain_monte_carlo(c, seeds);
    for (const auto& r : report.rows) {
      csv += csv_row({std::to_string(r.seed), format_double(r.i_xy_true),
                      format_double(r.i_exz_y_est), format_double(r.gap_bound),
                      r.within_bounds ? "true" : "false"});
    }
    rate = report.within_rate;
  }
  write_text(dir / "bounds.csv", csv);
  out << construction << ": " << count << " constructions, within-bounds rate "
      << format_double(rate) << "\n";
}

}  // namespace infocomp
