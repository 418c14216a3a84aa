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

#include <exception>
#include <string>

#include "CLI11.hpp"
#include "infocomp/cli/commands.h"
#include "infocomp/errors.h"

namespace infocomp {

namespace {

constexpr int kExitValidation = 2;
constexpr int kExitNumerical = 3;
constexpr int kExitIo = 4;

void add_common(CLI::App* sub, CliFlags& flags) {
  sub->add_option("--config", flags.config, "JSON file with command parameters");
  sub->add_option("--seed", flags.seed, "Base random seed");
  sub->add_option("--out", flags.out, "Output directory");
  sub->add_option("--estimator", flags.estimator, "Entropy estimator: kde_ml, kde_lse, kl, wkl");
  sub->add_option("--compress", flags.compress, "Compression: none, pca:<k> or ae:<path>");
  sub->add_option("--samples", flags.samples, "Sample count");
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Mutual information estimation through compressed representations"};
  app.require_subcommand(1, 1);
  CliFlags flags;

  auto* synth = app.add_subcommand("synth", "Sample a correlated Gaussian pair and embed it");
  auto* estimate = app.add_subcommand("estimate", "Estimate I(X;Y) from sample files");
  auto* benchmark = app.add_subcommand("benchmark", "Run the synthetic estimation benchmark");
  auto* ibflow = app.add_subcommand("ibflow", "Track information flow through a classifier");
  auto* bounds = app.add_subcommand("bounds", "Monte Carlo check of the compression bounds");
  for (auto* sub : {synth, estimate, benchmark, ibflow, bounds}) add_common(sub, flags);
  estimate->add_option("--x", flags.x, "Sample file for X (ICMX or CSV)");
  estimate->add_option("--y", flags.y, "Sample file for Y");
  estimate->add_option("--labels", flags.labels, "One-column file of class labels for Y");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    for (auto* sub : app.get_subcommands()) err << sub->help();
    return kExitValidation;
  }

  const std::string command = app.get_subcommands().front()->get_name();
  try {
    const Json config = resolve_config(command, flags);
    if (command == "synth") cmd_synth(config, out);
    if (command == "estimate") cmd_estimate(config, out);
    if (command == "benchmark") cmd_benchmark(config, out, err);
    if (command == "ibflow") cmd_ibflow(config, out, err);
    if (command == "bounds") cmd_bounds(config, out);
  } catch (const ValidationError& e) {
    err << "error: " << e.what() << "\n";
    return kExitValidation;
  } catch (const NumericalError& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  } catch (const IoError& e) {
    err << "I/O error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::exception& e) {
    err << "numerical failure: " << e.what() << "\n";
    return kExitNumerical;
  }
  return 0;
}

}  // namespace infocomp
