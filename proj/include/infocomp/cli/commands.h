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

#ifndef INFOCOMP_CLI_COMMANDS_H_
#define INFOCOMP_CLI_COMMANDS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <vector>

#include "infocomp/cli/config.h"

namespace infocomp {

inline constexpr std::string_view kCommands[] = {"synth", "estimate", "benchmark", "ibflow",
                                                 "bounds"};

// Command-line values; set ones override the config file.
struct CliFlags {
  std::optional<std::string> config;
  std::optional<std::uint64_t> seed;
  std::optional<std::string> out;
  std::optional<std::string> estimator;
  std::optional<std::string> compress;
  std::optional<std::size_t> samples;
  // estimate only.
  std::optional<std::string> x;
  std::optional<std::string> y;
  std::optional<std::string> labels;
};

// Every key a command accepts, with its default value.
Json default_config(std::string_view command);

// defaults <- config file <- flags. Throws ValidationError for unknown keys,
// wrong types and flags the command does not use.
Json resolve_config(std::string_view command, const CliFlags& flags);

// Each command writes its outputs and "<command>_config.json" (the resolved
// configuration) into config["out"], and a short summary to `out`.
void cmd_synth(const Json& config, std::ostream& out);
void cmd_estimate(const Json& config, std::ostream& out);
// Throws NumericalError when every row failed.
void cmd_benchmark(const Json& config, std::ostream& out, std::ostream& err);
void cmd_ibflow(const Json& config, std::ostream& out, std::ostream& err);
void cmd_bounds(const Json& config, std::ostream& out);

// Parses argv and dispatches. Returns the process exit code: 0 success,
// 2 usage or validation error, 3 numerical failure, 4 I/O failure.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace infocomp

#endif  // INFOCOMP_CLI_COMMANDS_H_
