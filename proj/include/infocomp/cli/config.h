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

#ifndef INFOCOMP_CLI_CONFIG_H_
#define INFOCOMP_CLI_CONFIG_H_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"

namespace infocomp {

using Json = nlohmann::json;

// Parses a JSON object from a file. Throws IoError when unreadable and
// ValidationError when malformed or not an object.
Json load_config_file(const std::filesystem::path& path);

// Overlays `overrides` on `defaults`. Every override key must exist in the
// defaults and have a compatible type: integers where the default is an
// unsigned integer, any number where it is a float, numeric arrays where it
// is an array. Throws ValidationError otherwise.
Json merge_config(const Json& defaults, const Json& overrides);

// Typed accessors that name the key in their errors.
std::string config_string(const Json& config, std::string_view key);
std::uint64_t config_u64(const Json& config, std::string_view key);
std::size_t config_size(const Json& config, std::string_view key);
double config_double(const Json& config, std::string_view key);
bool config_bool(const Json& config, std::string_view key);
std::vector<double> config_doubles(const Json& config, std::string_view key);
std::vector<std::size_t> config_sizes(const Json& config, std::string_view key);
std::vector<std::string> config_strings(const Json& config, std::string_view key);

}  // namespace infocomp

#endif  // INFOCOMP_CLI_CONFIG_H_
