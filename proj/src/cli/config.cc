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

#include "infocomp/cli/config.h"

#include <cmath>
#include <fstream>

#include "infocomp/errors.h"

namespace infocomp {

namespace {

std::string known_keys(const Json& defaults) {
  std::string s;
  for (const auto& [k, v] : defaults.items()) {
    if (!s.empty()) s += ", ";
    s += k;
  }
  return s;
}

bool compatible(const Json& def, const Json& v) {
  if (def.is_number_unsigned() || def.is_number_integer()) {
    return v.is_number_unsigned() || (v.is_number_integer() && v.get<std::int64_t>() >= 0);
  }
  if (def.is_number_float()) return v.is_number();
  if (def.is_string()) return v.is_string();
  if (def.is_boolean()) return v.is_boolean();
  if (def.is_array()) {
    if (!v.is_array()) return false;
    // Element type follows the default's first element; an empty default
    // takes non-negative integers.
    const Json proto = def.empty() ? Json(0u) : def.front();
    for (const auto& e : v) {
      if (!compatible(proto, e)) return false;
    }
    return true;
  }
  return false;
}

const Json& at(const Json& config, std::string_view key) {
  const auto it = config.find(std::string(key));
  if (it == config.end()) throw ValidationError("missing config key '" + std::string(key) + "'");
  return *it;
}

[[noreturn]] void bad_type(std::string_view key, std::string_view want) {
  throw ValidationError("config key '" + std::string(key) + "' must be " + std::string(want));
}

}  // namespace

Json load_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open config " + path.string());
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ValidationError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  if (!j.is_object()) throw ValidationError("config " + path.string() + " must be a JSON object");
  return j;
}

Json merge_config(const Json& defaults, const Json& overrides) {
  if (!overrides.is_object()) throw ValidationError("config must be a JSON object");
  Json out = defaults;
  for (const auto& [key, value] : overrides.items()) {
    const auto it = defaults.find(key);
    if (it == defaults.end()) {
      throw ValidationError("unknown config key '" + key + "' (valid keys: " +
                            known_keys(defaults) + ")");
    }
    if (!compatible(*it, value)) {
      throw ValidationError("config key '" + key + "' has the wrong type: got " +
                            value.dump() + ", default is " + it->dump());
    }
    if (it->is_number_float() && !value.is_number_float()) {
      out[key] = value.get<double>();
    } else {
      out[key] = value;
    }
  }
  return out;
}

std::string config_string(const Json& config, std::string_view key) {
  const Json& v = at(config, key);
  if (!v.is_string()) bad_type(key, "a string");
  return v.get<std::string>();
}

std::uint64_t config_u64(const Json& config, std::string_view key) {
  const Json& v = at(config, key);
  if (v.is_number_unsigned()) return v.get<std::uint64_t>();
  if (v.is_number_integer() && v.get<std::int64_t>() >= 0) return v.get<std::uint64_t>();
  bad_type(key, "a non-negative integer");
}

std::size_t config_size(const Json& config, std::string_view key) {
  return static_cast<std::size_t>(config_u64(config, key));
}

double config_double(const Json& config, std::string_view key) {
  const Json& v = at(config, key);
  if (!v.is_number()) bad_type(key, "a number");
  const double d = v.get<double>();
  if (!std::isfinite(d)) bad_type(key, "finite");
  return d;
}

bool config_bool(const Json& config, std::string_view key) {
  const Json& v = at(config, key);
  if (!v.is_boolean()) bad_type(key, "true or false");
  return v.get<bool>();
}

std::vector<double> config_doubles(const Json& config, std::string_view key) {
  const Json& v = at(config, key);
  if (!v.is_array()) bad_type(key, "an array of numbers");
  std::vector<double> out;
  for (const auto& e : v) {
    if (!e.is_number()) bad_type(key, "an array of numbers");
    out.push_back(e.get<double>());
  }
  return out;
}

std::vector<std::size_t> config_sizes(const Json& config, std::string_view key) {
  const Json& v = at(config, key);
  if (!v.is_array()) bad_type(key, "an array of non-negative integers");
  std::vector<std::size_t> out;
  for (const auto& e : v) {
    if (!(e.is_number_unsigned() || (e.is_number_integer() && e.get<std::int64_t>() >= 0))) {
      bad_type(key, "an array of non-negative integers");
    }
    out.push_back(e.get<std::size_t>());
  }
  return out;
}

std::vector<std::string> config_strings(const Json& config, std::string_view key) {
  const Json& v = at(config, key);
  if (!v.is_array()) bad_type(key, "an array of strings");
  std::vector<std::string> out;
  for (const auto& e : v) {
    if (!e.is_string()) bad_type(key, "an array of strings");
    out.push_back(e.get<std::string>());
  }
  return out;
}

}  // namespace infocomp
