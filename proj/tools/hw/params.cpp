// Copyright 2026 The hw Authors
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

#include "params.hpp"

#include <sstream>

namespace hw::cli {
namespace {

double parse_double(const std::string& key, const std::string& s) {
  try {
    std::size_t used = 0;
    const double v = std::stod(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ConfigError("parameter '" + key + "': expected a number, got '" + s + "'");
  }
}

double as_double(const std::string& key, const Json& v) {
  if (v.is_number()) return v.get<double>();
  if (v.is_string()) return parse_double(key, v.get<std::string>());
  throw ConfigError("parameter '" + key + "': expected a number");
}

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ','))
    if (!item.empty()) out.push_back(item);
  return out;
}

}  // namespace

const Json& Params::at(const std::string& key) const {
  if (!has(key)) throw ConfigError("missing required parameter '" + key + "'");
  return j_.at(key);
}

std::string Params::str(const std::string& key) const {
  const Json& v = at(key);
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number()) return v.dump();
  throw ConfigError("parameter '" + key + "': expected a string");
}

std::string Params::str(const std::string& key, const std::string& fallback) const {
  return has(key) ? str(key) : fallback;
}

double Params::num(const std::string& key) const { return as_double(key, at(key)); }

double Params::num(const std::string& key, double fallback) const { return has(key) ? num(key) : fallback; }

std::optional<double> Params::maybe_num(const std::string& key) const {
  if (!has(key)) return std::nullopt;
  return num(key);
}

std::int64_t Params::integer(const std::string& key, std::int64_t fallback) const {
  if (!has(key)) return fallback;
  const double v = num(key);
  if (v != static_cast<double>(static_cast<std::int64_t>(v)))
    throw ConfigError("parameter '" + key + "': expected an integer");
  return static_cast<std::int64_t>(v);
}

std::vector<double> Params::nums(const std::string& key, std::vector<double> fallback) const {
  if (!has(key)) return fallback;
  const Json& v = at(key);
  std::vector<double> out;
  if (v.is_array()) {
    for (const auto& x : v) out.push_back(as_double(key, x));
  } else if (v.is_string()) {
    for (const auto& s : split(v.get<std::string>())) out.push_back(parse_double(key, s));
  } else {
    out.push_back(as_double(key, v));
  }
  return out;
}

std::vector<std::int64_t> Params::integers(const std::string& key, std::vector<std::int64_t> fallback) const {
  if (!has(key)) return fallback;
  std::vector<std::int64_t> out;
  for (double x : nums(key, {})) {
    if (x != static_cast<double>(static_cast<std::int64_t>(x)))
      throw ConfigError("parameter '" + key + "': expected integers");
    out.push_back(static_cast<std::int64_t>(x));
  }
  return out;
}

std::vector<std::string> Params::strs(const std::string& key, std::vector<std::string> fallback) const {
  if (!has(key)) return fallback;
  const Json& v = at(key);
  if (v.is_array()) {
    std::vector<std::string> out;
    for (const auto& x : v) {
      if (!x.is_string()) throw ConfigError("parameter '" + key + "': expected strings");
      out.push_back(x.get<std::string>());
    }
    return out;
  }
  return split(str(key));
}

}  // namespace hw::cli
