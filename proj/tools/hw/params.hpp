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

#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

namespace hw::cli {

using Json = nlohmann::ordered_json;

/// Bad configuration or unreadable input; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Typed view over an experiment's parameter object. Values may be JSON numbers or
/// strings (as collected from the command line); lists may be arrays or "a,b,c".
class Params {
 public:
  explicit Params(Json j) : j_(std::move(j)) {
    if (!j_.is_object()) throw ConfigError("experiment parameters must be a JSON object");
  }

  bool has(const std::string& key) const { return j_.contains(key) && !j_.at(key).is_null(); }
  std::string str(const std::string& key, const std::string& fallback) const;
  std::string str(const std::string& key) const;
  double num(const std::string& key, double fallback) const;
  double num(const std::string& key) const;
  std::int64_t integer(const std::string& key, std::int64_t fallback) const;
  std::optional<double> maybe_num(const std::string& key) const;
  std::vector<double> nums(const std::string& key, std::vector<double> fallback) const;
  std::vector<std::int64_t> integers(const std::string& key, std::vector<std::int64_t> fallback) const;
  std::vector<std::string> strs(const std::string& key, std::vector<std::string> fallback) const;
  std::uint64_t seed() const { return static_cast<std::uint64_t>(integer("seed", 1)); }

  const Json& json() const { return j_; }
  /// Records a resolved default so the report lists every effective parameter.
  void set(const std::string& key, Json value) { j_[key] = std::move(value); }

 private:
  const Json& at(const std::string& key) const;
  Json j_;
};

}  // namespace hw::cli
