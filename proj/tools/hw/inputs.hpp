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

#include <memory>
#include <string>
#include <vector>

#include "hw/diameter.hpp"
#include "hw/group.hpp"
#include "hw/su2.hpp"
#include "params.hpp"

namespace hw::cli {

/// "SL:d:q", "Z:n" or "S:n". SL tables go through the binary cache when HW_CACHE_DIR is set.
std::shared_ptr<const GroupTable> load_group(const std::string& descriptor, std::size_t cap = kDefaultOrderCap);

/// Parses a descriptor without building the table; returns the canonical form.
std::string canonical_descriptor(const std::string& descriptor);

/// "std", "alt", or a JSON file holding a list of d x d integer matrices (nested or flat;
/// bare integers k stand for the k-th power of the generator of Z/n). The identity is added.
GenSet load_genset(const GroupTable& table, const std::string& source);

/// Integer matrices for prime-splitting chains: "std" or a JSON file.
std::vector<IntegerMatrix> load_integer_generators(int d, const std::string& source);

/// "five-adic" or a JSON file of quaternions [w, x, y, z] or 2x2 complex matrices
/// [[[re, im], [re, im]], [[re, im], [re, im]]].
std::vector<SU2Element> load_gates(const std::string& source);

Json read_json_file(const std::string& path);

}  // namespace hw::cli
