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

#include "inputs.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace hw::cli {
namespace {

struct Descriptor {
  char family;  // 'L', 'Z', 'S'
  int d = 2;
  std::uint32_t q = 0;
};

std::uint32_t parse_uint(const std::string& s, const std::string& whole) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ConfigError("bad group descriptor '" + whole + "'");
  const unsigned long v = std::stoul(s);
  if (v > 0xffffffffUL) throw ConfigError("modulus too large in '" + whole + "'");
  return static_cast<std::uint32_t>(v);
}

Descriptor parse(const std::string& s) {
  std::vector<std::string> parts;
  std::stringstream in(s);
  std::string p;
  while (std::getline(in, p, ':')) parts.push_back(p);
  if (parts.size() == 3 && (parts[0] == "SL" || parts[0] == "sl"))
    return {'L', static_cast<int>(parse_uint(parts[1], s)), parse_uint(parts[2], s)};
  if (parts.size() == 2 && (parts[0] == "Z" || parts[0] == "z")) return {'Z', 2, parse_uint(parts[1], s)};
  if (parts.size() == 2 && (parts[0] == "S" || parts[0] == "s")) return {'S', 2, parse_uint(parts[1], s)};
  throw ConfigError("bad group descriptor '" + s + "' (expected SL:d:q, Z:n or S:n)");
}

std::shared_ptr<const GroupTable> build(const Descriptor& d, std::size_t cap) {
  switch (d.family) {
    case 'L': return std::make_shared<const GroupTable>(GroupTable::special_linear(d.d, d.q, cap));
    case 'Z': return std::make_shared<const GroupTable>(GroupTable::cyclic(d.q));
    default: return std::make_shared<const GroupTable>(GroupTable::symmetric(static_cast<int>(d.q)));
  }
}

std::vector<std::int64_t> flatten(const Json& m) {
  std::vector<std::int64_t> out;
  if (m.is_number_integer()) return {m.get<std::int64_t>()};
  if (!m.is_array()) throw ConfigError("generator entries must be integer matrices");
  for (const auto& x : m) {
    if (x.is_array()) {
      for (const auto& y : x) {
        if (!y.is_number_integer()) throw ConfigError("matrix entries must be integers");
        out.push_back(y.get<std::int64_t>());
      }
    } else if (x.is_number_integer()) {
      out.push_back(x.get<std::int64_t>());
    } else {
      throw ConfigError("matrix entries must be integers");
    }
  }
  return out;
}

Json generator_list(const std::string& path) {
  const Json j = read_json_file(path);
  if (j.is_array()) return j;
  if (j.is_object() && j.contains("generators") && j["generators"].is_array()) return j["generators"];
  throw ConfigError(path + ": expected a list of matrices or {\"generators\": [...]}");
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError(path + ": " + e.what());
  }
}

std::string canonical_descriptor(const std::string& descriptor) {
  const Descriptor d = parse(descriptor);
  switch (d.family) {
    case 'L': return "SL:" + std::to_string(d.d) + ":" + std::to_string(d.q);
    case 'Z': return "Z:" + std::to_string(d.q);
    default: return "S:" + std::to_string(d.q);
  }
}

std::shared_ptr<const GroupTable> load_group(const std::string& descriptor, std::size_t cap) {
  const Descriptor d = parse(descriptor);
  const char* dir = std::getenv("HW_CACHE_DIR");
  if (d.family != 'L' || dir == nullptr || *dir == '\0') return build(d, cap);

  const auto order = special_linear_order(d.d, d.q);
  if (order > cap)
    throw CapExceededError("|SL_" + std::to_string(d.d) + "(Z/" + std::to_string(d.q) + ")| = " +
                               std::to_string(order) + " exceeds the order cap " + std::to_string(cap),
                           order, cap);
  const auto path = std::filesystem::path(dir) / ("SL_" + std::to_string(d.d) + "_" + std::to_string(d.q) + "_v" +
                                                  std::to_string(kCacheVersion) + ".bin");
  if (std::filesystem::exists(path)) {
    try {
      auto t = std::make_shared<const GroupTable>(load_table(path.string()));
      if (t->order() == order && t->dim() == d.d && t->modulus() == d.q) return t;
    } catch (const std::exception& e) {
      std::cerr << "warning: ignoring unreadable cache " << path << ": " << e.what() << "\n";
    }
  }
  auto t = build(d, cap);
  try {
    std::filesystem::create_directories(dir);
    save_table(*t, path.string());
  } catch (const std::exception& e) {
    std::cerr << "warning: could not write cache " << path << ": " << e.what() << "\n";
  }
  return t;
}

GenSet load_genset(const GroupTable& table, const std::string& source) {
  if (source == "std" || source == "alt") return GenSet::from_matrices(table, standard_generators(table, source), true);
  const int d = table.dim();
  const auto q = table.modulus();
  std::vector<ModMatrix> gens;
  for (const auto& m : generator_list(source)) {
    const auto entries = flatten(m);
    if (entries.size() == 1 && table.family() == GroupFamily::kCyclic) {
      gens.push_back(ModMatrix::from_integers(2, q, std::vector<std::int64_t>{1, entries[0], 0, 1}));
    } else {
      if (entries.size() != static_cast<std::size_t>(d * d))
        throw ConfigError(source + ": expected " + std::to_string(d) + "x" + std::to_string(d) + " matrices");
      gens.push_back(ModMatrix::from_integers(d, q, entries));
    }
  }
  if (gens.empty()) throw ConfigError(source + ": empty generator list");
  return GenSet::from_matrices(table, gens, true);
}

std::vector<IntegerMatrix> load_integer_generators(int d, const std::string& source) {
  if (source == "std") return standard_integer_generators(d);
  std::vector<IntegerMatrix> out;
  for (const auto& m : generator_list(source)) {
    auto entries = flatten(m);
    if (entries.size() != static_cast<std::size_t>(d * d))
      throw ConfigError(source + ": expected " + std::to_string(d) + "x" + std::to_string(d) + " matrices");
    out.push_back(std::move(entries));
  }
  return out;
}

std::vector<SU2Element> load_gates(const std::string& source) {
  if (source == "five-adic") return five_adic_gates();
  const Json j = read_json_file(source);
  const Json& list = j.is_object() && j.contains("gates") ? j["gates"] : j;
  if (!list.is_array() || list.empty()) throw ConfigError(source + ": expected a nonempty list of gates");
  std::vector<SU2Element> out;
  for (const auto& g : list) {
    if (g.is_array() && g.size() == 4 && g[0].is_number()) {
      out.push_back(SU2Element::from_quaternion(g[0].get<double>(), g[1].get<double>(), g[2].get<double>(),
                                                g[3].get<double>()));
    } else if (g.is_array() && g.size() == 2) {
      Eigen::Matrix2cd m;
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c) {
          const auto& e = g.at(r).at(c);
          m(r, c) = e.is_array() ? std::complex<double>(e.at(0).get<double>(), e.at(1).get<double>())
                                 : std::complex<double>(e.get<double>(), 0.0);
        }
      out.push_back(SU2Element::from_matrix(m));
    } else {
      throw ConfigError(source + ": each gate is a quaternion [w, x, y, z] or a 2x2 complex matrix");
    }
  }
  return out;
}

}  // namespace hw::cli
