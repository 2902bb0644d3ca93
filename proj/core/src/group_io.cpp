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

#include <cstring>
#include <fstream>

#include "hw/group.hpp"

namespace hw {
namespace {

constexpr char kMagic[4] = {'H', 'W', 'G', 'T'};

template <typename T>
void put(std::ostream& os, T v) {
  os.write(reinterpret_cast<const char*>(&v), sizeof(T));
}

template <typename T>
T get(std::istream& is) {
  T v{};
  is.read(reinterpret_cast<char*>(&v), sizeof(T));
  if (!is) throw std::runtime_error("truncated group cache file");
  return v;
}

void put_matrix(std::ostream& os, const ModMatrix& m) {
  for (int i = 0; i < m.dim() * m.dim(); ++i) put<std::uint32_t>(os, m.entries()[i]);
}

ModMatrix get_matrix(std::istream& is, int d, std::uint32_t q) {
  std::array<std::int64_t, 16> e{};
  for (int i = 0; i < d * d; ++i) e[i] = get<std::uint32_t>(is);
  return ModMatrix::from_integers(d, q, std::span<const std::int64_t>(e.data(), d * d));
}

}  // namespace

void save_table(const GroupTable& table, const std::string& path) {
  std::ofstream os(path, std::ios::binary | std::ios::trunc);
  if (!os) throw std::runtime_error("cannot open " + path + " for writing");
  os.write(kMagic, 4);
  put<std::uint32_t>(os, kCacheVersion);
  put<std::uint32_t>(os, static_cast<std::uint32_t>(table.family()));
  put<std::uint32_t>(os, static_cast<std::uint32_t>(table.dim()));
  put<std::uint32_t>(os, table.modulus());
  put<std::uint64_t>(os, table.order());
  put<std::uint32_t>(os, static_cast<std::uint32_t>(table.canonical_generators().size()));
  for (const auto& g : table.canonical_generators()) put_matrix(os, g);
  for (const auto& e : table.elements()) put_matrix(os, e);
  if (!os) throw std::runtime_error("failed writing " + path);
}

GroupTable load_table(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open " + path);
  char magic[4];
  is.read(magic, 4);
  if (!is || std::memcmp(magic, kMagic, 4) != 0) throw std::runtime_error(path + ": not a group cache file");
  if (get<std::uint32_t>(is) != kCacheVersion) throw std::runtime_error(path + ": cache version mismatch");
  const auto family = static_cast<GroupFamily>(get<std::uint32_t>(is));
  const int d = static_cast<int>(get<std::uint32_t>(is));
  const std::uint32_t q = get<std::uint32_t>(is);
  const std::uint64_t order = get<std::uint64_t>(is);
  const std::uint32_t ngens = get<std::uint32_t>(is);
  std::vector<ModMatrix> gens, elements;
  for (std::uint32_t i = 0; i < ngens; ++i) gens.push_back(get_matrix(is, d, q));
  elements.reserve(order);
  for (std::uint64_t i = 0; i < order; ++i) elements.push_back(get_matrix(is, d, q));
  return GroupTable::from_elements(std::move(elements), std::move(gens), family);
}

}  // namespace hw
