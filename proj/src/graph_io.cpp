// Copyright 2026 The pafind Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "pafind/graph_io.hpp"

#include <array>
#include <bit>
#include <cstring>
#include <fstream>
#include <istream>
#include <ostream>
#include <string>

#include "pafind/errors.hpp"

namespace pafind {
namespace {

constexpr std::array<char, 4> kGraphMagic = {'P', 'A', 'G', '1'};
constexpr std::array<char, 4> kXiMagic = {'P', 'A', 'X', '1'};

template <typename T>
void put(std::ostream& out, T value, unsigned width = sizeof(T)) {
  unsigned char bytes[8];
  auto v = static_cast<std::uint64_t>(value);
  for (unsigned b = 0; b < width; ++b) {
    bytes[b] = static_cast<unsigned char>(v >> (8 * b));
  }
  out.write(reinterpret_cast<const char*>(bytes), width);
}

std::uint64_t get(std::istream& in, unsigned width) {
  unsigned char bytes[8] = {};
  in.read(reinterpret_cast<char*>(bytes), width);
  if (!in) throw IoError("unexpected end of file");
  std::uint64_t v = 0;
  for (unsigned b = 0; b < width; ++b) {
    v |= static_cast<std::uint64_t>(bytes[b]) << (8 * b);
  }
  return v;
}

void expect_magic(std::istream& in, const std::array<char, 4>& magic) {
  std::array<char, 4> got{};
  in.read(got.data(), got.size());
  if (!in || got != magic) {
    throw IoError("bad magic, expected '" +
                  std::string(magic.begin(), magic.end()) + "'");
  }
}

}  // namespace

unsigned left_choice_width(std::uint64_t n) {
  if (n < (1u << 8)) return 1;
  if (n < (1u << 16)) return 2;
  return 4;
}

void write_graph(std::ostream& out, const PAGraph& graph) {
  out.write(kGraphMagic.data(), kGraphMagic.size());
  put<std::uint64_t>(out, graph.n());
  put<std::uint32_t>(out, graph.m());
  put<std::uint64_t>(out, graph.seed());
  put<std::uint8_t>(out, static_cast<std::uint8_t>(graph.construction()));
  const unsigned width = left_choice_width(graph.n());
  for (VertexId u : graph.flat_left_choices()) put(out, u, width);
  if (!out) throw IoError("failed writing graph");
}

PAGraph read_graph(std::istream& in) {
  expect_magic(in, kGraphMagic);
  const std::uint64_t n = get(in, 8);
  const auto m = static_cast<std::uint32_t>(get(in, 4));
  const std::uint64_t seed = get(in, 8);
  const auto tag = static_cast<std::uint8_t>(get(in, 1));
  if (n == 0 || n > 0xFFFFFFFFull || m == 0) {
    throw IoError("graph header has invalid n or m");
  }
  if (tag > 2) throw IoError("unknown construction tag");
  const unsigned width = left_choice_width(n);
  std::vector<VertexId> left(n * m);
  for (auto& u : left) u = static_cast<VertexId>(get(in, width));
  try {
    return PAGraph::from_left_choices(static_cast<std::uint32_t>(n), m,
                                      std::move(left), seed,
                                      static_cast<Construction>(tag));
  } catch (const ParameterError& e) {
    throw IoError(std::string("corrupt graph file: ") + e.what());
  }
}

void save_graph(const std::filesystem::path& path, const PAGraph& graph) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_graph(out, graph);
}

PAGraph load_graph(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_graph(in);
}

void write_xi(std::ostream& out, const ContinuousRealization& realization) {
  out.write(kXiMagic.data(), kXiMagic.size());
  put<std::uint64_t>(out, realization.n());
  put<std::uint32_t>(out, realization.m());
  put<std::uint64_t>(out, realization.seed());
  for (double x : realization.xi_values()) {
    put<std::uint64_t>(out, std::bit_cast<std::uint64_t>(x));
  }
  if (!out) throw IoError("failed writing xi side file");
}

ContinuousRealization read_xi(std::istream& in) {
  expect_magic(in, kXiMagic);
  const std::uint64_t n = get(in, 8);
  const auto m = static_cast<std::uint32_t>(get(in, 4));
  const std::uint64_t seed = get(in, 8);
  if (n == 0 || n > 0xFFFFFFFFull || m == 0) {
    throw IoError("xi header has invalid n or m");
  }
  std::vector<double> xi(n * m + 1);
  for (auto& x : xi) x = std::bit_cast<double>(get(in, 8));
  return ContinuousRealization::from_xi(static_cast<std::uint32_t>(n), m, seed,
                                        std::move(xi));
}

void save_xi(const std::filesystem::path& path,
             const ContinuousRealization& realization) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  write_xi(out, realization);
}

ContinuousRealization load_xi(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string());
  return read_xi(in);
}

void write_edge_list(std::ostream& out, const PAGraph& graph) {
  for (VertexId t = 1; t <= graph.n(); ++t) {
    for (VertexId u : graph.left_choices(t)) out << u << ' ' << t << '\n';
  }
  if (!out) throw IoError("failed writing edge list");
}

}  // namespace pafind
