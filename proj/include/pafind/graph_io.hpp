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

#pragma once

#include <filesystem>
#include <iosfwd>
#include <vector>

#include "pafind/graph.hpp"

namespace pafind {

// Binary graph file, all integers little-endian:
//
//   offset  size  field
//   0       4     magic "PAG1"
//   4       8     n
//   12      4     m
//   16      8     seed
//   24      1     construction tag (0 sequential, 1 continuous, 2 uniform)
//   25      ...   n*m left choices, vertex-major, each `width` bytes where
//                 width = 1 if n < 2^8, 2 if n < 2^16, else 4
void write_graph(std::ostream& out, const PAGraph& graph);
PAGraph read_graph(std::istream& in);
void save_graph(const std::filesystem::path& path, const PAGraph& graph);
PAGraph load_graph(const std::filesystem::path& path);

// Bytes per left-choice entry for a graph on n vertices.
unsigned left_choice_width(std::uint64_t n);

// Side file for the continuous construction: magic "PAX1", n (u64), m (u32),
// seed (u64), then mn+1 IEEE-754 binary64 values xi_1..xi_{mn+1}.
void write_xi(std::ostream& out, const ContinuousRealization& realization);
ContinuousRealization read_xi(std::istream& in);
void save_xi(const std::filesystem::path& path,
             const ContinuousRealization& realization);
ContinuousRealization load_xi(const std::filesystem::path& path);

// One "u v" line per edge, u <= v, in edge order; self-loops print as "v v".
void write_edge_list(std::ostream& out, const PAGraph& graph);

}  // namespace pafind
