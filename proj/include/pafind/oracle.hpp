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

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "pafind/graph.hpp"
#include "pafind/random.hpp"

namespace pafind {

// Opaque vertex name handed to search algorithms. Handles are a seeded
// permutation of 0..n-1, so a handle carries no information about the
// vertex index.
struct Handle {
  std::uint32_t value = 0;
  auto operator<=>(const Handle&) const = default;
};

struct HandleHash {
  std::size_t operator()(Handle h) const noexcept {
    return std::hash<std::uint32_t>{}(h.value);
  }
};

struct RankedNeighbor {
  Handle handle;
  std::uint32_t degree = 0;
};

// Immutable local-access view of a graph. Safe to share between threads; all
// per-search state lives in OracleSession.
class LocalOracle {
 public:
  LocalOracle(const PAGraph& graph, std::uint64_t handle_seed);

  const PAGraph& graph() const { return *graph_; }
  std::uint64_t handle_seed() const { return handle_seed_; }

  // Recognising vertex 1 is free.
  bool is_target(Handle v) const;

  // d(v) / 2mn. For validation only; searches never see it.
  double stationary_weight(Handle v) const;

  // Analysis-side index resolution. Not available through a session.
  VertexId resolve(Handle v) const;
  Handle handle_of(VertexId v) const;

  bool valid(Handle v) const { return v.value < handle_to_vertex_.size(); }
  void check(Handle v) const;

 private:
  const PAGraph* graph_;
  std::uint64_t handle_seed_;
  std::vector<std::uint32_t> handle_to_vertex_;
  std::vector<std::uint32_t> vertex_to_handle_;
};

enum class QueryKind {
  kStart,
  kTopK,
  kDegree,
  kRandomNeighbor,
  kRandomNeighborAbove,
  kNeighborhood,
};

std::string_view to_string(QueryKind kind);

struct AuditRecord {
  QueryKind kind;
  Handle handle;
  std::vector<double> arguments;
  std::vector<Handle> results;
  std::uint64_t cumulative_cost = 0;
  bool contract_violation = false;
  bool locality_violation = false;
};

// One search's view of a LocalOracle: owns the unit-cost counter, the cached
// degree-sorted neighbor lists and, in audit mode, the query transcript.
// Not thread-safe; give each concurrent search its own session.
class OracleSession {
 public:
  explicit OracleSession(const LocalOracle& oracle, bool audit = false);

  // Uniformly random start handle. Cost 0.
  Handle start(Rng& rng);

  // First k distinct neighbors of v in (degree desc, handle asc) order after
  // dropping `exclude`. Cost 1. k > m is flagged in audit mode.
  std::vector<Handle> top_k_neighbors(Handle v, std::size_t k,
                                      std::optional<Handle> exclude = {});

  // Cost 1.
  std::uint32_t degree(Handle v);

  // Uniform over the degree(v) edge slots at v. Cost 1.
  Handle random_neighbor(Handle v, Rng& rng);

  // Uniform over distinct neighbors with degree >= threshold. Cost 1.
  std::optional<Handle> random_neighbor_above(Handle v, double threshold,
                                              Rng& rng);

  // Every distinct neighbor with its degree, in the same order as
  // top_k_neighbors. Cost 1.
  std::vector<RankedNeighbor> neighborhood(Handle v);

  // Cost 0.
  bool is_target(Handle v) const { return oracle_->is_target(v); }

  std::uint64_t cost() const { return cost_; }
  bool audit_enabled() const { return audit_; }
  const std::vector<AuditRecord>& transcript() const { return transcript_; }
  std::size_t contract_violations() const;
  std::size_t locality_violations() const;

  // Distinct handles passed as query arguments, including the start handle.
  std::size_t touched_handles() const { return touched_.size(); }

  // True iff every handle was produced by this session (start or a query
  // result). Requires audit mode.
  bool produced_all(std::span<const Handle> handles) const;

  // One JSON object per line.
  void write_transcript(std::ostream& out) const;

 private:
  const std::vector<RankedNeighbor>& sorted_neighbors(Handle v);
  void charge(QueryKind kind, Handle v, std::vector<double> arguments,
              std::vector<Handle> results, bool violation = false);

  const LocalOracle* oracle_;
  bool audit_;
  std::uint64_t cost_ = 0;
  std::unordered_map<std::uint32_t, std::vector<RankedNeighbor>> cache_;
  std::vector<AuditRecord> transcript_;
  std::unordered_set<Handle, HandleHash> produced_;
  std::unordered_set<Handle, HandleHash> touched_;
};

}  // namespace pafind
