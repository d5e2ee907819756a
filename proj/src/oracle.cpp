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

#include "pafind/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <ostream>
#include <string>

#include "json.hpp"

#include "pafind/errors.hpp"

namespace pafind {

LocalOracle::LocalOracle(const PAGraph& graph, std::uint64_t handle_seed)
    : graph_(&graph), handle_seed_(handle_seed) {
  const std::uint32_t n = graph.n();
  handle_to_vertex_.resize(n);
  std::iota(handle_to_vertex_.begin(), handle_to_vertex_.end(), 1u);
  // Fisher-Yates with our own integer draws; std::shuffle is not portable.
  Rng rng = make_stream(handle_seed, StreamDomain::kHandles, 0);
  for (std::uint32_t i = n; i > 1; --i) {
    const auto j = static_cast<std::uint32_t>(rng.uniform_below(i));
    std::swap(handle_to_vertex_[i - 1], handle_to_vertex_[j]);
  }
  vertex_to_handle_.resize(n);
  for (std::uint32_t h = 0; h < n; ++h) {
    vertex_to_handle_[handle_to_vertex_[h] - 1] = h;
  }
}

void LocalOracle::check(Handle v) const {
  if (!valid(v)) {
    throw HandleError("handle " + std::to_string(v.value) +
                      " does not belong to this oracle");
  }
}

bool LocalOracle::is_target(Handle v) const {
  check(v);
  return handle_to_vertex_[v.value] == 1;
}

double LocalOracle::stationary_weight(Handle v) const {
  check(v);
  const double total = 2.0 * graph_->m() * static_cast<double>(graph_->n());
  return graph_->degree(handle_to_vertex_[v.value]) / total;
}

VertexId LocalOracle::resolve(Handle v) const {
  check(v);
  return handle_to_vertex_[v.value];
}

Handle LocalOracle::handle_of(VertexId v) const {
  if (v < 1 || v > graph_->n()) {
    throw RangeError("vertex " + std::to_string(v) + " out of range");
  }
  return Handle{vertex_to_handle_[v - 1]};
}

std::string_view to_string(QueryKind kind) {
  switch (kind) {
    case QueryKind::kStart:
      return "start";
    case QueryKind::kTopK:
      return "top_k_neighbors";
    case QueryKind::kDegree:
      return "degree";
    case QueryKind::kRandomNeighbor:
      return "random_neighbor";
    case QueryKind::kRandomNeighborAbove:
      return "random_neighbor_above";
    case QueryKind::kNeighborhood:
      return "neighborhood";
  }
  return "unknown";
}

OracleSession::OracleSession(const LocalOracle& oracle, bool audit)
    : oracle_(&oracle), audit_(audit) {}

void OracleSession::charge(QueryKind kind, Handle v,
                           std::vector<double> arguments,
                           std::vector<Handle> results, bool violation) {
  if (kind != QueryKind::kStart) ++cost_;
  if (!audit_) return;
  AuditRecord record{kind, v, std::move(arguments), std::move(results), cost_,
                     violation, false};
  if (kind != QueryKind::kStart) {
    record.locality_violation = !produced_.contains(v);
    touched_.insert(v);
  }
  for (Handle h : record.results) produced_.insert(h);
  transcript_.push_back(std::move(record));
}

Handle OracleSession::start(Rng& rng) {
  const std::uint32_t n = oracle_->graph().n();
  const Handle h{static_cast<std::uint32_t>(rng.uniform_below(n))};
  if (audit_) touched_.insert(h);
  charge(QueryKind::kStart, h, {}, {h});
  return h;
}

const std::vector<RankedNeighbor>& OracleSession::sorted_neighbors(Handle v) {
  auto it = cache_.find(v.value);
  if (it != cache_.end()) return it->second;

  const PAGraph& g = oracle_->graph();
  const VertexId vertex = oracle_->resolve(v);
  std::vector<VertexId> ids;
  const auto own = g.left_choices(vertex);
  const auto right = g.right_neighbors(vertex);
  ids.reserve(own.size() + right.size());
  for (VertexId u : own) {
    if (u != vertex) ids.push_back(u);
  }
  ids.insert(ids.end(), right.begin(), right.end());
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());

  std::vector<RankedNeighbor> ranked;
  ranked.reserve(ids.size());
  for (VertexId u : ids) ranked.push_back({oracle_->handle_of(u), g.degree(u)});
  std::sort(ranked.begin(), ranked.end(),
            [](const RankedNeighbor& a, const RankedNeighbor& b) {
              if (a.degree != b.degree) return a.degree > b.degree;
              return a.handle < b.handle;
            });
  return cache_.emplace(v.value, std::move(ranked)).first->second;
}

std::vector<Handle> OracleSession::top_k_neighbors(Handle v, std::size_t k,
                                                   std::optional<Handle> exclude) {
  oracle_->check(v);
  if (k == 0) throw ParameterError("top_k_neighbors needs k >= 1");
  const auto& ranked = sorted_neighbors(v);
  std::vector<Handle> out;
  out.reserve(std::min(k, ranked.size()));
  for (const auto& entry : ranked) {
    if (out.size() == k) break;
    if (exclude && entry.handle == *exclude) continue;
    out.push_back(entry.handle);
  }
  std::vector<double> args{static_cast<double>(k)};
  if (exclude) args.push_back(exclude->value);
  const bool violation = k > oracle_->graph().m();
  charge(QueryKind::kTopK, v, std::move(args), out, violation);
  return out;
}

std::uint32_t OracleSession::degree(Handle v) {
  const std::uint32_t d = oracle_->graph().degree(oracle_->resolve(v));
  charge(QueryKind::kDegree, v, {}, {});
  return d;
}

Handle OracleSession::random_neighbor(Handle v, Rng& rng) {
  const PAGraph& g = oracle_->graph();
  const VertexId vertex = oracle_->resolve(v);
  const VertexId next = g.endpoint(vertex, rng.uniform_below(g.degree(vertex)));
  const Handle h = oracle_->handle_of(next);
  charge(QueryKind::kRandomNeighbor, v, {}, {h});
  return h;
}

std::optional<Handle> OracleSession::random_neighbor_above(Handle v,
                                                           double threshold,
                                                           Rng& rng) {
  oracle_->check(v);
  const auto& ranked = sorted_neighbors(v);
  // Qualifying neighbors form a prefix of the degree-sorted list.
  const auto end = std::partition_point(
      ranked.begin(), ranked.end(),
      [threshold](const RankedNeighbor& r) { return r.degree >= threshold; });
  const auto count = static_cast<std::uint64_t>(end - ranked.begin());
  std::optional<Handle> out;
  if (count > 0) out = ranked[rng.uniform_below(count)].handle;
  charge(QueryKind::kRandomNeighborAbove, v, {threshold},
         out ? std::vector<Handle>{*out} : std::vector<Handle>{});
  return out;
}

std::vector<RankedNeighbor> OracleSession::neighborhood(Handle v) {
  oracle_->check(v);
  std::vector<RankedNeighbor> out = sorted_neighbors(v);
  std::vector<Handle> handles;
  if (audit_) {
    handles.reserve(out.size());
    for (const auto& r : out) handles.push_back(r.handle);
  }
  charge(QueryKind::kNeighborhood, v, {}, std::move(handles));
  return out;
}

std::size_t OracleSession::contract_violations() const {
  return static_cast<std::size_t>(
      std::count_if(transcript_.begin(), transcript_.end(),
                    [](const AuditRecord& r) { return r.contract_violation; }));
}

std::size_t OracleSession::locality_violations() const {
  return static_cast<std::size_t>(
      std::count_if(transcript_.begin(), transcript_.end(),
                    [](const AuditRecord& r) { return r.locality_violation; }));
}

bool OracleSession::produced_all(std::span<const Handle> handles) const {
  if (!audit_) throw ConfigError("produced_all requires an audited session");
  return std::all_of(handles.begin(), handles.end(),
                     [this](Handle h) { return produced_.contains(h); });
}

void OracleSession::write_transcript(std::ostream& out) const {
  for (const auto& r : transcript_) {
    nlohmann::json line;
    line["query"] = to_string(r.kind);
    line["handle"] = r.handle.value;
    line["args"] = r.arguments;
    auto results = nlohmann::json::array();
    for (Handle h : r.results) results.push_back(h.value);
    line["results"] = std::move(results);
    line["cost"] = r.cumulative_cost;
    if (r.contract_violation) line["contract_violation"] = true;
    if (r.locality_violation) line["locality_violation"] = true;
    out << line.dump() << '\n';
  }
}

}  // namespace pafind
