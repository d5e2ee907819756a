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

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string_view>
#include <vector>

#include "pafind/oracle.hpp"
#include "pafind/random.hpp"

namespace pafind {

enum class Algorithm {
  kDca,
  kBbckl,
  kWalk,
  // Phase 2 starts at a uniformly random vertex, skipping the warm-up walk.
  kDcaNoPhase1,
};

std::string_view to_string(Algorithm algorithm);
Algorithm algorithm_from_string(std::string_view name);

// ln n clamped below at 1 so thresholds stay finite for tiny graphs.
double clamped_log(std::uint64_t n);

// Degree climbing parameters. The thresholds depend on n; the harness
// computes them, the search itself never learns n.
struct DcaConfig {
  double omega = 1.0;
  // Phase 1 accepts a vertex once its degree reaches this.
  double start_degree_threshold = 0.0;
  // Phase 2 stops once the current degree reaches this.
  double climb_stop_threshold = 0.0;
  // Phase 3 only walks on vertices of at least this degree.
  double walk_restrict_threshold = 0.0;
  std::size_t branch_width = 1;
  std::uint64_t budget = 0;
  // Phase 1 takes at least this many walk steps before accepting a vertex.
  std::uint64_t warmup_steps = 0;
  bool skip_phase1 = false;

  // omega = max(1, ln ln n), start = omega (ln n)^{5/2},
  // climb stop = sqrt(n) / (ln n)^{1/100}, walk = sqrt(n) / (ln n)^{1/20},
  // branch width = max(1, floor(m/2)),
  // budget = ceil(budget_constant * omega * (ln n)^{7/2}),
  // warm-up = ceil(log2 n).
  static DcaConfig defaults(std::uint64_t n, std::uint32_t m,
                            double budget_constant = 20.0);

  // Throws ConfigError.
  void validate() const;
};

enum class Phase {
  kStart,
  kWarmup,
  kClimb,
  kRestrictedWalk,
  kGrow,
  kWalk,
};

std::string_view to_string(Phase phase);

struct TraceEvent {
  Phase phase;
  std::uint64_t step = 0;
  Handle handle;
  std::optional<std::uint32_t> degree;
  std::uint64_t cost = 0;
  bool fallback = false;
};

struct SearchTrace {
  Algorithm algorithm = Algorithm::kDca;
  std::uint64_t budget = 0;
  // Warm-up walk length (DCA only).
  std::uint64_t phase1_steps = 0;
  // DCA: v_1..v_T of the main loop (v_1 alone if the search ended in phase
  // 1). BBCKL: insertion order of L. Walk: every visited vertex.
  std::vector<Handle> climb_sequence;
  // Restricted walk length (DCA only).
  std::uint64_t phase3_steps = 0;
  // Unrestricted steps taken when no neighbor met the phase 3 threshold.
  std::uint64_t fallback_steps = 0;
  std::uint64_t total_cost = 0;
  bool success = false;
  std::optional<Handle> last_visited;
  std::vector<TraceEvent> events;

  std::uint64_t main_loop_length() const { return climb_sequence.size(); }
};

SearchTrace dca_search(OracleSession& session, const DcaConfig& config,
                       Rng& rng);

// Grows L from a uniformly random vertex, always adding a maximum-degree
// vertex of N(L) (ties by smaller handle). One unit of cost per addition.
SearchTrace bbckl_search(OracleSession& session, std::uint64_t budget,
                         Rng& rng);

// Plain random walk from a uniformly random vertex.
SearchTrace random_walk_search(OracleSession& session, std::uint64_t budget,
                               Rng& rng);

using IndexResolver = std::function<VertexId(Handle)>;

// v_{t}/v_{t-1} for t = 2..T in true vertex indices. Empty if T < 2.
std::vector<double> climb_ratios(const SearchTrace& trace,
                                 const IndexResolver& resolver);

// One JSON object per event: phase, step, handle, degree (if queried),
// cumulative cost; plus "vertex" when a resolver is given.
void write_trace(std::ostream& out, const SearchTrace& trace,
                 const IndexResolver& resolver = {});

}  // namespace pafind
