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

#include "pafind/search.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <queue>
#include <string>
#include <unordered_set>

#include "json.hpp"

#include "pafind/errors.hpp"

namespace pafind {

std::string_view to_string(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kDca:
      return "dca";
    case Algorithm::kBbckl:
      return "bbckl";
    case Algorithm::kWalk:
      return "walk";
    case Algorithm::kDcaNoPhase1:
      return "dca_no_phase1";
  }
  return "unknown";
}

Algorithm algorithm_from_string(std::string_view name) {
  if (name == "dca") return Algorithm::kDca;
  if (name == "bbckl") return Algorithm::kBbckl;
  if (name == "walk") return Algorithm::kWalk;
  if (name == "dca_no_phase1") return Algorithm::kDcaNoPhase1;
  throw ParameterError("unknown algorithm '" + std::string(name) + "'");
}

std::string_view to_string(Phase phase) {
  switch (phase) {
    case Phase::kStart:
      return "start";
    case Phase::kWarmup:
      return "warmup";
    case Phase::kClimb:
      return "climb";
    case Phase::kRestrictedWalk:
      return "restricted_walk";
    case Phase::kGrow:
      return "grow";
    case Phase::kWalk:
      return "walk";
  }
  return "unknown";
}

double clamped_log(std::uint64_t n) {
  return std::max(1.0, std::log(static_cast<double>(n)));
}

DcaConfig DcaConfig::defaults(std::uint64_t n, std::uint32_t m,
                              double budget_constant) {
  if (n == 0 || m == 0) throw ParameterError("need n >= 1 and m >= 1");
  const double log_n = clamped_log(n);
  const double root_n = std::sqrt(static_cast<double>(n));
  DcaConfig c;
  c.omega = std::max(1.0, std::log(log_n));
  c.start_degree_threshold = c.omega * std::pow(log_n, 2.5);
  c.climb_stop_threshold = root_n / std::pow(log_n, 0.01);
  c.walk_restrict_threshold = root_n / std::pow(log_n, 0.05);
  c.branch_width = std::max<std::size_t>(1, m / 2);
  c.budget = static_cast<std::uint64_t>(
      std::ceil(budget_constant * c.omega * std::pow(log_n, 3.5)));
  c.warmup_steps = static_cast<std::uint64_t>(
      std::ceil(std::log2(static_cast<double>(n))));
  return c;
}

void DcaConfig::validate() const {
  if (branch_width < 1) throw ConfigError("branch_width must be >= 1");
  if (budget == 0) throw ConfigError("budget must be positive");
  if (!(walk_restrict_threshold > 0.0)) {
    throw ConfigError("walk_restrict_threshold must be positive");
  }
  if (!(walk_restrict_threshold <= climb_stop_threshold)) {
    throw ConfigError("walk_restrict_threshold must not exceed "
                      "climb_stop_threshold");
  }
  if (!(omega > 0.0)) throw ConfigError("omega must be positive");
}

namespace {

class TraceRecorder {
 public:
  TraceRecorder(OracleSession& session, SearchTrace& trace)
      : session_(session), trace_(trace) {}

  void visit(Phase phase, std::uint64_t step, Handle h,
             std::optional<std::uint32_t> degree = {}, bool fallback = false) {
    trace_.last_visited = h;
    trace_.events.push_back(
        {phase, step, h, degree, session_.cost(), fallback});
  }

  void set_degree(std::uint32_t degree) {
    trace_.events.back().degree = degree;
    trace_.events.back().cost = session_.cost();
  }

  SearchTrace finish(bool success) {
    trace_.success = success;
    trace_.total_cost = session_.cost();
    return std::move(trace_);
  }

 private:
  OracleSession& session_;
  SearchTrace& trace_;
};

}  // namespace

SearchTrace dca_search(OracleSession& session, const DcaConfig& config,
                       Rng& rng) {
  config.validate();
  SearchTrace trace;
  trace.algorithm = config.skip_phase1 ? Algorithm::kDcaNoPhase1
                                       : Algorithm::kDca;
  trace.budget = config.budget;
  TraceRecorder rec(session, trace);
  const auto affordable = [&](std::uint64_t units, std::uint64_t limit) {
    return session.cost() + units <= limit;
  };

  Handle v = session.start(rng);
  rec.visit(Phase::kStart, 0, v);
  if (session.is_target(v)) {
    trace.climb_sequence = {v};
    return rec.finish(true);
  }

  // Phase 1: walk until a vertex of high enough degree, after a warm-up.
  // The phase is capped at half the budget; if the cap is hit the climb
  // starts from wherever the walk stands.
  if (!config.skip_phase1) {
    const std::uint64_t cap = config.budget / 2;
    if (affordable(1, cap)) {
      std::uint32_t d = session.degree(v);
      rec.set_degree(d);
      while (trace.phase1_steps < config.warmup_steps ||
             d < config.start_degree_threshold) {
        if (!affordable(2, cap)) break;
        v = session.random_neighbor(v, rng);
        ++trace.phase1_steps;
        rec.visit(Phase::kWarmup, trace.phase1_steps, v);
        if (session.is_target(v)) {
          trace.climb_sequence = {v};
          return rec.finish(true);
        }
        d = session.degree(v);
        rec.set_degree(d);
      }
    }
  }

  // Phase 2: repeatedly move to a random one of the branch_width
  // highest-degree neighbors other than the previous vertex, until the
  // degree reaches the stop threshold. The body runs at least once.
  trace.climb_sequence = {v};
  std::optional<Handle> previous;
  for (;;) {
    if (!affordable(2, config.budget)) return rec.finish(false);
    std::vector<Handle> choices =
        session.top_k_neighbors(v, config.branch_width, previous);
    if (choices.empty()) {
      // v's only neighbor is the one we came from.
      if (!previous) return rec.finish(false);
      choices.push_back(*previous);
    }
    const Handle next = choices[rng.uniform_below(choices.size())];
    previous = v;
    v = next;
    trace.climb_sequence.push_back(v);
    rec.visit(Phase::kClimb, trace.climb_sequence.size(), v);
    if (session.is_target(v)) return rec.finish(true);
    const std::uint32_t d = session.degree(v);
    rec.set_degree(d);
    if (d >= config.climb_stop_threshold) break;
  }

  // Phase 3: random walk on the high-degree vertices.
  for (;;) {
    if (!affordable(1, config.budget)) return rec.finish(false);
    std::optional<Handle> next =
        session.random_neighbor_above(v, config.walk_restrict_threshold, rng);
    bool fallback = false;
    if (!next) {
      if (!affordable(1, config.budget)) return rec.finish(false);
      next = session.random_neighbor(v, rng);
      fallback = true;
      ++trace.fallback_steps;
    }
    v = *next;
    ++trace.phase3_steps;
    rec.visit(Phase::kRestrictedWalk, trace.phase3_steps, v, {}, fallback);
    if (session.is_target(v)) return rec.finish(true);
  }
}

SearchTrace bbckl_search(OracleSession& session, std::uint64_t budget,
                         Rng& rng) {
  if (budget == 0) throw ConfigError("budget must be positive");
  SearchTrace trace;
  trace.algorithm = Algorithm::kBbckl;
  trace.budget = budget;
  TraceRecorder rec(session, trace);

  Handle newest = session.start(rng);
  trace.climb_sequence = {newest};
  rec.visit(Phase::kStart, 0, newest);
  if (session.is_target(newest)) return rec.finish(true);

  const auto heap_order = [](const RankedNeighbor& a, const RankedNeighbor& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    return a.handle > b.handle;
  };
  std::priority_queue<RankedNeighbor, std::vector<RankedNeighbor>,
                      decltype(heap_order)>
      frontier(heap_order);
  std::unordered_set<Handle, HandleHash> seen{newest};

  for (;;) {
    if (session.cost() + 1 > budget) return rec.finish(false);
    for (const RankedNeighbor& r : session.neighborhood(newest)) {
      if (seen.insert(r.handle).second) frontier.push(r);
    }
    if (frontier.empty()) return rec.finish(false);
    const RankedNeighbor best = frontier.top();
    frontier.pop();
    newest = best.handle;
    trace.climb_sequence.push_back(newest);
    rec.visit(Phase::kGrow, trace.climb_sequence.size() - 1, newest,
              best.degree);
    if (session.is_target(newest)) return rec.finish(true);
  }
}

SearchTrace random_walk_search(OracleSession& session, std::uint64_t budget,
                               Rng& rng) {
  SearchTrace trace;
  trace.algorithm = Algorithm::kWalk;
  trace.budget = budget;
  TraceRecorder rec(session, trace);

  Handle v = session.start(rng);
  trace.climb_sequence = {v};
  rec.visit(Phase::kStart, 0, v);
  if (session.is_target(v)) return rec.finish(true);
  while (session.cost() + 1 <= budget) {
    v = session.random_neighbor(v, rng);
    trace.climb_sequence.push_back(v);
    rec.visit(Phase::kWalk, trace.climb_sequence.size() - 1, v);
    if (session.is_target(v)) return rec.finish(true);
  }
  return rec.finish(false);
}

std::vector<double> climb_ratios(const SearchTrace& trace,
                                 const IndexResolver& resolver) {
  std::vector<double> ratios;
  const auto& seq = trace.climb_sequence;
  if (seq.size() < 2) return ratios;
  ratios.reserve(seq.size() - 1);
  double previous = resolver(seq.front());
  for (std::size_t t = 1; t < seq.size(); ++t) {
    const double current = resolver(seq[t]);
    ratios.push_back(current / previous);
    previous = current;
  }
  return ratios;
}

void write_trace(std::ostream& out, const SearchTrace& trace,
                 const IndexResolver& resolver) {
  for (const TraceEvent& e : trace.events) {
    nlohmann::json line;
    line["phase"] = to_string(e.phase);
    line["step"] = e.step;
    line["handle"] = e.handle.value;
    if (resolver) line["vertex"] = resolver(e.handle);
    if (e.degree) line["degree"] = *e.degree;
    line["cost"] = e.cost;
    if (e.fallback) line["fallback"] = true;
    out << line.dump() << '\n';
  }
}

}  // namespace pafind
