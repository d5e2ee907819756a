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
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "json.hpp"

#include "pafind/graph.hpp"
#include "pafind/search.hpp"
#include "pafind/stats.hpp"

namespace pafind {

// Any field left empty takes its value from DcaConfig::defaults.
struct DcaOverrides {
  std::optional<double> omega;
  std::optional<double> start_degree_threshold;
  std::optional<double> climb_stop_threshold;
  std::optional<double> walk_restrict_threshold;
  std::optional<std::size_t> branch_width;
  std::optional<std::uint64_t> warmup_steps;
};

struct ExperimentConfig {
  std::vector<std::uint32_t> n_ladder;
  std::uint32_t m = 64;
  Construction construction = Construction::kSequential;
  Algorithm algorithm = Algorithm::kDca;
  std::uint32_t trials = 1;
  std::uint64_t base_seed = 1;
  // C in the default budgets: DCA C omega ln^{7/2} n, BBCKL C ln^4 n,
  // walk C n.
  double budget_constant = 20.0;
  // Replaces the default budget for every rung.
  std::optional<std::uint64_t> budget;
  DcaOverrides dca;
  // One graph per rung shared by all its trials; handles and search draws
  // still vary per trial.
  bool fixed_graph = false;
  unsigned workers = 1;
  // Run every search with an audited session and check locality.
  bool audit = false;
  // Contraction band for the mean rho column; defaults to [10^3, n / ln^5 n].
  std::optional<double> band_low;
  std::optional<double> band_high;
  // Output directory; nothing is written when empty.
  std::filesystem::path output;
  bool write_csv = true;
  bool write_json = true;

  // Throws ParameterError.
  void validate() const;
};

struct TrialRow {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  Algorithm algorithm = Algorithm::kDca;
  std::uint64_t seed = 0;
  bool success = false;
  std::uint64_t total_cost = 0;
  std::uint64_t phase1_steps = 0;
  std::uint64_t T = 0;
  std::uint64_t phase3_steps = 0;
  std::uint64_t fallback_count = 0;
};

// One vertex of a DCA climb sequence, as a true index.
struct ClimbRow {
  std::uint32_t n = 0;
  std::uint32_t trial = 0;
  std::uint32_t step = 0;
  VertexId vertex = 0;
};

struct AggregateRow {
  std::uint32_t n = 0;
  std::uint64_t budget = 0;
  std::uint64_t trials = 0;
  std::uint64_t successes = 0;
  double success_rate = 0.0;
  double mean_cost = 0.0;
  double median_cost = 0.0;
  // Over trials whose main loop ran (T >= 2); NaN if none did.
  std::uint64_t main_loop_trials = 0;
  double mean_T = 0.0;
  double band_low = 0.0;
  double band_high = 0.0;
  std::uint64_t band_steps = 0;
  // Mean climb ratio over steps with v_{t-1} in the band; NaN if none.
  double mean_rho = 0.0;
};

struct ExperimentResult {
  ExperimentConfig config;
  std::vector<TrialRow> trials;
  std::vector<ClimbRow> climbs;
  std::vector<AggregateRow> aggregates;
};

// Pure function of (base_seed, n, trial).
std::uint64_t trial_seed(std::uint64_t base_seed, std::uint32_t n,
                         std::uint32_t trial);

DcaConfig dca_config_for(const ExperimentConfig& config, std::uint32_t n);
std::uint64_t default_budget(Algorithm algorithm, std::uint32_t n,
                             std::uint32_t m, double budget_constant);
std::uint64_t budget_for(const ExperimentConfig& config, std::uint32_t n);
std::pair<double, double> band_for(const ExperimentConfig& config,
                                   std::uint32_t n);

PAGraph generate(Construction construction, std::uint32_t n, std::uint32_t m,
                 std::uint64_t seed);

// Runs one search of `algorithm` over `graph`. Returns the trace; when
// `audit` is set, throws ConsistencyError on a locality violation.
SearchTrace run_search(const PAGraph& graph, const ExperimentConfig& config,
                       std::uint64_t handle_seed, std::uint64_t search_seed);

// Generates, searches and aggregates every (n, trial) pair, then writes the
// output files if config.output is set. Throws ConsistencyError naming the
// trial when a trace breaks an invariant, IoError if the output cannot be
// written.
ExperimentResult run_experiment(const ExperimentConfig& config);

// Rebuilds per-rung aggregates from per-trial and climb rows.
std::vector<AggregateRow> aggregate(const ExperimentConfig& config,
                                    std::span<const TrialRow> trials,
                                    std::span<const ClimbRow> climbs);

nlohmann::json config_json(const ExperimentConfig& config);
ExperimentConfig config_from_json(const nlohmann::json& j);

// trials.csv, climbs.csv (DCA variants) and aggregates.csv when write_csv;
// summary.json when write_json.
void write_outputs(const ExperimentResult& result,
                   const std::filesystem::path& dir);

std::vector<TrialRow> read_trials(const std::filesystem::path& path);
std::vector<ClimbRow> read_climbs(const std::filesystem::path& path);
std::vector<AggregateRow> read_aggregates(const std::filesystem::path& path);

struct VerifyReport {
  bool ok = true;
  std::vector<std::string> mismatches;
};

// Recomputes aggregates.csv from trials.csv and climbs.csv (using the config
// stored in summary.json) and compares them field by field.
VerifyReport verify_outputs(const std::filesystem::path& dir);

enum class Predictor { kLogN, kLog35N, kLog4N };

std::string_view to_string(Predictor predictor);
Predictor predictor_from_string(std::string_view name);
double predictor_value(Predictor predictor, std::uint32_t n);

struct ScalingFit {
  Predictor predictor = Predictor::kLogN;
  std::string column;
  std::vector<double> x;
  std::vector<double> y;
  stats::LinearFit fit;
};

// Least squares of an aggregate column (mean_T, mean_cost or median_cost)
// against the predictor. Throws InsufficientDataError with fewer than three
// rungs.
ScalingFit fit_scaling(std::span<const AggregateRow> aggregates,
                       Predictor predictor, std::string_view column);

struct EquivalenceReport {
  Construction first = Construction::kSequential;
  Construction second = Construction::kContinuous;
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::uint32_t trials = 0;
  // Two-sample KS on degree(1).
  stats::TestResult ks;
  // Chi-square on pooled degree histograms; degrees at or above the pooled
  // 99th percentile share the last bin.
  stats::TestResult chi_square;
  std::uint32_t histogram_cutoff = 0;
};

// Trial t of the first sample uses seed derive_seed(seed, kCompare, 2t), of
// the second derive_seed(seed, kCompare, 2t + 1).
// Throws RangeError for n > 1000, PrecisionError for fewer than 2000 trials.
EquivalenceReport compare_constructions(Construction first,
                                        Construction second, std::uint32_t n,
                                        std::uint32_t m, std::uint32_t trials,
                                        std::uint64_t seed);

inline EquivalenceReport compare_generators(std::uint32_t n, std::uint32_t m,
                                            std::uint32_t trials,
                                            std::uint64_t seed) {
  return compare_constructions(Construction::kSequential,
                               Construction::kContinuous, n, m, trials, seed);
}

nlohmann::json to_json(const EquivalenceReport& report);
nlohmann::json to_json(const ScalingFit& fit);

}  // namespace pafind
