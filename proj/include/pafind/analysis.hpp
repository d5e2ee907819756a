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
#include <iosfwd>
#include <span>
#include <vector>

#include "json.hpp"

#include "pafind/graph.hpp"
#include "pafind/search.hpp"
#include "pafind/stats.hpp"

namespace pafind::analysis {

// max(1, ln ln n), with ln clamped below at 1.
double default_omega(std::uint64_t n);

// n0 = n / (omega ln^{2+4/m} n), n1 = n / ln^5 n, lambda0 = ln^{-4/m} n.
struct Regime {
  double omega = 1.0;
  double n0 = 0.0;
  double n1 = 0.0;
  double lambda0 = 0.0;

  static Regime of(std::uint64_t n, std::uint32_t m, double omega);
};

struct ConcentrationRow {
  VertexId i = 0;
  double degree = 0.0;
  double eta = 0.0;
  double prediction = 0.0;
  double relative_error = 0.0;
};

struct ConcentrationReport {
  Regime regime;
  std::vector<ConcentrationRow> rows;
  // Sampled indices dropped by the i <= n0, eta_i >= lambda0 filter.
  std::size_t excluded = 0;
  double median_error = 0.0;
  double p90_error = 0.0;
};

// d_n(i) against eta_i sqrt(n/i) for every sampled i with i <= n0 and
// eta_i >= lambda0. Throws ConsistencyError if the graph and realization do
// not come from the same continuous run.
ConcentrationReport check_degree_concentration(
    const PAGraph& graph, const ContinuousRealization& realization,
    std::span<const VertexId> sample, double omega);

// Same, with degrees supplied directly (degrees[i-1] is d_n(i)).
ConcentrationReport check_degree_concentration(
    std::span<const double> degrees, const ContinuousRealization& realization,
    std::span<const VertexId> sample, double omega);

struct IntervalRow {
  VertexId i = 0;
  double W = 0.0;
  double W_prediction = 0.0;
  double W_error = 0.0;
  double w = 0.0;
  double w_prediction = 0.0;
  double w_error = 0.0;
};

struct IntervalReport {
  std::vector<IntervalRow> rows;
  double max_W_error = 0.0;
  double median_w_error = 0.0;
  double p90_w_error = 0.0;
  // |W_n - 1|.
  double top_error = 0.0;
  // |sum_i w_i - W_n| / W_n.
  double telescoping_error = 0.0;
  // max_j |eta_j - (Y_{mj} - Y_{m(j-1)})| / Y_{mj}.
  double eta_identity_error = 0.0;
};

// W_i against sqrt(i/n) and w_i against eta_i / (2m sqrt(in)) for
// i >= min_index, plus the two exact identities.
IntervalReport check_interval_concentration(
    const ContinuousRealization& realization, double min_index);

enum class TailPart {
  // Pr(eta <= mx) <= (x e^{1-x})^m, 0 < x <= 1.
  kLower,
  // Pr(|Z - N| >= alpha N) <= 2 e^{-alpha^2 N / 3}, 0 < alpha < 1.
  kTwoSided,
  // Pr(Z >= beta N) <= (beta e^{beta-1})^{-N}, beta >= 2.
  kUpper,
};

std::string_view to_string(TailPart part);

struct TailBoundRow {
  TailPart part = TailPart::kLower;
  std::uint32_t m = 0;
  double parameter = 0.0;
  std::uint64_t trials = 0;
  double estimate = 0.0;
  double std_error = 0.0;
  double bound = 0.0;
  bool satisfied = false;
};

struct TailBoundReport {
  std::vector<TailBoundRow> rows;
  bool all_satisfied() const;
};

double tail_bound(TailPart part, std::uint32_t m, double parameter);

// Estimates one tail probability for a sum of m mean-one exponentials by
// exponential tilting: draws come from Gamma(m, rate lambda) with lambda
// putting the mean at the boundary, reweighted by lambda^{-m} e^{(lambda-1)z}.
// The two-sided part sums independent estimates of both tails. Throws
// PrecisionError (naming the trial count that would suffice) when three
// standard errors exceed a tenth of the bound, unless the estimate already
// exceeds the bound by more than three standard errors.
TailBoundRow estimate_tail(TailPart part, std::uint32_t m, double parameter,
                           std::uint64_t trials, std::uint64_t seed);

struct TailBoundGrid {
  std::vector<std::uint32_t> m_values;
  std::vector<double> x_values;
  std::vector<double> alpha_values;
  std::vector<double> beta_values;
};

TailBoundReport check_tail_bounds(const TailBoundGrid& grid,
                                  std::uint64_t trials, std::uint64_t seed);

struct EdgeProbabilityBucket {
  double eta_low = 0.0;
  double eta_high = 0.0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double empirical = 0.0;
  // Mean of eta_i / (2 sqrt(ij)) over the bucket's trials.
  double predicted = 0.0;
  double ratio = 0.0;
};

struct EdgeProbabilityReport {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  VertexId i = 0;
  VertexId j = 0;
  std::uint64_t trials = 0;
  std::uint64_t hits = 0;
  double empirical = 0.0;
  double predicted = 0.0;
  double ratio = 0.0;
  // Trials grouped by eta_i quantile.
  std::vector<EdgeProbabilityBucket> buckets;
};

// Frequency of the edge {i, j} over independent continuous graphs. Trial t
// uses seed derive_seed(seed, kEdgeProbability, t). Throws RangeError unless
// omega <= i < j <= n, PrecisionError if trials < 10^4 or the edge is
// expected fewer than 30 times.
EdgeProbabilityReport check_edge_probability(std::uint32_t n, std::uint32_t m,
                                             VertexId i, VertexId j,
                                             std::uint64_t trials,
                                             std::uint64_t seed, double omega,
                                             std::size_t buckets = 4);

struct SmallEtaRow {
  VertexId i = 0;
  double B = 0.0;
  double W = 0.0;
  // B_i ln n / W_i.
  double ratio = 0.0;
};

struct SmallEtaReport {
  double lambda0 = 0.0;
  std::size_t small_count = 0;
  std::vector<SmallEtaRow> rows;
  double max_ratio = 0.0;
};

// B_i = sum_{v <= i} lambda0 1{eta_v <= lambda0} / (2m sqrt(vn)) at each
// checkpoint. Throws RangeError for checkpoints outside [ceil(ln^3 n), n].
SmallEtaReport check_small_eta_mass(const ContinuousRealization& realization,
                                    std::span<const VertexId> checkpoints);

struct ClimbStep {
  VertexId previous = 0;
  double ratio = 0.0;
};

// (v_{t-1}, v_t / v_{t-1}) for each main-loop step of a trace.
std::vector<ClimbStep> climb_steps(const SearchTrace& trace,
                                   const IndexResolver& resolver);

struct ContractionSummary {
  double band_low = 0.0;
  double band_high = 0.0;
  std::size_t steps = 0;
  double mean = 0.0;
  stats::Interval ci;
};

// Mean ratio over steps with band_low <= v_{t-1} <= band_high and its
// percentile bootstrap interval. Throws PrecisionError with fewer than
// min_steps qualifying steps.
ContractionSummary contraction_statistic(std::span<const ClimbStep> steps,
                                         double band_low, double band_high,
                                         std::uint64_t seed,
                                         double level = 0.95,
                                         std::uint32_t resamples = 2000,
                                         std::size_t min_steps = 30);

struct MaxDegreeRow {
  std::uint32_t n = 0;
  std::uint32_t m = 0;
  std::uint64_t seed = 0;
  std::uint32_t max_degree = 0;
  // max_degree / sqrt(n).
  double ratio = 0.0;
  std::uint32_t degree_of_first = 0;
  // 1 + number of vertices of strictly larger degree than vertex 1.
  std::uint32_t rank_of_first = 0;
};

MaxDegreeRow max_degree_row(const PAGraph& graph);

struct MaxDegreeReport {
  std::vector<MaxDegreeRow> rows;
  // Least-squares slope of ln max_degree on ln n; NaN with fewer than two
  // distinct n.
  double exponent = 0.0;
  // Fraction of rows in which vertex 1 ranks within the top 10.
  double first_in_top10 = 0.0;
};

MaxDegreeReport max_degree_scaling(std::span<const MaxDegreeRow> rows);
MaxDegreeReport max_degree_scaling(std::span<const PAGraph> graphs);

void write_csv(std::ostream& out, const ConcentrationReport& report);
void write_csv(std::ostream& out, const IntervalReport& report);
void write_csv(std::ostream& out, const TailBoundReport& report);
void write_csv(std::ostream& out, const EdgeProbabilityReport& report);
void write_csv(std::ostream& out, const SmallEtaReport& report);
void write_csv(std::ostream& out, const MaxDegreeReport& report);

nlohmann::json to_json(const ConcentrationReport& report);
nlohmann::json to_json(const IntervalReport& report);
nlohmann::json to_json(const TailBoundReport& report);
nlohmann::json to_json(const EdgeProbabilityReport& report);
nlohmann::json to_json(const SmallEtaReport& report);
nlohmann::json to_json(const ContractionSummary& summary);
nlohmann::json to_json(const MaxDegreeReport& report);

}  // namespace pafind::analysis
