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

#include "pafind/analysis.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <ostream>
#include <string>

#include "pafind/csv.hpp"
#include "pafind/errors.hpp"
#include "pafind/generator.hpp"
#include "pafind/random.hpp"

namespace pafind::analysis {

double default_omega(std::uint64_t n) {
  return std::max(1.0, std::log(clamped_log(n)));
}

Regime Regime::of(std::uint64_t n, std::uint32_t m, double omega) {
  if (n == 0 || m == 0) throw ParameterError("need n >= 1 and m >= 1");
  const double log_n = clamped_log(n);
  const double nd = static_cast<double>(n);
  Regime r;
  r.omega = omega;
  r.n0 = nd / (omega * std::pow(log_n, 2.0 + 4.0 / m));
  r.n1 = nd / std::pow(log_n, 5.0);
  r.lambda0 = std::pow(log_n, -4.0 / m);
  return r;
}

namespace {

void summarize(ConcentrationReport& report) {
  if (report.rows.empty()) return;
  std::vector<double> errors;
  errors.reserve(report.rows.size());
  for (const auto& row : report.rows) errors.push_back(row.relative_error);
  report.median_error = stats::median(errors);
  report.p90_error = stats::quantile(std::move(errors), 0.9);
}

void check_same_run(const PAGraph& graph,
                    const ContinuousRealization& realization) {
  if (graph.n() != realization.n() || graph.m() != realization.m() ||
      graph.seed() != realization.seed()) {
    throw ConsistencyError("graph and realization differ in n, m or seed");
  }
  if (graph.construction() != Construction::kContinuous) {
    throw ConsistencyError("graph was not built by the continuous construction");
  }
  if (!realization.has_left_points()) return;
  // Spot-check up to 4096 evenly spaced edges against the interval layout.
  const std::uint64_t edges = graph.edge_count();
  const std::uint64_t stride = std::max<std::uint64_t>(1, edges / 4096);
  const auto W = realization.interval_endpoints();
  const auto left = graph.flat_left_choices();
  for (std::uint64_t i = 1; i <= edges; i += stride) {
    if (interval_lookup(W, realization.left_point(i)) != left[i - 1]) {
      throw ConsistencyError("edge " + std::to_string(i) +
                             " does not match the realization's left point");
    }
  }
}

}  // namespace

ConcentrationReport check_degree_concentration(
    std::span<const double> degrees, const ContinuousRealization& realization,
    std::span<const VertexId> sample, double omega) {
  const std::uint32_t n = realization.n();
  if (degrees.size() != n) {
    throw ConsistencyError("degree vector length differs from n");
  }
  ConcentrationReport report;
  report.regime = Regime::of(n, realization.m(), omega);
  for (VertexId i : sample) {
    if (i < 1 || i > n) {
      throw RangeError("sample index " + std::to_string(i) + " outside [1, n]");
    }
    const double eta = realization.eta(i);
    if (static_cast<double>(i) > report.regime.n0 ||
        eta < report.regime.lambda0) {
      ++report.excluded;
      continue;
    }
    ConcentrationRow row;
    row.i = i;
    row.degree = degrees[i - 1];
    row.eta = eta;
    row.prediction = eta * std::sqrt(static_cast<double>(n) / i);
    row.relative_error = std::abs(row.degree / row.prediction - 1.0);
    report.rows.push_back(row);
  }
  summarize(report);
  return report;
}

ConcentrationReport check_degree_concentration(
    const PAGraph& graph, const ContinuousRealization& realization,
    std::span<const VertexId> sample, double omega) {
  check_same_run(graph, realization);
  std::vector<double> degrees(graph.degrees().begin(), graph.degrees().end());
  return check_degree_concentration(degrees, realization, sample, omega);
}

IntervalReport check_interval_concentration(
    const ContinuousRealization& realization, double min_index) {
  const std::uint32_t n = realization.n();
  const std::uint32_t m = realization.m();
  const double nd = static_cast<double>(n);
  IntervalReport report;
  const auto first = static_cast<VertexId>(
      std::clamp(std::ceil(min_index), 1.0, nd + 1.0));
  std::vector<double> w_errors;
  for (VertexId i = first; i <= n; ++i) {
    IntervalRow row;
    row.i = i;
    row.W = realization.W(i);
    row.W_prediction = std::sqrt(i / nd);
    row.W_error = std::abs(row.W / row.W_prediction - 1.0);
    row.w = realization.w(i);
    row.w_prediction = realization.eta(i) / (2.0 * m * std::sqrt(i * nd));
    row.w_error = std::abs(row.w / row.w_prediction - 1.0);
    report.max_W_error = std::max(report.max_W_error, row.W_error);
    w_errors.push_back(row.w_error);
    report.rows.push_back(row);
  }
  if (!w_errors.empty()) {
    report.median_w_error = stats::median(w_errors);
    report.p90_w_error = stats::quantile(std::move(w_errors), 0.9);
  }

  const double W_n = realization.W(n);
  report.top_error = std::abs(W_n - 1.0);
  // Neumaier sum of the interval lengths.
  double sum = 0.0;
  double carry = 0.0;
  for (VertexId j = 1; j <= n; ++j) {
    const double x = realization.w(j);
    const double t = sum + x;
    carry += std::abs(sum) >= std::abs(x) ? (sum - t) + x : (x - t) + sum;
    sum = t;
  }
  report.telescoping_error = std::abs(sum + carry - W_n) / W_n;

  for (VertexId j = 1; j <= n; ++j) {
    const double hi = realization.upsilon(static_cast<std::uint64_t>(m) * j);
    const double lo =
        j == 1 ? 0.0
               : realization.upsilon(static_cast<std::uint64_t>(m) * (j - 1));
    const double err = std::abs(realization.eta(j) - (hi - lo)) / hi;
    report.eta_identity_error = std::max(report.eta_identity_error, err);
  }
  return report;
}

std::string_view to_string(TailPart part) {
  switch (part) {
    case TailPart::kLower:
      return "lower";
    case TailPart::kTwoSided:
      return "two_sided";
    case TailPart::kUpper:
      return "upper";
  }
  return "unknown";
}

bool TailBoundReport::all_satisfied() const {
  return std::all_of(rows.begin(), rows.end(),
                     [](const TailBoundRow& r) { return r.satisfied; });
}

double tail_bound(TailPart part, std::uint32_t m, double parameter) {
  if (m == 0) throw ParameterError("m must be >= 1");
  const double N = m;
  switch (part) {
    case TailPart::kLower:
      if (!(parameter > 0.0 && parameter <= 1.0)) {
        throw ParameterError("lower-tail x must lie in (0, 1]");
      }
      return std::pow(parameter * std::exp(1.0 - parameter), N);
    case TailPart::kTwoSided:
      if (!(parameter > 0.0 && parameter < 1.0)) {
        throw ParameterError("alpha must lie in (0, 1)");
      }
      return 2.0 * std::exp(-parameter * parameter * N / 3.0);
    case TailPart::kUpper:
      if (!(parameter >= 2.0)) throw ParameterError("beta must be >= 2");
      return std::exp(-N * (std::log(parameter) + parameter - 1.0));
  }
  throw ParameterError("unknown tail part");
}

namespace {

struct TailEstimate {
  double mean = 0.0;
  double variance = 0.0;  // of one weighted draw
  std::uint64_t hits = 0;
};

// Pr(Z <= c) (lower) or Pr(Z >= c) for Z ~ Gamma(N, 1), sampling from
// Gamma(N, rate lambda).
TailEstimate tilted_tail(bool lower, std::uint32_t N, double c, double lambda,
                         std::uint64_t trials, Rng& rng) {
  const double log_scale = -static_cast<double>(N) * std::log(lambda);
  std::uint64_t hits = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
  for (std::uint64_t t = 0; t < trials; ++t) {
    const double z = sample_exponential_sum(N, rng) / lambda;
    if (lower ? z <= c : z >= c) {
      const double w = std::exp(log_scale + (lambda - 1.0) * z);
      sum += w;
      sum_sq += w * w;
      ++hits;
    }
  }
  const double T = static_cast<double>(trials);
  TailEstimate e;
  e.hits = hits;
  e.mean = sum / T;
  e.variance =
      trials > 1 ? std::max(0.0, (sum_sq - T * e.mean * e.mean) / (T - 1.0))
                 : 0.0;
  return e;
}

constexpr std::uint64_t kMinTailHits = 30;

std::uint64_t tail_stream_index(TailPart part, std::uint32_t m,
                                double parameter) {
  return mix64(std::bit_cast<std::uint64_t>(parameter) ^
               (static_cast<std::uint64_t>(part) << 56) ^
               (static_cast<std::uint64_t>(m) << 24));
}

}  // namespace

TailBoundRow estimate_tail(TailPart part, std::uint32_t m, double parameter,
                           std::uint64_t trials, std::uint64_t seed) {
  if (m == 0) throw ParameterError("m must be >= 1");
  if (trials < 2) throw PrecisionError("need at least two trials", 2);
  TailBoundRow row;
  row.part = part;
  row.m = m;
  row.parameter = parameter;
  row.trials = trials;
  row.bound = tail_bound(part, m, parameter);
  Rng rng = make_stream(seed, StreamDomain::kTailBound,
                        tail_stream_index(part, m, parameter));
  const double N = m;
  double variance = 0.0;
  std::uint64_t hits = 0;
  switch (part) {
    case TailPart::kLower: {
      const auto e =
          tilted_tail(true, m, parameter * N, 1.0 / parameter, trials, rng);
      row.estimate = e.mean;
      variance = e.variance;
      hits = e.hits;
      break;
    }
    case TailPart::kTwoSided: {
      const auto lo = tilted_tail(true, m, (1.0 - parameter) * N,
                                  1.0 / (1.0 - parameter), trials, rng);
      const auto hi = tilted_tail(false, m, (1.0 + parameter) * N,
                                  1.0 / (1.0 + parameter), trials, rng);
      row.estimate = lo.mean + hi.mean;
      variance = lo.variance + hi.variance;
      hits = std::min(lo.hits, hi.hits);
      break;
    }
    case TailPart::kUpper: {
      const auto e =
          tilted_tail(false, m, parameter * N, 1.0 / parameter, trials, rng);
      row.estimate = e.mean;
      variance = e.variance;
      hits = e.hits;
      break;
    }
  }
  row.std_error = std::sqrt(variance / static_cast<double>(trials));
  // A variance estimate from a handful of tail draws is meaningless.
  if (hits < kMinTailHits) {
    const double rate = static_cast<double>(hits + 1) / static_cast<double>(trials);
    const auto required = static_cast<std::uint64_t>(std::ceil(kMinTailHits / rate));
    throw PrecisionError(std::string(to_string(part)) + " tail at m=" + std::to_string(m) +
                             " landed " + std::to_string(hits) + " draws in the tail; needs about " +
                             std::to_string(required) + " trials",
                         required);
  }
  const bool clearly_violated = row.estimate - 3.0 * row.std_error > row.bound;
  if (3.0 * row.std_error >= row.bound / 10.0 && !clearly_violated) {
    const double per_draw = std::sqrt(variance);
    const auto required = static_cast<std::uint64_t>(
        std::ceil(std::pow(30.0 * per_draw / row.bound, 2.0))) + 1;
    throw PrecisionError(
        std::string(to_string(part)) + " tail at m=" + std::to_string(m) +
            ", parameter=" + csv::format_double(parameter) + " needs at least " +
            std::to_string(required) + " trials",
        required);
  }
  row.satisfied = row.estimate <= row.bound + 3.0 * row.std_error;
  return row;
}

TailBoundReport check_tail_bounds(const TailBoundGrid& grid,
                                  std::uint64_t trials, std::uint64_t seed) {
  TailBoundReport report;
  for (std::uint32_t m : grid.m_values) {
    for (double x : grid.x_values) {
      report.rows.push_back(estimate_tail(TailPart::kLower, m, x, trials, seed));
    }
    for (double a : grid.alpha_values) {
      report.rows.push_back(
          estimate_tail(TailPart::kTwoSided, m, a, trials, seed));
    }
    for (double b : grid.beta_values) {
      report.rows.push_back(estimate_tail(TailPart::kUpper, m, b, trials, seed));
    }
  }
  return report;
}

EdgeProbabilityReport check_edge_probability(std::uint32_t n, std::uint32_t m,
                                             VertexId i, VertexId j,
                                             std::uint64_t trials,
                                             std::uint64_t seed, double omega,
                                             std::size_t buckets) {
  if (n == 0 || m == 0) throw ParameterError("need n >= 1 and m >= 1");
  if (!(static_cast<double>(i) >= omega) || i >= j || j > n) {
    throw RangeError("edge probability needs omega <= i < j <= n");
  }
  if (buckets == 0) throw ParameterError("need at least one bucket");
  const double scale = 1.0 / (2.0 * std::sqrt(static_cast<double>(i) * j));
  const double expected_hits = static_cast<double>(trials) * m * scale;
  if (trials < 10000 || expected_hits < 30.0) {
    const auto required = std::max<std::uint64_t>(
        10000, static_cast<std::uint64_t>(std::ceil(30.0 / (m * scale))));
    throw PrecisionError("edge {" + std::to_string(i) + "," +
                             std::to_string(j) + "} needs at least " +
                             std::to_string(required) + " trials",
                         required);
  }

  struct Outcome {
    double eta;
    bool hit;
  };
  std::vector<Outcome> outcomes;
  outcomes.reserve(trials);
  for (std::uint64_t t = 0; t < trials; ++t) {
    const auto sample = generate_continuous(
        n, m, derive_seed(seed, StreamDomain::kEdgeProbability, t));
    const auto choices = sample.graph.left_choices(j);
    const bool hit = std::find(choices.begin(), choices.end(), i) != choices.end();
    outcomes.push_back({sample.realization.eta(i), hit});
  }

  EdgeProbabilityReport report;
  report.n = n;
  report.m = m;
  report.i = i;
  report.j = j;
  report.trials = trials;
  double predicted_sum = 0.0;
  for (const auto& o : outcomes) {
    report.hits += o.hit;
    predicted_sum += o.eta * scale;
  }
  report.empirical = static_cast<double>(report.hits) / trials;
  report.predicted = predicted_sum / trials;
  report.ratio = report.empirical / report.predicted;

  std::sort(outcomes.begin(), outcomes.end(),
            [](const Outcome& a, const Outcome& b) { return a.eta < b.eta; });
  for (std::size_t b = 0; b < buckets; ++b) {
    const std::size_t lo = outcomes.size() * b / buckets;
    const std::size_t hi = outcomes.size() * (b + 1) / buckets;
    if (lo == hi) continue;
    EdgeProbabilityBucket bucket;
    bucket.eta_low = outcomes[lo].eta;
    bucket.eta_high = outcomes[hi - 1].eta;
    bucket.trials = hi - lo;
    double pred = 0.0;
    for (std::size_t k = lo; k < hi; ++k) {
      bucket.hits += outcomes[k].hit;
      pred += outcomes[k].eta * scale;
    }
    bucket.empirical = static_cast<double>(bucket.hits) / bucket.trials;
    bucket.predicted = pred / bucket.trials;
    bucket.ratio = bucket.empirical / bucket.predicted;
    report.buckets.push_back(bucket);
  }
  return report;
}

SmallEtaReport check_small_eta_mass(const ContinuousRealization& realization,
                                    std::span<const VertexId> checkpoints) {
  const std::uint32_t n = realization.n();
  const std::uint32_t m = realization.m();
  const double log_n = clamped_log(n);
  const auto lowest = static_cast<VertexId>(std::ceil(std::pow(log_n, 3.0)));
  for (VertexId c : checkpoints) {
    if (c < lowest || c > n) {
      throw RangeError("checkpoint " + std::to_string(c) + " outside [" +
                       std::to_string(lowest) + ", n]");
    }
  }
  std::vector<VertexId> sorted(checkpoints.begin(), checkpoints.end());
  std::sort(sorted.begin(), sorted.end());

  SmallEtaReport report;
  report.lambda0 = std::pow(log_n, -4.0 / m);
  const double nd = static_cast<double>(n);
  double B = 0.0;
  VertexId v = 0;
  for (VertexId c : sorted) {
    for (; v < c; ) {
      ++v;
      if (realization.eta(v) <= report.lambda0) {
        ++report.small_count;
        B += report.lambda0 / (2.0 * m * std::sqrt(v * nd));
      }
    }
    SmallEtaRow row;
    row.i = c;
    row.B = B;
    row.W = realization.W(c);
    row.ratio = B * log_n / row.W;
    report.max_ratio = std::max(report.max_ratio, row.ratio);
    report.rows.push_back(row);
  }
  return report;
}

std::vector<ClimbStep> climb_steps(const SearchTrace& trace,
                                   const IndexResolver& resolver) {
  std::vector<ClimbStep> steps;
  const auto& seq = trace.climb_sequence;
  for (std::size_t t = 1; t < seq.size(); ++t) {
    const VertexId prev = resolver(seq[t - 1]);
    steps.push_back({prev, static_cast<double>(resolver(seq[t])) / prev});
  }
  return steps;
}

ContractionSummary contraction_statistic(std::span<const ClimbStep> steps,
                                         double band_low, double band_high,
                                         std::uint64_t seed, double level,
                                         std::uint32_t resamples,
                                         std::size_t min_steps) {
  ContractionSummary summary;
  summary.band_low = band_low;
  summary.band_high = band_high;
  std::vector<double> ratios;
  for (const ClimbStep& s : steps) {
    if (s.previous >= band_low && s.previous <= band_high) {
      ratios.push_back(s.ratio);
    }
  }
  summary.steps = ratios.size();
  if (ratios.size() < min_steps) {
    throw PrecisionError("only " + std::to_string(ratios.size()) +
                             " climb steps start inside the band [" +
                             csv::format_double(band_low) + ", " +
                             csv::format_double(band_high) + "], need " +
                             std::to_string(min_steps),
                         min_steps);
  }
  summary.mean = stats::mean(ratios);
  summary.ci = stats::bootstrap_mean_ci(ratios, level, resamples, seed);
  return summary;
}

MaxDegreeRow max_degree_row(const PAGraph& graph) {
  MaxDegreeRow row;
  row.n = graph.n();
  row.m = graph.m();
  row.seed = graph.seed();
  row.max_degree = graph.max_degree();
  row.ratio = row.max_degree / std::sqrt(static_cast<double>(graph.n()));
  row.degree_of_first = graph.degree(1);
  const auto degrees = graph.degrees();
  row.rank_of_first = 1 + static_cast<std::uint32_t>(std::count_if(
                              degrees.begin(), degrees.end(),
                              [&](std::uint32_t d) {
                                return d > row.degree_of_first;
                              }));
  return row;
}

MaxDegreeReport max_degree_scaling(std::span<const MaxDegreeRow> rows) {
  MaxDegreeReport report;
  report.rows.assign(rows.begin(), rows.end());
  std::vector<double> x;
  std::vector<double> y;
  std::size_t top10 = 0;
  for (const auto& r : rows) {
    x.push_back(std::log(static_cast<double>(r.n)));
    y.push_back(std::log(static_cast<double>(r.max_degree)));
    top10 += r.rank_of_first <= 10;
  }
  report.first_in_top10 =
      rows.empty() ? 0.0 : static_cast<double>(top10) / rows.size();
  const bool spread =
      !x.empty() && std::any_of(x.begin(), x.end(),
                                [&](double v) { return v != x.front(); });
  report.exponent = spread ? stats::least_squares(x, y).slope
                           : std::numeric_limits<double>::quiet_NaN();
  return report;
}

MaxDegreeReport max_degree_scaling(std::span<const PAGraph> graphs) {
  std::vector<MaxDegreeRow> rows;
  for (const auto& g : graphs) rows.push_back(max_degree_row(g));
  return max_degree_scaling(rows);
}

void write_csv(std::ostream& out, const ConcentrationReport& report) {
  csv::Writer w(out);
  w.row({"i", "degree", "eta", "prediction", "relative_error"});
  for (const auto& r : report.rows) {
    w.field(r.i).field(r.degree).field(r.eta).field(r.prediction)
        .field(r.relative_error);
    w.end_row();
  }
}

void write_csv(std::ostream& out, const IntervalReport& report) {
  csv::Writer w(out);
  w.row({"i", "W", "W_prediction", "W_error", "w", "w_prediction", "w_error"});
  for (const auto& r : report.rows) {
    w.field(r.i).field(r.W).field(r.W_prediction).field(r.W_error)
        .field(r.w).field(r.w_prediction).field(r.w_error);
    w.end_row();
  }
}

void write_csv(std::ostream& out, const TailBoundReport& report) {
  csv::Writer w(out);
  w.row({"part", "m", "parameter", "trials", "estimate", "std_error", "bound",
         "satisfied"});
  for (const auto& r : report.rows) {
    w.field(to_string(r.part)).field(r.m).field(r.parameter).field(r.trials)
        .field(r.estimate).field(r.std_error).field(r.bound)
        .field(r.satisfied);
    w.end_row();
  }
}

void write_csv(std::ostream& out, const EdgeProbabilityReport& report) {
  csv::Writer w(out);
  w.row({"eta_low", "eta_high", "trials", "hits", "empirical", "predicted",
         "ratio"});
  for (const auto& b : report.buckets) {
    w.field(b.eta_low).field(b.eta_high).field(b.trials).field(b.hits)
        .field(b.empirical).field(b.predicted).field(b.ratio);
    w.end_row();
  }
}

void write_csv(std::ostream& out, const SmallEtaReport& report) {
  csv::Writer w(out);
  w.row({"i", "B", "W", "ratio"});
  for (const auto& r : report.rows) {
    w.field(r.i).field(r.B).field(r.W).field(r.ratio);
    w.end_row();
  }
}

void write_csv(std::ostream& out, const MaxDegreeReport& report) {
  csv::Writer w(out);
  w.row({"n", "m", "seed", "max_degree", "ratio", "degree_of_first",
         "rank_of_first"});
  for (const auto& r : report.rows) {
    w.field(r.n).field(r.m).field(r.seed).field(r.max_degree).field(r.ratio)
        .field(r.degree_of_first).field(r.rank_of_first);
    w.end_row();
  }
}

namespace {

nlohmann::json regime_json(const Regime& r) {
  return {{"lambda0", r.lambda0}, {"n0", r.n0}, {"n1", r.n1},
          {"omega", r.omega}};
}

}  // namespace

nlohmann::json to_json(const ConcentrationReport& report) {
  return {{"excluded", report.excluded},
          {"median_error", report.median_error},
          {"p90_error", report.p90_error},
          {"regime", regime_json(report.regime)},
          {"rows", report.rows.size()}};
}

nlohmann::json to_json(const IntervalReport& report) {
  return {{"eta_identity_error", report.eta_identity_error},
          {"max_W_error", report.max_W_error},
          {"median_w_error", report.median_w_error},
          {"p90_w_error", report.p90_w_error},
          {"rows", report.rows.size()},
          {"telescoping_error", report.telescoping_error},
          {"top_error", report.top_error}};
}

nlohmann::json to_json(const TailBoundReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"bound", r.bound},
                    {"estimate", r.estimate},
                    {"m", r.m},
                    {"parameter", r.parameter},
                    {"part", to_string(r.part)},
                    {"satisfied", r.satisfied},
                    {"std_error", r.std_error},
                    {"trials", r.trials}});
  }
  return {{"all_satisfied", report.all_satisfied()}, {"rows", rows}};
}

nlohmann::json to_json(const EdgeProbabilityReport& report) {
  nlohmann::json buckets = nlohmann::json::array();
  for (const auto& b : report.buckets) {
    buckets.push_back({{"empirical", b.empirical},
                       {"eta_high", b.eta_high},
                       {"eta_low", b.eta_low},
                       {"hits", b.hits},
                       {"predicted", b.predicted},
                       {"ratio", b.ratio},
                       {"trials", b.trials}});
  }
  return {{"buckets", buckets},       {"empirical", report.empirical},
          {"hits", report.hits},      {"i", report.i},
          {"j", report.j},            {"m", report.m},
          {"n", report.n},            {"predicted", report.predicted},
          {"ratio", report.ratio},    {"trials", report.trials}};
}

nlohmann::json to_json(const SmallEtaReport& report) {
  return {{"checkpoints", report.rows.size()},
          {"lambda0", report.lambda0},
          {"max_ratio", report.max_ratio},
          {"small_count", report.small_count}};
}

nlohmann::json to_json(const ContractionSummary& summary) {
  return {{"band", {summary.band_low, summary.band_high}},
          {"ci", {summary.ci.lower, summary.ci.upper}},
          {"mean", summary.mean},
          {"steps", summary.steps}};
}

nlohmann::json to_json(const MaxDegreeReport& report) {
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& r : report.rows) {
    rows.push_back({{"degree_of_first", r.degree_of_first},
                    {"m", r.m},
                    {"max_degree", r.max_degree},
                    {"n", r.n},
                    {"rank_of_first", r.rank_of_first},
                    {"ratio", r.ratio},
                    {"seed", r.seed}});
  }
  return {{"exponent", report.exponent},
          {"first_in_top10", report.first_in_top10},
          {"rows", rows}};
}

}  // namespace pafind::analysis
