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

#include "pafind/harness.hpp"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <limits>
#include <map>
#include <mutex>
#include <thread>
#include <unordered_set>

#include "pafind/csv.hpp"
#include "pafind/errors.hpp"
#include "pafind/generator.hpp"
#include "pafind/oracle.hpp"
#include "pafind/random.hpp"

namespace pafind {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

bool is_dca(Algorithm a) {
  return a == Algorithm::kDca || a == Algorithm::kDcaNoPhase1;
}

}  // namespace

void ExperimentConfig::validate() const {
  if (n_ladder.empty()) throw ParameterError("n ladder is empty");
  for (std::size_t k = 0; k < n_ladder.size(); ++k) {
    if (n_ladder[k] == 0) throw ParameterError("n must be >= 1");
    if (k > 0 && n_ladder[k] <= n_ladder[k - 1]) {
      throw ParameterError("n ladder must be strictly increasing");
    }
  }
  if (m == 0) throw ParameterError("m must be >= 1");
  if (trials == 0) throw ParameterError("trials must be >= 1");
  if (!(budget_constant > 0.0)) {
    throw ParameterError("budget constant must be positive");
  }
  if (budget && *budget == 0) throw ParameterError("budget must be positive");
  if (workers == 0) throw ParameterError("workers must be >= 1");
  if (!write_csv && !write_json && !output.empty()) {
    throw ParameterError("no output format selected");
  }
}

std::uint64_t trial_seed(std::uint64_t base_seed, std::uint32_t n,
                         std::uint32_t trial) {
  return derive_seed(base_seed, StreamDomain::kTrial,
                     (static_cast<std::uint64_t>(n) << 32) | trial);
}

DcaConfig dca_config_for(const ExperimentConfig& config, std::uint32_t n) {
  DcaConfig c = DcaConfig::defaults(n, config.m, config.budget_constant);
  const DcaOverrides& o = config.dca;
  if (o.omega) {
    // Thresholds and budget scale with omega.
    const double log_n = clamped_log(n);
    c.omega = *o.omega;
    c.start_degree_threshold = c.omega * std::pow(log_n, 2.5);
    c.budget = static_cast<std::uint64_t>(
        std::ceil(config.budget_constant * c.omega * std::pow(log_n, 3.5)));
  }
  if (o.start_degree_threshold) {
    c.start_degree_threshold = *o.start_degree_threshold;
  }
  if (o.climb_stop_threshold) c.climb_stop_threshold = *o.climb_stop_threshold;
  if (o.walk_restrict_threshold) {
    c.walk_restrict_threshold = *o.walk_restrict_threshold;
  }
  if (o.branch_width) c.branch_width = *o.branch_width;
  if (o.warmup_steps) c.warmup_steps = *o.warmup_steps;
  if (config.budget) c.budget = *config.budget;
  c.skip_phase1 = config.algorithm == Algorithm::kDcaNoPhase1;
  return c;
}

std::uint64_t default_budget(Algorithm algorithm, std::uint32_t n,
                             std::uint32_t m, double budget_constant) {
  const double log_n = clamped_log(n);
  switch (algorithm) {
    case Algorithm::kDca:
    case Algorithm::kDcaNoPhase1:
      return DcaConfig::defaults(n, m, budget_constant).budget;
    case Algorithm::kBbckl:
      return static_cast<std::uint64_t>(
          std::ceil(budget_constant * std::pow(log_n, 4.0)));
    case Algorithm::kWalk:
      return static_cast<std::uint64_t>(std::ceil(budget_constant * n));
  }
  throw ParameterError("unknown algorithm");
}

std::uint64_t budget_for(const ExperimentConfig& config, std::uint32_t n) {
  if (is_dca(config.algorithm)) return dca_config_for(config, n).budget;
  if (config.budget) return *config.budget;
  return default_budget(config.algorithm, n, config.m, config.budget_constant);
}

std::pair<double, double> band_for(const ExperimentConfig& config,
                                   std::uint32_t n) {
  const double low = config.band_low.value_or(1000.0);
  const double high = config.band_high.value_or(
      static_cast<double>(n) / std::pow(clamped_log(n), 5.0));
  return {low, high};
}

PAGraph generate(Construction construction, std::uint32_t n, std::uint32_t m,
                 std::uint64_t seed) {
  switch (construction) {
    case Construction::kSequential:
      return generate_sequential(n, m, seed);
    case Construction::kContinuous:
      return generate_continuous(n, m, seed).graph;
    case Construction::kUniformControl:
      return generate_uniform_attachment(n, m, seed);
  }
  throw ParameterError("unknown construction");
}

SearchTrace run_search(const PAGraph& graph, const ExperimentConfig& config,
                       std::uint64_t handle_seed, std::uint64_t search_seed) {
  const LocalOracle oracle(graph, handle_seed);
  OracleSession session(oracle, config.audit);
  Rng rng(search_seed);
  SearchTrace trace;
  switch (config.algorithm) {
    case Algorithm::kDca:
    case Algorithm::kDcaNoPhase1:
      trace = dca_search(session, dca_config_for(config, graph.n()), rng);
      break;
    case Algorithm::kBbckl:
      trace = bbckl_search(session, budget_for(config, graph.n()), rng);
      break;
    case Algorithm::kWalk:
      trace = random_walk_search(session, budget_for(config, graph.n()), rng);
      break;
  }
  if (trace.total_cost > trace.budget) {
    throw ConsistencyError("search cost exceeds its budget");
  }
  if (trace.success &&
      !(trace.last_visited && oracle.is_target(*trace.last_visited))) {
    throw ConsistencyError("success reported away from the target");
  }
  if (config.audit) {
    std::vector<Handle> handles;
    for (const auto& e : trace.events) handles.push_back(e.handle);
    if (!session.produced_all(handles) || session.locality_violations() > 0) {
      throw ConsistencyError("trace uses a handle the oracle never produced");
    }
  }
  return trace;
}

namespace {

struct TrialOutcome {
  TrialRow row;
  std::vector<VertexId> climb;
};

TrialOutcome run_trial(const ExperimentConfig& config, std::uint32_t n,
                       std::uint32_t trial, const PAGraph* shared_graph) {
  const std::uint64_t seed = trial_seed(config.base_seed, n, trial);
  PAGraph own;
  if (!shared_graph) {
    own = generate(config.construction, n, config.m,
                   derive_seed(seed, StreamDomain::kGraph, 0));
  }
  const PAGraph& graph = shared_graph ? *shared_graph : own;
  const std::uint64_t handle_seed =
      derive_seed(seed, StreamDomain::kHandleSeed, 0);
  SearchTrace trace;
  try {
    trace = run_search(graph, config, handle_seed,
                       derive_seed(seed, StreamDomain::kSearch, 0));
  } catch (const ConsistencyError& e) {
    throw ConsistencyError("trial n=" + std::to_string(n) + " index=" +
                           std::to_string(trial) + ": " + e.what());
  }
  TrialOutcome out;
  out.row = {n,
             config.m,
             config.algorithm,
             seed,
             trace.success,
             trace.total_cost,
             trace.phase1_steps,
             trace.main_loop_length(),
             trace.phase3_steps,
             trace.fallback_steps};
  if (is_dca(config.algorithm)) {
    const LocalOracle oracle(graph, handle_seed);
    for (Handle h : trace.climb_sequence) out.climb.push_back(oracle.resolve(h));
  }
  return out;
}

// Runs fn(k) for k in [0, count) on `workers` threads and rethrows the first
// failure.
template <typename Fn>
void parallel_for(std::size_t count, unsigned workers, Fn fn) {
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  const auto body = [&] {
    for (;;) {
      const std::size_t k = next.fetch_add(1);
      if (k >= count) return;
      try {
        fn(k);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
        next.store(count);
        return;
      }
    }
  };
  const unsigned threads =
      static_cast<unsigned>(std::min<std::size_t>(workers, count));
  if (threads <= 1) {
    body();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(body);
  }
  if (failure) std::rethrow_exception(failure);
}

}  // namespace

ExperimentResult run_experiment(const ExperimentConfig& config) {
  config.validate();
  ExperimentResult result;
  result.config = config;

  std::unordered_set<std::uint64_t> seeds;
  for (std::uint32_t n : config.n_ladder) {
    for (std::uint32_t t = 0; t < config.trials; ++t) {
      if (!seeds.insert(trial_seed(config.base_seed, n, t)).second) {
        throw ConsistencyError("trial seed collision at n=" +
                               std::to_string(n) + " index=" +
                               std::to_string(t));
      }
    }
  }

  for (std::uint32_t n : config.n_ladder) {
    std::optional<PAGraph> shared;
    if (config.fixed_graph) {
      shared = generate(config.construction, n, config.m,
                        derive_seed(config.base_seed, StreamDomain::kGraph, n));
    }
    std::vector<TrialOutcome> outcomes(config.trials);
    parallel_for(config.trials, config.workers, [&](std::size_t t) {
      outcomes[t] = run_trial(config, n, static_cast<std::uint32_t>(t),
                              shared ? &*shared : nullptr);
    });
    for (std::uint32_t t = 0; t < config.trials; ++t) {
      result.trials.push_back(outcomes[t].row);
      for (std::size_t s = 0; s < outcomes[t].climb.size(); ++s) {
        result.climbs.push_back({n, t, static_cast<std::uint32_t>(s + 1),
                                 outcomes[t].climb[s]});
      }
    }
  }
  result.aggregates = aggregate(config, result.trials, result.climbs);
  if (!config.output.empty()) write_outputs(result, config.output);
  return result;
}

std::vector<AggregateRow> aggregate(const ExperimentConfig& config,
                                    std::span<const TrialRow> trials,
                                    std::span<const ClimbRow> climbs) {
  std::vector<AggregateRow> rows;
  for (std::uint32_t n : config.n_ladder) {
    AggregateRow a;
    a.n = n;
    a.budget = budget_for(config, n);
    std::vector<double> costs;
    double cost_sum = 0.0;
    double T_sum = 0.0;
    for (const TrialRow& r : trials) {
      if (r.n != n) continue;
      ++a.trials;
      a.successes += r.success;
      costs.push_back(static_cast<double>(r.total_cost));
      cost_sum += static_cast<double>(r.total_cost);
      if (r.T >= 2) {
        ++a.main_loop_trials;
        T_sum += static_cast<double>(r.T);
      }
    }
    if (a.trials > 0) {
      a.success_rate = static_cast<double>(a.successes) / a.trials;
      a.mean_cost = cost_sum / a.trials;
      a.median_cost = stats::median(costs);
    } else {
      a.success_rate = a.mean_cost = a.median_cost = kNaN;
    }
    a.mean_T = a.main_loop_trials > 0 ? T_sum / a.main_loop_trials : kNaN;

    const auto [low, high] = band_for(config, n);
    a.band_low = low;
    a.band_high = high;
    double rho_sum = 0.0;
    const ClimbRow* previous = nullptr;
    for (const ClimbRow& c : climbs) {
      if (c.n != n) continue;
      if (previous && previous->trial == c.trial &&
          c.step == previous->step + 1 && previous->vertex >= low &&
          previous->vertex <= high) {
        ++a.band_steps;
        rho_sum += static_cast<double>(c.vertex) / previous->vertex;
      }
      previous = &c;
    }
    a.mean_rho = a.band_steps > 0 ? rho_sum / a.band_steps : kNaN;
    rows.push_back(a);
  }
  return rows;
}

namespace {

template <typename T>
nlohmann::json optional_json(const std::optional<T>& v) {
  return v ? nlohmann::json(*v) : nlohmann::json(nullptr);
}

template <typename T>
std::optional<T> optional_from(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || j.at(key).is_null()) return std::nullopt;
  return j.at(key).get<T>();
}

nlohmann::json number_or_null(double v) {
  return std::isfinite(v) ? nlohmann::json(v) : nlohmann::json(nullptr);
}

}  // namespace

nlohmann::json config_json(const ExperimentConfig& c) {
  return {{"algorithm", to_string(c.algorithm)},
          {"audit", c.audit},
          {"band_high", optional_json(c.band_high)},
          {"band_low", optional_json(c.band_low)},
          {"base_seed", c.base_seed},
          {"budget", optional_json(c.budget)},
          {"budget_constant", c.budget_constant},
          {"construction", to_string(c.construction)},
          {"dca",
           {{"branch_width", optional_json(c.dca.branch_width)},
            {"climb_stop_threshold", optional_json(c.dca.climb_stop_threshold)},
            {"omega", optional_json(c.dca.omega)},
            {"start_degree_threshold",
             optional_json(c.dca.start_degree_threshold)},
            {"walk_restrict_threshold",
             optional_json(c.dca.walk_restrict_threshold)},
            {"warmup_steps", optional_json(c.dca.warmup_steps)}}},
          {"fixed_graph", c.fixed_graph},
          {"m", c.m},
          {"n_ladder", c.n_ladder},
          {"trials", c.trials}};
}

ExperimentConfig config_from_json(const nlohmann::json& j) {
  try {
    ExperimentConfig c;
    c.n_ladder = j.at("n_ladder").get<std::vector<std::uint32_t>>();
    c.m = j.at("m").get<std::uint32_t>();
    c.construction =
        construction_from_string(j.at("construction").get<std::string>());
    c.algorithm = algorithm_from_string(j.at("algorithm").get<std::string>());
    c.trials = j.at("trials").get<std::uint32_t>();
    c.base_seed = j.at("base_seed").get<std::uint64_t>();
    c.budget_constant = j.at("budget_constant").get<double>();
    c.budget = optional_from<std::uint64_t>(j, "budget");
    c.fixed_graph = j.value("fixed_graph", false);
    c.audit = j.value("audit", false);
    c.band_low = optional_from<double>(j, "band_low");
    c.band_high = optional_from<double>(j, "band_high");
    if (j.contains("dca")) {
      const auto& d = j.at("dca");
      c.dca.omega = optional_from<double>(d, "omega");
      c.dca.start_degree_threshold =
          optional_from<double>(d, "start_degree_threshold");
      c.dca.climb_stop_threshold =
          optional_from<double>(d, "climb_stop_threshold");
      c.dca.walk_restrict_threshold =
          optional_from<double>(d, "walk_restrict_threshold");
      c.dca.branch_width = optional_from<std::size_t>(d, "branch_width");
      c.dca.warmup_steps = optional_from<std::uint64_t>(d, "warmup_steps");
    }
    return c;
  } catch (const nlohmann::json::exception& e) {
    throw ParameterError(std::string("bad experiment config: ") + e.what());
  }
}

namespace {

std::ofstream open_output(const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot write " + path.string());
  return out;
}

void write_trials(std::ostream& out, std::span<const TrialRow> rows) {
  csv::Writer w(out);
  w.row({"n", "m", "algorithm", "seed", "success", "total_cost",
         "phase1_steps", "T", "phase3_steps", "fallback_count"});
  for (const auto& r : rows) {
    w.field(r.n).field(r.m).field(to_string(r.algorithm)).field(r.seed)
        .field(r.success).field(r.total_cost).field(r.phase1_steps).field(r.T)
        .field(r.phase3_steps).field(r.fallback_count);
    w.end_row();
  }
}

void write_climbs(std::ostream& out, std::span<const ClimbRow> rows) {
  csv::Writer w(out);
  w.row({"n", "trial", "step", "vertex"});
  for (const auto& r : rows) {
    w.field(r.n).field(r.trial).field(r.step).field(r.vertex);
    w.end_row();
  }
}

const std::vector<std::string>& aggregate_header() {
  static const std::vector<std::string> header = {
      "n",         "budget",           "trials",    "successes",
      "success_rate", "mean_cost",     "median_cost", "main_loop_trials",
      "mean_T",    "band_low",         "band_high", "band_steps",
      "mean_rho"};
  return header;
}

void write_aggregates(std::ostream& out, std::span<const AggregateRow> rows) {
  csv::Writer w(out);
  w.row(aggregate_header());
  for (const auto& a : rows) {
    w.field(a.n).field(a.budget).field(a.trials).field(a.successes)
        .field(a.success_rate).field(a.mean_cost).field(a.median_cost)
        .field(a.main_loop_trials).field(a.mean_T).field(a.band_low)
        .field(a.band_high).field(a.band_steps).field(a.mean_rho);
    w.end_row();
  }
}

nlohmann::json aggregate_json(const AggregateRow& a) {
  return {{"band", {a.band_low, a.band_high}},
          {"band_steps", a.band_steps},
          {"budget", a.budget},
          {"main_loop_trials", a.main_loop_trials},
          {"mean_T", number_or_null(a.mean_T)},
          {"mean_cost", number_or_null(a.mean_cost)},
          {"mean_rho", number_or_null(a.mean_rho)},
          {"median_cost", number_or_null(a.median_cost)},
          {"n", a.n},
          {"success_rate", number_or_null(a.success_rate)},
          {"successes", a.successes},
          {"trials", a.trials}};
}

std::uint64_t parse_u64(const std::string& s) {
  std::uint64_t v = 0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
    throw IoError("expected an unsigned integer, got '" + s + "'");
  }
  return v;
}

double parse_double(const std::string& s) {
  if (s == "nan") return kNaN;
  if (s == "inf") return std::numeric_limits<double>::infinity();
  if (s == "-inf") return -std::numeric_limits<double>::infinity();
  double v = 0.0;
  const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
  if (r.ec != std::errc() || r.ptr != s.data() + s.size()) {
    throw IoError("expected a number, got '" + s + "'");
  }
  return v;
}

bool parse_bool(const std::string& s) {
  if (s == "true") return true;
  if (s == "false") return false;
  throw IoError("expected true or false, got '" + s + "'");
}

csv::Table read_table(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot read " + path.string());
  return csv::read(in);
}

}  // namespace

void write_outputs(const ExperimentResult& result,
                   const std::filesystem::path& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create " + dir.string() + ": " + ec.message());
  const ExperimentConfig& config = result.config;
  if (config.write_csv) {
    auto trials = open_output(dir / "trials.csv");
    write_trials(trials, result.trials);
    if (is_dca(config.algorithm)) {
      auto climbs = open_output(dir / "climbs.csv");
      write_climbs(climbs, result.climbs);
    }
    auto aggregates = open_output(dir / "aggregates.csv");
    write_aggregates(aggregates, result.aggregates);
    if (!trials || !aggregates) throw IoError("write failed in " + dir.string());
  }
  if (config.write_json) {
    nlohmann::json summary;
    summary["config"] = config_json(config);
    summary["budget_constant"] = config.budget_constant;
    summary["aggregates"] = nlohmann::json::array();
    for (const auto& a : result.aggregates) {
      summary["aggregates"].push_back(aggregate_json(a));
    }
    summary["seed_audit"] = {{"distinct_trial_seeds", result.trials.size()}};
    auto out = open_output(dir / "summary.json");
    out << summary.dump(2) << '\n';
    if (!out) throw IoError("write failed in " + dir.string());
  }
}

std::vector<TrialRow> read_trials(const std::filesystem::path& path) {
  const csv::Table t = read_table(path);
  const std::size_t cn = t.column("n"), cm = t.column("m"),
                    ca = t.column("algorithm"), cs = t.column("seed"),
                    cok = t.column("success"), cc = t.column("total_cost"),
                    c1 = t.column("phase1_steps"), cT = t.column("T"),
                    c3 = t.column("phase3_steps"),
                    cf = t.column("fallback_count");
  std::vector<TrialRow> rows;
  for (const auto& f : t.rows) {
    TrialRow r;
    r.n = static_cast<std::uint32_t>(parse_u64(f[cn]));
    r.m = static_cast<std::uint32_t>(parse_u64(f[cm]));
    r.algorithm = algorithm_from_string(f[ca]);
    r.seed = parse_u64(f[cs]);
    r.success = parse_bool(f[cok]);
    r.total_cost = parse_u64(f[cc]);
    r.phase1_steps = parse_u64(f[c1]);
    r.T = parse_u64(f[cT]);
    r.phase3_steps = parse_u64(f[c3]);
    r.fallback_count = parse_u64(f[cf]);
    rows.push_back(r);
  }
  return rows;
}

std::vector<ClimbRow> read_climbs(const std::filesystem::path& path) {
  const csv::Table t = read_table(path);
  const std::size_t cn = t.column("n"), ct = t.column("trial"),
                    cs = t.column("step"), cv = t.column("vertex");
  std::vector<ClimbRow> rows;
  for (const auto& f : t.rows) {
    rows.push_back({static_cast<std::uint32_t>(parse_u64(f[cn])),
                    static_cast<std::uint32_t>(parse_u64(f[ct])),
                    static_cast<std::uint32_t>(parse_u64(f[cs])),
                    static_cast<VertexId>(parse_u64(f[cv]))});
  }
  return rows;
}

std::vector<AggregateRow> read_aggregates(const std::filesystem::path& path) {
  const csv::Table t = read_table(path);
  std::vector<std::size_t> cols;
  for (const auto& name : aggregate_header()) cols.push_back(t.column(name));
  std::vector<AggregateRow> rows;
  for (const auto& f : t.rows) {
    AggregateRow a;
    a.n = static_cast<std::uint32_t>(parse_u64(f[cols[0]]));
    a.budget = parse_u64(f[cols[1]]);
    a.trials = parse_u64(f[cols[2]]);
    a.successes = parse_u64(f[cols[3]]);
    a.success_rate = parse_double(f[cols[4]]);
    a.mean_cost = parse_double(f[cols[5]]);
    a.median_cost = parse_double(f[cols[6]]);
    a.main_loop_trials = parse_u64(f[cols[7]]);
    a.mean_T = parse_double(f[cols[8]]);
    a.band_low = parse_double(f[cols[9]]);
    a.band_high = parse_double(f[cols[10]]);
    a.band_steps = parse_u64(f[cols[11]]);
    a.mean_rho = parse_double(f[cols[12]]);
    rows.push_back(a);
  }
  return rows;
}

VerifyReport verify_outputs(const std::filesystem::path& dir) {
  std::ifstream summary_in(dir / "summary.json");
  if (!summary_in) throw IoError("cannot read " + (dir / "summary.json").string());
  nlohmann::json summary;
  try {
    summary = nlohmann::json::parse(summary_in);
  } catch (const nlohmann::json::exception& e) {
    throw IoError(std::string("summary.json: ") + e.what());
  }
  const ExperimentConfig config = config_from_json(summary.at("config"));
  const auto trials = read_trials(dir / "trials.csv");
  std::vector<ClimbRow> climbs;
  if (std::filesystem::exists(dir / "climbs.csv")) {
    climbs = read_climbs(dir / "climbs.csv");
  }
  const auto stored = read_aggregates(dir / "aggregates.csv");
  const auto fresh = aggregate(config, trials, climbs);

  VerifyReport report;
  const auto mismatch = [&](const std::string& what) {
    report.ok = false;
    report.mismatches.push_back(what);
  };
  const auto same = [](double a, double b) {
    return (std::isnan(a) && std::isnan(b)) || a == b;
  };
  if (stored.size() != fresh.size()) {
    mismatch("aggregates.csv has " + std::to_string(stored.size()) +
             " rows, recomputation gives " + std::to_string(fresh.size()));
    return report;
  }
  for (std::size_t k = 0; k < stored.size(); ++k) {
    const AggregateRow& s = stored[k];
    const AggregateRow& f = fresh[k];
    const std::string at = "n=" + std::to_string(f.n) + ": ";
    if (s.n != f.n) mismatch(at + "n");
    if (s.budget != f.budget) mismatch(at + "budget");
    if (s.trials != f.trials) mismatch(at + "trials");
    if (s.successes != f.successes) mismatch(at + "successes");
    if (!same(s.success_rate, f.success_rate)) mismatch(at + "success_rate");
    if (!same(s.mean_cost, f.mean_cost)) mismatch(at + "mean_cost");
    if (!same(s.median_cost, f.median_cost)) mismatch(at + "median_cost");
    if (s.main_loop_trials != f.main_loop_trials) {
      mismatch(at + "main_loop_trials");
    }
    if (!same(s.mean_T, f.mean_T)) mismatch(at + "mean_T");
    if (!same(s.band_low, f.band_low)) mismatch(at + "band_low");
    if (!same(s.band_high, f.band_high)) mismatch(at + "band_high");
    if (s.band_steps != f.band_steps) mismatch(at + "band_steps");
    if (!same(s.mean_rho, f.mean_rho)) mismatch(at + "mean_rho");
  }
  for (const TrialRow& r : trials) {
    if (r.m != config.m || r.algorithm != config.algorithm) {
      mismatch("trial row with seed " + std::to_string(r.seed) +
               " disagrees with the stored config");
      break;
    }
  }
  return report;
}

std::string_view to_string(Predictor predictor) {
  switch (predictor) {
    case Predictor::kLogN:
      return "log";
    case Predictor::kLog35N:
      return "log3.5";
    case Predictor::kLog4N:
      return "log4";
  }
  return "unknown";
}

Predictor predictor_from_string(std::string_view name) {
  if (name == "log") return Predictor::kLogN;
  if (name == "log3.5") return Predictor::kLog35N;
  if (name == "log4") return Predictor::kLog4N;
  throw ParameterError("unknown predictor '" + std::string(name) + "'");
}

double predictor_value(Predictor predictor, std::uint32_t n) {
  const double log_n = std::log(static_cast<double>(n));
  switch (predictor) {
    case Predictor::kLogN:
      return log_n;
    case Predictor::kLog35N:
      return std::pow(log_n, 3.5);
    case Predictor::kLog4N:
      return std::pow(log_n, 4.0);
  }
  throw ParameterError("unknown predictor");
}

ScalingFit fit_scaling(std::span<const AggregateRow> aggregates,
                       Predictor predictor, std::string_view column) {
  if (aggregates.size() < 3) {
    throw InsufficientDataError("scaling fit needs at least three rungs");
  }
  ScalingFit fit;
  fit.predictor = predictor;
  fit.column = std::string(column);
  for (const auto& a : aggregates) {
    double y = 0.0;
    if (column == "mean_T") {
      y = a.mean_T;
    } else if (column == "mean_cost") {
      y = a.mean_cost;
    } else if (column == "median_cost") {
      y = a.median_cost;
    } else {
      throw ParameterError("cannot fit column '" + std::string(column) + "'");
    }
    if (!std::isfinite(y)) {
      throw InsufficientDataError("column " + fit.column +
                                  " is undefined at n=" + std::to_string(a.n));
    }
    fit.x.push_back(predictor_value(predictor, a.n));
    fit.y.push_back(y);
  }
  fit.fit = stats::least_squares(fit.x, fit.y);
  return fit;
}

EquivalenceReport compare_constructions(Construction first,
                                        Construction second, std::uint32_t n,
                                        std::uint32_t m, std::uint32_t trials,
                                        std::uint64_t seed) {
  if (n == 0 || m == 0) throw ParameterError("need n >= 1 and m >= 1");
  if (n > 1000) throw RangeError("generator comparison needs n <= 1000");
  if (trials < 2000) {
    throw PrecisionError("generator comparison needs >= 2000 trials", 2000);
  }
  EquivalenceReport report;
  report.first = first;
  report.second = second;
  report.n = n;
  report.m = m;
  report.trials = trials;

  std::vector<double> first_degree[2];
  std::map<std::uint32_t, std::uint64_t> histogram[2];
  std::vector<std::uint32_t> pooled;
  const Construction kinds[2] = {first, second};
  for (int c = 0; c < 2; ++c) {
    for (std::uint32_t t = 0; t < trials; ++t) {
      const PAGraph g = generate(
          kinds[c], n, m,
          derive_seed(seed, StreamDomain::kCompare, 2ULL * t + c));
      first_degree[c].push_back(g.degree(1));
      for (std::uint32_t d : g.degrees()) {
        ++histogram[c][d];
        pooled.push_back(d);
      }
    }
  }
  report.ks = stats::ks_two_sample(first_degree[0], first_degree[1]);

  const std::size_t rank = static_cast<std::size_t>(
      std::ceil(0.99 * static_cast<double>(pooled.size()))) - 1;
  std::nth_element(pooled.begin(), pooled.begin() + rank, pooled.end());
  report.histogram_cutoff = pooled[rank];
  std::vector<std::uint64_t> bins[2];
  for (int c = 0; c < 2; ++c) {
    bins[c].assign(report.histogram_cutoff - m + 1, 0);
    for (const auto& [d, count] : histogram[c]) {
      const std::uint32_t bin = std::min(d, report.histogram_cutoff) - m;
      bins[c][bin] += count;
    }
  }
  report.chi_square = stats::chi_square_homogeneity(bins[0], bins[1]);
  return report;
}

nlohmann::json to_json(const EquivalenceReport& r) {
  return {{"chi_square",
           {{"df", r.chi_square.degrees_of_freedom},
            {"p_value", r.chi_square.p_value},
            {"statistic", r.chi_square.statistic}}},
          {"first", to_string(r.first)},
          {"histogram_cutoff", r.histogram_cutoff},
          {"ks",
           {{"p_value", r.ks.p_value}, {"statistic", r.ks.statistic}}},
          {"m", r.m},
          {"n", r.n},
          {"second", to_string(r.second)},
          {"trials", r.trials}};
}

nlohmann::json to_json(const ScalingFit& f) {
  return {{"column", f.column},
          {"intercept", f.fit.intercept},
          {"predictor", to_string(f.predictor)},
          {"r_squared", f.fit.r_squared},
          {"slope", f.fit.slope},
          {"x", f.x},
          {"y", f.y}};
}

}  // namespace pafind
