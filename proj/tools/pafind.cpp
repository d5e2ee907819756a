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

#include <cmath>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "pafind/analysis.hpp"
#include "pafind/csv.hpp"
#include "pafind/errors.hpp"
#include "pafind/generator.hpp"
#include "pafind/graph_io.hpp"
#include "pafind/harness.hpp"
#include "pafind/oracle.hpp"
#include "pafind/search.hpp"

namespace {

using namespace pafind;

constexpr int kOk = 0;
constexpr int kError = 1;
constexpr int kCheckFailed = 2;

struct Common {
  std::uint64_t seed = 1;
  std::string out;
  std::string format = "json";
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--seed", c.seed, "Master seed")->capture_default_str();
  cmd->add_option("--out", c.out, "Output path");
  cmd->add_option("--format", c.format, "Report format")
      ->check(CLI::IsMember({"csv", "json"}))
      ->capture_default_str();
}

// Prints a flat key/value report as a one-row CSV or a JSON object.
void emit(const Common& c, const nlohmann::json& report) {
  if (c.format == "json") {
    std::cout << report.dump(2) << '\n';
    return;
  }
  csv::Writer w(std::cout);
  for (const auto& [key, _] : report.items()) w.field(key);
  w.end_row();
  for (const auto& [_, value] : report.items()) {
    w.field(value.is_string() ? value.get<std::string>() : value.dump());
  }
  w.end_row();
}

struct GraphSource {
  std::string graph_file;
  std::uint32_t n = 1000;
  std::uint32_t m = 4;
  std::string construction = "sequential";
};

void add_graph_source(CLI::App* cmd, GraphSource& g, bool allow_file) {
  cmd->add_option("-n,--n", g.n, "Vertex count")->capture_default_str();
  cmd->add_option("-m,--m", g.m, "Edges per vertex")->capture_default_str();
  cmd->add_option("--construction", g.construction,
                  "sequential, continuous or uniform")
      ->capture_default_str();
  if (allow_file) {
    cmd->add_option("--graph", g.graph_file,
                    "Read the graph from a file instead of generating it");
  }
}

struct DcaFlags {
  std::optional<double> omega;
  std::optional<double> start;
  std::optional<double> stop;
  std::optional<double> walk;
  std::optional<std::size_t> branch_width;
  std::optional<std::uint64_t> warmup;
};

void add_dca_flags(CLI::App* cmd, DcaFlags& d) {
  cmd->add_option("--omega", d.omega, "DCA omega");
  cmd->add_option("--start-threshold", d.start, "Phase 1 degree threshold");
  cmd->add_option("--climb-stop", d.stop, "Phase 2 stopping degree");
  cmd->add_option("--walk-threshold", d.walk, "Phase 3 degree threshold");
  cmd->add_option("--branch-width", d.branch_width, "Phase 2 branch width");
  cmd->add_option("--warmup", d.warmup, "Phase 1 warm-up steps");
}

DcaOverrides overrides(const DcaFlags& d) {
  return {d.omega, d.start, d.stop, d.walk, d.branch_width, d.warmup};
}

int run_generate(const Common& c, const GraphSource& g,
                 const std::string& edge_list, const std::string& xi_file) {
  const Construction kind = construction_from_string(g.construction);
  PAGraph graph;
  if (kind == Construction::kContinuous) {
    auto sample = generate_continuous(g.n, g.m, c.seed);
    if (!xi_file.empty()) save_xi(xi_file, sample.realization);
    graph = std::move(sample.graph);
  } else {
    graph = generate(kind, g.n, g.m, c.seed);
  }
  if (!c.out.empty()) save_graph(c.out, graph);
  if (!edge_list.empty()) {
    std::ofstream out(edge_list);
    if (!out) throw IoError("cannot write " + edge_list);
    write_edge_list(out, graph);
  }
  emit(c, {{"construction", to_string(graph.construction())},
           {"edges", graph.edge_count()},
           {"max_degree", graph.max_degree()},
           {"m", graph.m()},
           {"n", graph.n()},
           {"seed", graph.seed()}});
  return kOk;
}

int run_search_cmd(const Common& c, const GraphSource& g,
                   const std::string& algorithm, std::optional<std::uint64_t> budget,
                   const DcaFlags& d, bool audit, bool resolve) {
  PAGraph graph = g.graph_file.empty()
                      ? generate(construction_from_string(g.construction), g.n,
                                 g.m, derive_seed(c.seed, StreamDomain::kGraph, 0))
                      : load_graph(g.graph_file);
  ExperimentConfig config;
  config.n_ladder = {graph.n()};
  config.m = graph.m();
  config.algorithm = algorithm_from_string(algorithm);
  config.budget = budget;
  config.dca = overrides(d);
  config.audit = audit;
  const std::uint64_t handle_seed =
      derive_seed(c.seed, StreamDomain::kHandleSeed, 0);
  const SearchTrace trace = run_search(
      graph, config, handle_seed, derive_seed(c.seed, StreamDomain::kSearch, 0));
  const LocalOracle oracle(graph, handle_seed);
  IndexResolver resolver;
  if (resolve) resolver = [&](Handle h) { return oracle.resolve(h); };
  if (c.out.empty()) {
    write_trace(std::cout, trace, resolver);
  } else {
    std::ofstream out(c.out);
    if (!out) throw IoError("cannot write " + c.out);
    write_trace(out, trace, resolver);
  }
  nlohmann::json summary = {{"algorithm", to_string(trace.algorithm)},
                            {"budget", trace.budget},
                            {"fallback_count", trace.fallback_steps},
                            {"phase1_steps", trace.phase1_steps},
                            {"phase3_steps", trace.phase3_steps},
                            {"success", trace.success},
                            {"T", trace.main_loop_length()},
                            {"total_cost", trace.total_cost}};
  if (!c.out.empty()) emit(c, summary);
  else std::cerr << summary.dump() << '\n';
  return kOk;
}

int run_experiment_cmd(const Common& c, ExperimentConfig config,
                       const std::string& construction,
                       const std::string& algorithm, const DcaFlags& d,
                       const std::vector<std::string>& formats) {
  config.construction = construction_from_string(construction);
  config.algorithm = algorithm_from_string(algorithm);
  config.base_seed = c.seed;
  config.dca = overrides(d);
  config.output = c.out;
  if (!formats.empty()) {
    config.write_csv = false;
    config.write_json = false;
    for (const auto& f : formats) {
      if (f == "csv") config.write_csv = true;
      if (f == "json") config.write_json = true;
    }
  }
  const ExperimentResult result = run_experiment(config);
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& a : result.aggregates) {
    rows.push_back({{"n", a.n},
                    {"success_rate", a.success_rate},
                    {"mean_cost", a.mean_cost},
                    {"mean_T", std::isfinite(a.mean_T) ? nlohmann::json(a.mean_T)
                                                      : nlohmann::json()}});
  }
  std::cout << rows.dump(2) << '\n';
  return kOk;
}

struct ValidateFlags {
  std::string check = "interval";
  std::uint64_t trials = 1000000;
  std::uint32_t i = 10;
  std::uint32_t j = 20;
  double tolerance = 0.1;
  std::uint32_t low = 10;
  std::uint32_t high = 1000;
};

int run_validate(const Common& c, const GraphSource& g, const ValidateFlags& v) {
  const double omega = analysis::default_omega(g.n);
  nlohmann::json report;
  bool pass = true;
  const auto save_csv = [&](const auto& r) {
    if (c.out.empty()) return;
    std::ofstream out(c.out);
    if (!out) throw IoError("cannot write " + c.out);
    analysis::write_csv(out, r);
  };
  if (v.check == "degree") {
    const auto sample = generate_continuous(g.n, g.m, c.seed);
    std::vector<VertexId> indices;
    for (VertexId i = v.low; i <= std::min(v.high, g.n); ++i) indices.push_back(i);
    const auto r = analysis::check_degree_concentration(
        sample.graph, sample.realization, indices, omega);
    report = analysis::to_json(r);
    pass = !r.rows.empty() && r.median_error <= v.tolerance;
    save_csv(r);
  } else if (v.check == "interval") {
    const auto sample = generate_continuous(g.n, g.m, c.seed);
    const auto r = analysis::check_interval_concentration(sample.realization,
                                                          v.low);
    report = analysis::to_json(r);
    pass = r.max_W_error <= v.tolerance && r.telescoping_error <= 1e-9 &&
           r.eta_identity_error <= 1e-9;
    save_csv(r);
  } else if (v.check == "tail") {
    const analysis::TailBoundGrid grid{{2, 5, 10, 20},
                                       {0.25, 0.5, 0.75},
                                       {0.25, 0.5},
                                       {2.0, 3.0}};
    const auto r = analysis::check_tail_bounds(grid, v.trials, c.seed);
    report = analysis::to_json(r);
    pass = r.all_satisfied();
    save_csv(r);
  } else if (v.check == "edge") {
    const auto r = analysis::check_edge_probability(g.n, g.m, v.i, v.j,
                                                    v.trials, c.seed, omega);
    report = analysis::to_json(r);
    pass = r.ratio >= 1.0 / (1.0 + v.tolerance) && r.ratio <= 1.0 + v.tolerance;
    save_csv(r);
  } else if (v.check == "small-eta") {
    const auto sample = generate_continuous(g.n, g.m, c.seed);
    const auto lowest = static_cast<VertexId>(
        std::ceil(std::pow(clamped_log(g.n), 3.0)));
    std::vector<VertexId> checkpoints;
    for (double x = lowest; x <= g.n; x *= 2.0) {
      checkpoints.push_back(static_cast<VertexId>(x));
    }
    checkpoints.push_back(g.n);
    const auto r = analysis::check_small_eta_mass(sample.realization, checkpoints);
    report = analysis::to_json(r);
    pass = r.max_ratio <= v.tolerance;
    save_csv(r);
  } else if (v.check == "max-degree") {
    std::vector<analysis::MaxDegreeRow> rows;
    for (std::uint64_t t = 0; t < v.trials; ++t) {
      rows.push_back(analysis::max_degree_row(
          generate(construction_from_string(g.construction), g.n, g.m,
                   derive_seed(c.seed, StreamDomain::kGraph, t))));
    }
    const auto r = analysis::max_degree_scaling(rows);
    report = analysis::to_json(r);
    for (const auto& row : r.rows) {
      pass = pass && row.ratio >= 0.1 && row.ratio <= 10.0 * clamped_log(row.n);
    }
    save_csv(r);
  } else {
    throw ParameterError("unknown check '" + v.check + "'");
  }
  report["check"] = v.check;
  report["pass"] = pass;
  report["seed"] = c.seed;
  std::cout << report.dump(2) << '\n';
  return pass ? kOk : kCheckFailed;
}

int run_compare(const Common& c, const GraphSource& g, std::uint32_t trials,
                const std::string& against) {
  const Construction second = construction_from_string(against);
  const auto r = compare_constructions(Construction::kSequential, second, g.n,
                                       g.m, trials, c.seed);
  nlohmann::json report = to_json(r);
  const bool same_model = second != Construction::kUniformControl;
  const bool pass = same_model
                        ? r.ks.p_value > 1e-3 && r.chi_square.p_value > 1e-3
                        : r.ks.p_value < 1e-6;
  report["pass"] = pass;
  if (c.format == "json") {
    std::cout << report.dump(2) << '\n';
  } else {
    csv::Writer w(std::cout);
    w.row({"test", "statistic", "p_value"});
    w.field("ks").field(r.ks.statistic).field(r.ks.p_value).end_row();
    w.field("chi_square").field(r.chi_square.statistic)
        .field(r.chi_square.p_value).end_row();
  }
  return pass ? kOk : kCheckFailed;
}

int run_verify(const Common& c) {
  if (c.out.empty()) throw ParameterError("verify needs --out DIR");
  const VerifyReport r = verify_outputs(c.out);
  nlohmann::json report = {{"ok", r.ok}, {"mismatches", r.mismatches}};
  std::cout << report.dump(2) << '\n';
  return r.ok ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Preferential attachment graphs and local search for vertex 1"};
  app.require_subcommand(1);

  Common gen_common, search_common, exp_common, val_common, cmp_common,
      ver_common;
  GraphSource gen_graph, search_graph, val_graph, cmp_graph;

  auto* gen = app.add_subcommand("generate", "Write a graph file");
  add_common(gen, gen_common);
  add_graph_source(gen, gen_graph, false);
  std::string edge_list, xi_file;
  gen->add_option("--edge-list", edge_list, "Also write a plain edge list");
  gen->add_option("--xi", xi_file, "Write the xi side file (continuous only)");

  auto* search = app.add_subcommand("search", "Run one search and print its trace");
  add_common(search, search_common);
  add_graph_source(search, search_graph, true);
  std::string search_algorithm = "dca";
  std::optional<std::uint64_t> search_budget;
  DcaFlags search_dca;
  bool search_audit = false;
  bool search_resolve = false;
  search->add_option("--algorithm", search_algorithm,
                     "dca, dca_no_phase1, bbckl or walk")
      ->capture_default_str();
  search->add_option("--budget", search_budget, "Query budget");
  add_dca_flags(search, search_dca);
  search->add_flag("--audit", search_audit, "Audit locality");
  search->add_flag("--resolve", search_resolve,
                   "Add true vertex indices to the trace");

  auto* exp = app.add_subcommand("experiment", "Run a batch of seeded trials");
  exp->add_option("--seed", exp_common.seed, "Master seed")
      ->capture_default_str();
  exp->add_option("--out", exp_common.out, "Output directory");
  ExperimentConfig exp_config;
  std::string exp_construction = "sequential", exp_algorithm = "dca";
  std::vector<std::string> exp_formats;
  DcaFlags exp_dca;
  exp->add_option("--n-ladder", exp_config.n_ladder, "Graph sizes")
      ->required();
  exp->add_option("-m,--m", exp_config.m, "Edges per vertex")
      ->capture_default_str();
  exp->add_option("--construction", exp_construction)->capture_default_str();
  exp->add_option("--algorithm", exp_algorithm)->capture_default_str();
  exp->add_option("--trials", exp_config.trials)->capture_default_str();
  exp->add_option("--budget-constant", exp_config.budget_constant)
      ->capture_default_str();
  exp->add_option("--budget", exp_config.budget, "Fixed budget for every rung");
  exp->add_option("--workers", exp_config.workers)->capture_default_str();
  exp->add_option("--band-low", exp_config.band_low);
  exp->add_option("--band-high", exp_config.band_high);
  exp->add_flag("--fixed-graph", exp_config.fixed_graph,
                "Share one graph per rung");
  exp->add_flag("--audit", exp_config.audit, "Audit locality of every trace");
  exp->add_option("--format", exp_formats, "csv and/or json (default both)")
      ->check(CLI::IsMember({"csv", "json"}));
  add_dca_flags(exp, exp_dca);

  auto* val = app.add_subcommand("validate", "Run an analysis check");
  add_common(val, val_common);
  add_graph_source(val, val_graph, false);
  ValidateFlags vflags;
  val->add_option("--check", vflags.check,
                  "degree, interval, tail, edge, small-eta or max-degree")
      ->capture_default_str();
  val->add_option("--trials", vflags.trials)->capture_default_str();
  val->add_option("--i", vflags.i)->capture_default_str();
  val->add_option("--j", vflags.j)->capture_default_str();
  val->add_option("--tolerance", vflags.tolerance)->capture_default_str();
  val->add_option("--low", vflags.low, "Smallest index examined")
      ->capture_default_str();
  val->add_option("--high", vflags.high, "Largest index examined")
      ->capture_default_str();

  auto* cmp = app.add_subcommand("compare", "Test two constructions for equality");
  add_common(cmp, cmp_common);
  add_graph_source(cmp, cmp_graph, false);
  std::uint32_t cmp_trials = 2000;
  std::string cmp_against = "continuous";
  cmp->add_option("--trials", cmp_trials)->capture_default_str();
  cmp->add_option("--against", cmp_against,
                  "continuous, sequential or uniform")
      ->capture_default_str();

  auto* ver = app.add_subcommand("verify", "Recompute aggregates of an experiment");
  add_common(ver, ver_common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return run_generate(gen_common, gen_graph, edge_list, xi_file);
    if (*search) {
      return run_search_cmd(search_common, search_graph, search_algorithm,
                            search_budget, search_dca, search_audit,
                            search_resolve);
    }
    if (*exp) {
      return run_experiment_cmd(exp_common, exp_config, exp_construction,
                                exp_algorithm, exp_dca, exp_formats);
    }
    if (*val) return run_validate(val_common, val_graph, vflags);
    if (*cmp) return run_compare(cmp_common, cmp_graph, cmp_trials, cmp_against);
    if (*ver) return run_verify(ver_common);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
