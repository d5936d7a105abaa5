// Copyright 2026 The brkmin Authors
//
//    Licensed under the Apache License, Version 2.0 (the "License");
//    you may not use this file except in compliance with the License.
//    You may obtain a copy of the License at
//
//        http://www.apache.org/licenses/LICENSE-2.0
//
//    Unless required by applicable law or agreed to in writing, software
//    distributed under the License is distributed on an "AS IS" BASIS,
//    WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//    See the License for the specific language governing permissions and
//    limitations under the License.

// brkmin: command-line front end.
//
// Exit codes: 0 success, 1 usage or input error, 2 infeasible operation
// (exhaustive search over the cap, source graph that does not embed).

#include <cstdio>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "brkmin/brkmin.hpp"

using namespace brkmin;

namespace {

constexpr int kUsageError = 1;
constexpr int kInfeasible = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string teams = "4";
  std::string kind = "mdrrt";
  std::uint64_t seed = 0;
  std::size_t instances = 5;
  std::vector<std::string> solvers;
  std::size_t reads = 1000;
  std::size_t sweeps = 100;
  double budget_secs = 300.0;
  std::string target = "pegasus:16";
  std::string out;
  std::string format = "json";
  std::string input;
  std::string reference = "sa";
  std::size_t max_n = 6;
};

void emit(const Options& o, const std::string& text) {
  if (o.out.empty())
    std::cout << text;
  else
    io::write_file(o.out, text);
}

std::size_t parse_count(const std::string& text) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos)
    throw UsageError("expected a team count, got '" + text + "'");
  return std::stoul(text);
}

/// "4,8,12", "4-12" (every even size) or "4-48:4".
std::vector<std::size_t> parse_sizes(const std::string& spec) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(spec);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto dash = item.find('-');
    if (dash == std::string::npos) {
      sizes.push_back(parse_count(item));
      continue;
    }
    const auto colon = item.find(':', dash);
    const std::size_t lo = parse_count(item.substr(0, dash));
    const std::size_t hi = parse_count(item.substr(dash + 1, colon == std::string::npos ? std::string::npos : colon - dash - 1));
    const std::size_t step = colon == std::string::npos ? 2 : parse_count(item.substr(colon + 1));
    if (step == 0 || lo > hi) throw UsageError("bad size range '" + item + "'");
    for (std::size_t t = lo; t <= hi; t += step) sizes.push_back(t);
  }
  if (sizes.empty()) throw UsageError("no team sizes given");
  for (auto t : sizes) require_team_count(t);
  return sizes;
}

std::size_t single_size(const Options& o) {
  const auto sizes = parse_sizes(o.teams);
  if (sizes.size() != 1) throw UsageError("--teams takes a single size here");
  return sizes.front();
}

TournamentKind double_kind(const Options& o) {
  const TournamentKind k = parse_kind(o.kind);
  if (k == TournamentKind::RRT) throw UsageError("--kind must be mdrrt or drrt");
  return k;
}

SolverSpec solver_spec(const std::string& name, const Options& o) {
  SolverSpec s;
  s.kind = parse_solver(name);
  s.anneal.reads = o.reads;
  s.anneal.sweeps = o.sweeps;
  return s;
}

/// Reads a timetable file (.json or .csv) or generates one from the flags.
Timetable timetable_input(const Options& o) {
  if (o.input.empty()) return random_timetable(double_kind(o), single_size(o), o.seed);
  const std::string text = io::read_file(o.input);
  Timetable tt = o.input.ends_with(".csv") ? io::timetable_from_csv(text, double_kind(o))
                                           : io::timetable_from_json(nlohmann::json::parse(text));
  require_valid(tt, tt.kind(), "input");
  return tt;
}

/// A QUBO file, a timetable file, or a generated instance.
Qubo qubo_input(const Options& o) {
  if (!o.input.empty() && !o.input.ends_with(".json") && !o.input.ends_with(".csv")) return io::load_qubo(o.input);
  if (!o.input.empty() && o.input.ends_with(".json")) {
    const auto j = nlohmann::json::parse(io::read_file(o.input));
    if (j.contains("num_vars")) return io::qubo_from_json(j);
  }
  return build_qubo(timetable_input(o)).qubo;
}

int cmd_generate(const Options& o) {
  const Timetable tt = random_timetable(double_kind(o), single_size(o), o.seed);
  emit(o, o.format == "csv" ? io::timetable_csv(tt) : io::timetable_json(tt).dump(2) + "\n");
  return 0;
}

int cmd_build(const Options& o) {
  const BreakModel m = build_qubo(timetable_input(o));
  emit(o, o.format == "csv" ? io::qubo_text(m.qubo) : io::qubo_json(m.qubo).dump(2) + "\n");
  const DegreeStats d = degree_stats(source_graph(m.qubo));
  std::fprintf(stderr, "%zu variables, %zu couplings, degree %zu..%zu\n", m.qubo.num_vars, m.qubo.quadratic.size(),
               d.min_degree, d.max_degree);
  return 0;
}

int cmd_solve(const Options& o) {
  const Qubo q = qubo_input(o);
  const std::string name = o.solvers.empty() ? "sa" : o.solvers.front();
  const SampleSet s = solver_spec(name, o).run(q, o.seed);
  emit(o, o.format == "csv" ? io::sampleset_csv(s) : io::sampleset_json(s).dump(2) + "\n");
  std::fprintf(stderr, "best energy %s over %zu reads (%.3f s)\n", io::format_number(s.best().energy).c_str(),
               s.total_reads(), s.wall_seconds);
  return 0;
}

int cmd_embed(const Options& o) {
  const Qubo q = qubo_input(o);
  const SourceGraph g = source_graph(q);
  const HardwareGraph hw = parse_topology(o.target);
  const auto emb = find_embedding(g, hw, o.seed);
  if (!emb) throw InfeasibleOperation("no embedding found into " + hw.name());
  const EmbeddingStats st = embedding_stats(g, *emb);
  if (o.format == "csv") {
    const std::size_t teams = o.input.empty() ? single_size(o) : 0;
    emit(o, io::embedding_stats_header() +
                io::embedding_stats_row(teams, static_cast<double>(st.nodes), static_cast<double>(st.edges),
                                        static_cast<double>(st.qubits_used), st.qubits_per_node));
  } else {
    emit(o, io::embedding_json(*emb).dump() + "\n");
  }
  std::fprintf(stderr, "%zu nodes, %zu edges, %zu qubits, %.3f qubits/node, longest chain %zu\n", st.nodes, st.edges,
               st.qubits_used, st.qubits_per_node, st.max_chain_length);
  return 0;
}

int cmd_feasibility(const Options& o) {
  if (o.max_n < 2) throw UsageError("--max-n must be at least 2");
  std::vector<FeasibilityStats> rows;
  AnnealConfig cfg = weak_sampler(o.seed, o.reads);
  for (std::size_t n = 2; n <= o.max_n; ++n) rows.push_back(feasibility_experiment(n, o.reads, cfg));
  emit(o, io::feasibility_csv(rows));
  return 0;
}

bench::ExperimentConfig experiment_config(const Options& o) {
  bench::ExperimentConfig cfg;
  cfg.team_sizes = parse_sizes(o.teams);
  cfg.instances_per_size = o.instances;
  cfg.kind = double_kind(o);
  cfg.master_seed = o.seed;
  cfg.budget_seconds = o.budget_secs;
  cfg.output_path = o.out;
  for (const auto& name : o.solvers.empty() ? std::vector<std::string>{"sa"} : o.solvers)
    cfg.solvers.push_back(solver_spec(name, o));
  return cfg;
}

int cmd_bench(const std::string& which, const Options& o) {
  const bench::ExperimentConfig cfg = experiment_config(o);
  if (which == "exp1") {
    emit(o, bench::experiment1_csv(bench::run_experiment1(cfg).rows));
  } else if (which == "exp2") {
    const SolverSpec reference = solver_spec(o.reference, o);
    emit(o, bench::experiment2_csv(bench::run_experiment2(cfg, reference, cfg.solvers.front())));
  } else {
    emit(o, bench::survey_csv(bench::run_embedding_survey(cfg, parse_topology(o.target))));
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Break minimization for round-robin timetables"};
  app.require_subcommand(1);
  Options o;

  auto add_instance = [&](CLI::App* c) {
    c->add_option("--teams", o.teams, "Team count (even, >= 4)");
    c->add_option("--kind", o.kind, "Tournament kind")->check(CLI::IsMember({"mdrrt", "drrt"}, CLI::ignore_case));
    c->add_option("--seed", o.seed, "Seed");
  };
  auto add_output = [&](CLI::App* c) {
    c->add_option("--out", o.out, "Output path (default: stdout)");
    c->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv", "json"}));
  };
  auto add_solver = [&](CLI::App* c) {
    c->add_option("--reads", o.reads, "Annealing reads or local-search starts")->check(CLI::PositiveNumber);
    c->add_option("--sweeps", o.sweeps, "Annealing sweeps per read")->check(CLI::PositiveNumber);
  };
  const auto solver_names = CLI::IsMember({"exhaustive", "sa", "local"});

  auto* generate = app.add_subcommand("generate", "Write a random timetable");
  add_instance(generate);
  add_output(generate);

  auto* build = app.add_subcommand("build", "Build the break QUBO of a timetable");
  add_instance(build);
  add_output(build);
  build->add_option("input", o.input, "Timetable file (.json or .csv); generated from the flags if omitted");

  auto* solve = app.add_subcommand("solve", "Sample a QUBO");
  add_instance(solve);
  add_output(solve);
  add_solver(solve);
  solve->add_option("--solver", o.solvers, "Solver")->check(solver_names)->expected(1);
  solve->add_option("input", o.input, "QUBO or timetable file; generated from the flags if omitted");

  auto* embed = app.add_subcommand("embed", "Minor-embed the source graph of a QUBO");
  add_instance(embed);
  add_output(embed);
  embed->add_option("--target", o.target, "chimera:m,n,t or pegasus:m");
  embed->add_option("input", o.input, "QUBO or timetable file; generated from the flags if omitted");

  auto* feasibility = app.add_subcommand("feasibility", "Feasibility of the permutation penalty model");
  feasibility->add_option("--seed", o.seed, "Seed");
  feasibility->add_option("--reads", o.reads, "Samples per size")->check(CLI::PositiveNumber);
  feasibility->add_option("--max-n", o.max_n, "Largest matrix size");
  feasibility->add_option("--out", o.out, "Output path (default: stdout)");
  feasibility->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv"}));

  auto* bench_cmd = app.add_subcommand("bench", "Experiment tables");
  std::string which;
  bench_cmd->add_option("experiment", which, "exp1, exp2 or survey")
      ->required()
      ->check(CLI::IsMember({"exp1", "exp2", "survey"}));
  bench_cmd->add_option("--teams", o.teams, "Sizes: 4,8,12 or 4-12 or 4-48:4");
  bench_cmd->add_option("--kind", o.kind, "Tournament kind")->check(CLI::IsMember({"mdrrt", "drrt"}, CLI::ignore_case));
  bench_cmd->add_option("--seed", o.seed, "Master seed");
  bench_cmd->add_option("--instances", o.instances, "Instances per size")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--solver", o.solvers, "Solvers (repeatable; exp2 uses the first as chaser)")
      ->check(solver_names)
      ->delimiter(',');
  bench_cmd->add_option("--reference", o.reference, "exp2 reference solver")->check(solver_names);
  bench_cmd->add_option("--budget-secs", o.budget_secs, "exp2 budget per instance")->check(CLI::PositiveNumber);
  bench_cmd->add_option("--target", o.target, "survey topology");
  bench_cmd->add_option("--out", o.out, "Output path (default: stdout)");
  bench_cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"csv"}));
  add_solver(bench_cmd);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  try {
    if (*generate) return cmd_generate(o);
    if (*build) return cmd_build(o);
    if (*solve) return cmd_solve(o);
    if (*embed) return cmd_embed(o);
    if (*feasibility) return cmd_feasibility(o);
    if (*bench_cmd) return cmd_bench(which, o);
  } catch (const InfeasibleOperation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInfeasible;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsageError;
  }
  return kUsageError;
}
