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

#pragma once

// Experiment harness: seeded instance generation, solver comparison,
// time-to-target chasing and embedding surveys, emitted as CSV tables.
//
// Seed fan-out from the master seed (derive_seed in rng.hpp):
//   instance timetable   derive_seed(master, {teams, instance})
//   solver run           derive_seed(master, {teams, instance, kSolverStream + solver_index})
//   embedding attempt    derive_seed(master, {teams, instance, kEmbedStream})
// Annealing reads then derive their own streams from the solver seed.

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "brkmin/embedding.hpp"
#include "brkmin/io.hpp"
#include "brkmin/qubo.hpp"
#include "brkmin/schedule.hpp"
#include "brkmin/solver.hpp"

namespace brkmin::bench {

inline constexpr std::uint64_t kSolverStream = 1000;
inline constexpr std::uint64_t kEmbedStream = 2000;
inline constexpr std::uint64_t kChaserStream = 3000;

struct ExperimentConfig {
  std::vector<std::size_t> team_sizes;
  std::size_t instances_per_size = 5;
  TournamentKind kind = TournamentKind::MDRRT;
  std::vector<SolverSpec> solvers;
  std::uint64_t master_seed = 0;
  double budget_seconds = 300.0;
  std::string output_path;

  void validate(bool needs_solvers = true) const {
    if (team_sizes.empty()) throw std::invalid_argument("experiment: no team sizes given");
    for (auto t : team_sizes) require_team_count(t);
    if (kind == TournamentKind::RRT) throw std::invalid_argument("experiment: kind must be MDRRT or DRRT");
    if (instances_per_size < 1) throw std::invalid_argument("experiment: instances must be >= 1");
    if (!(budget_seconds > 0.0)) throw std::invalid_argument("experiment: budget must be positive");
    if (needs_solvers && solvers.empty()) throw std::invalid_argument("experiment: no solvers configured");
    for (const auto& s : solvers) s.anneal.validate();
  }

  std::uint64_t instance_seed(std::size_t teams, std::size_t instance) const {
    return derive_seed(master_seed, {teams, instance});
  }
};

struct SolverColumn {
  std::string solver;
  double mean_breaks = 0.0;
  double mean_seconds = 0.0;
  std::optional<double> optimal_fraction;  // set when the exhaustive oracle ran
  std::size_t failures = 0;
};

struct ResultRow {
  std::size_t teams = 0;
  std::size_t lower_bound = 0;
  std::optional<double> oracle_breaks;  // mean exhaustive optimum
  std::vector<SolverColumn> solvers;
};

/// Per-instance outcome kept for auditing.
struct InstanceResult {
  std::size_t teams = 0;
  std::size_t instance = 0;
  std::string solver;
  std::optional<std::size_t> breaks;  // empty when the solver failed
  std::optional<std::size_t> oracle;
  double seconds = 0.0;
};

struct Experiment1 {
  std::vector<ResultRow> rows;
  std::vector<InstanceResult> instances;
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

/// Decodes a state and recounts its breaks through the schedule module; the
/// count must agree with the model energy.
inline std::size_t audited_breaks(const BreakModel& model, const Bits& state) {
  const HAAssignment ha = decode(state, model.vars);
  if (!validate_assignment(ha).ok()) throw std::logic_error("decoded assignment violates home/away rules");
  const std::size_t breaks = count_breaks(ha);
  if (static_cast<double>(breaks) != model.qubo.evaluate(state))
    throw std::logic_error("model energy disagrees with recounted breaks");
  return breaks;
}

inline std::string optional_cell(const std::optional<double>& v) { return v ? io::format_number(*v) : "-"; }

}  // namespace detail

inline Experiment1 run_experiment1(const ExperimentConfig& cfg) {
  cfg.validate();
  Experiment1 out;
  for (const auto teams : cfg.team_sizes) {
    ResultRow row;
    row.teams = teams;
    row.lower_bound = lower_bound(cfg.kind, teams);
    row.solvers.resize(cfg.solvers.size());
    std::vector<std::size_t> successes(cfg.solvers.size(), 0);
    std::vector<std::size_t> optimal_hits(cfg.solvers.size(), 0);
    double oracle_sum = 0.0;
    bool oracle_ran = true;

    for (std::size_t inst = 0; inst < cfg.instances_per_size; ++inst) {
      const BreakModel model = build_qubo(random_timetable(cfg.kind, teams, cfg.instance_seed(teams, inst)));
      std::optional<std::size_t> oracle;
      if (model.qubo.num_vars <= kExhaustiveMaxVars) {
        oracle = detail::audited_breaks(model, exhaustive_solve(model.qubo, 1).best_states.front());
        oracle_sum += static_cast<double>(*oracle);
      } else {
        oracle_ran = false;
      }

      for (std::size_t si = 0; si < cfg.solvers.size(); ++si) {
        const auto& spec = cfg.solvers[si];
        auto& col = row.solvers[si];
        col.solver = spec.name();
        InstanceResult rec{teams, inst, spec.name(), std::nullopt, oracle, 0.0};
        const auto t0 = std::chrono::steady_clock::now();
        try {
          const SampleSet s = spec.run(model.qubo, derive_seed(cfg.master_seed, {teams, inst, kSolverStream + si}));
          rec.breaks = detail::audited_breaks(model, s.best().state);
        } catch (const InfeasibleOperation&) {
          ++col.failures;
        }
        rec.seconds = detail::seconds_since(t0);
        if (rec.breaks) {
          if (oracle && *rec.breaks < *oracle) throw std::logic_error("solver beat the exhaustive optimum");
          ++successes[si];
          col.mean_breaks += static_cast<double>(*rec.breaks);
          col.mean_seconds += rec.seconds;
          if (oracle && *rec.breaks == *oracle) ++optimal_hits[si];
        }
        out.instances.push_back(rec);
      }
    }

    if (oracle_ran) row.oracle_breaks = oracle_sum / static_cast<double>(cfg.instances_per_size);
    for (std::size_t si = 0; si < cfg.solvers.size(); ++si) {
      auto& col = row.solvers[si];
      if (successes[si] > 0) {
        col.mean_breaks /= static_cast<double>(successes[si]);
        col.mean_seconds /= static_cast<double>(successes[si]);
      }
      if (oracle_ran) col.optimal_fraction = static_cast<double>(optimal_hits[si]) / static_cast<double>(cfg.instances_per_size);
    }
    out.rows.push_back(std::move(row));
  }
  std::sort(out.rows.begin(), out.rows.end(), [](const ResultRow& a, const ResultRow& b) { return a.teams < b.teams; });
  return out;
}

/// Wall-time columns are omitted when include_timing is false, which makes
/// the table byte-identical across runs with the same configuration.
inline std::string experiment1_csv(const std::vector<ResultRow>& rows, bool include_timing = true) {
  std::ostringstream os;
  os << "teams,lower_bound,oracle_breaks";
  if (!rows.empty())
    for (const auto& c : rows.front().solvers) {
      os << ',' << c.solver << "_breaks";
      if (include_timing) os << ',' << c.solver << "_time_s";
      os << ',' << c.solver << "_optimal," << c.solver << "_failures";
    }
  os << '\n';
  for (const auto& r : rows) {
    os << r.teams << ',' << r.lower_bound << ',' << detail::optional_cell(r.oracle_breaks);
    for (const auto& c : r.solvers) {
      os << ',' << io::format_number(c.mean_breaks);
      if (include_timing) os << ',' << io::format_seconds(c.mean_seconds);
      os << ',' << detail::optional_cell(c.optimal_fraction) << ',' << c.failures;
    }
    os << '\n';
  }
  os << "# means over instances per size; wall times depend on hardware and show shape only\n";
  return os.str();
}

struct Experiment2Row {
  std::size_t teams = 0;
  double reference_breaks = 0.0;
  double mean_time_to_target = 0.0;  // unreached instances count their full elapsed time
  std::size_t reached = 0;
  std::size_t instances = 0;
};

/// The reference solver fixes a target per instance; the chaser is timed
/// until it first matches it.
inline std::vector<Experiment2Row> run_experiment2(const ExperimentConfig& cfg, const SolverSpec& reference,
                                                   const SolverSpec& chaser) {
  cfg.validate(false);
  std::vector<Experiment2Row> rows;
  for (const auto teams : cfg.team_sizes) {
    Experiment2Row row;
    row.teams = teams;
    row.instances = cfg.instances_per_size;
    for (std::size_t inst = 0; inst < cfg.instances_per_size; ++inst) {
      const BreakModel model = build_qubo(random_timetable(cfg.kind, teams, cfg.instance_seed(teams, inst)));
      const SampleSet ref = reference.run(model.qubo, derive_seed(cfg.master_seed, {teams, inst, kSolverStream}));
      const double target = ref.best().energy;
      row.reference_breaks += static_cast<double>(detail::audited_breaks(model, ref.best().state));
      const TimeToTarget ttt = time_to_target(model.qubo, target, chaser, cfg.budget_seconds,
                                              derive_seed(cfg.master_seed, {teams, inst, kChaserStream}));
      if (ttt.reached) ++row.reached;
      row.mean_time_to_target += ttt.elapsed_seconds;
    }
    row.reference_breaks /= static_cast<double>(row.instances);
    row.mean_time_to_target /= static_cast<double>(row.instances);
    rows.push_back(row);
  }
  return rows;
}

inline std::string experiment2_csv(const std::vector<Experiment2Row>& rows, bool include_timing = true) {
  std::ostringstream os;
  os << "teams,reference_breaks";
  if (include_timing) os << ",mean_time_to_target_s";
  os << ",reached,instances\n";
  for (const auto& r : rows) {
    os << r.teams << ',' << io::format_number(r.reference_breaks);
    if (include_timing) os << ',' << io::format_seconds(r.mean_time_to_target);
    os << ',' << r.reached << ',' << r.instances << '\n';
  }
  os << "# time to reach the reference solver's energy; hardware-dependent, shape only\n";
  return os.str();
}

struct SurveyRow {
  std::size_t teams = 0;
  double nodes = 0.0;
  double edges = 0.0;
  std::optional<double> qubits;          // mean over successful embeddings
  std::optional<double> qubits_per_node;
  std::size_t max_chain_length = 0;
  std::size_t embedded = 0;
  std::size_t attempts = 0;
};

/// One embedding attempt per instance; nodes/edges/qubits are means over instances.
inline std::vector<SurveyRow> run_embedding_survey(const ExperimentConfig& cfg, const HardwareGraph& hw,
                                                   const EmbedOptions& opts = {}) {
  cfg.validate(false);
  std::vector<SurveyRow> rows;
  for (const auto teams : cfg.team_sizes) {
    SurveyRow row;
    row.teams = teams;
    row.attempts = cfg.instances_per_size;
    double qubit_sum = 0.0;
    double node_sum_embedded = 0.0;
    for (std::size_t inst = 0; inst < cfg.instances_per_size; ++inst) {
      const BreakModel model = build_qubo(random_timetable(cfg.kind, teams, cfg.instance_seed(teams, inst)));
      const SourceGraph g = source_graph(model.qubo);
      row.nodes += static_cast<double>(g.num_nodes);
      row.edges += static_cast<double>(g.edges.size());
      const auto emb = find_embedding(g, hw, derive_seed(cfg.master_seed, {teams, inst, kEmbedStream}), opts);
      if (!emb) continue;
      const EmbeddingStats st = embedding_stats(g, *emb);
      ++row.embedded;
      qubit_sum += static_cast<double>(st.qubits_used);
      node_sum_embedded += static_cast<double>(st.nodes);
      row.max_chain_length = std::max(row.max_chain_length, st.max_chain_length);
    }
    row.nodes /= static_cast<double>(row.attempts);
    row.edges /= static_cast<double>(row.attempts);
    if (row.embedded > 0) {
      row.qubits = qubit_sum / static_cast<double>(row.embedded);
      row.qubits_per_node = qubit_sum / node_sum_embedded;
    }
    rows.push_back(row);
  }
  return rows;
}

inline std::string survey_csv(const std::vector<SurveyRow>& rows) {
  std::ostringstream os;
  os << "Teams,Nodes,Edges,Qubits,Qubits/Nodes,MaxChain,Embedded\n";
  for (const auto& r : rows) {
    os << r.teams << ',' << io::format_number(r.nodes) << ',' << io::format_number(r.edges) << ','
       << detail::optional_cell(r.qubits) << ',';
    if (r.qubits_per_node) {
      char buf[32];
      std::snprintf(buf, sizeof buf, "%.6f", *r.qubits_per_node);
      os << buf;
    } else {
      os << '-';
    }
    os << ',' << r.max_chain_length << ',' << r.embedded << '/' << r.attempts << '\n';
  }
  return os.str();
}

}  // namespace brkmin::bench
