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

// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Runtime limits are part of each criterion and are checked here.

#include <chrono>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "brkmin/brkmin.hpp"
#include "oracles.hpp"

using namespace brkmin;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  const char* title;
  double limit_seconds;  // 0 = no limit
  std::function<Outcome()> check;
};

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

Outcome four_team_optimum() {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const BreakModel m = build_qubo(random_mdrrt(4, derive_seed(1, {4, seed})));
    const auto r = exhaustive_solve(m.qubo);
    const std::size_t breaks = count_breaks(decode(r.best_states.front(), m.vars));
    if (r.best_energy != 6.0 || breaks != 6) return {false, fmt("instance %.0f optimum %.0f", seed, r.best_energy)};
  }
  return {true, "optimum 6 on 5/5 instances"};
}

Outcome energy_break_equivalence() {
  std::size_t states = 0;
  for (std::size_t teams : {4u, 6u}) {
    const BreakModel m = build_qubo(random_mdrrt(teams, 7));
    const std::size_t n = m.qubo.num_vars;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
      const Bits z = oracle::bits_of(mask, n);
      const HAAssignment ha = decode(z, m.vars);
      if (m.qubo.evaluate(z) != static_cast<double>(count_breaks(ha)))
        return {false, fmt("mismatch at %.0f teams, state %.0f", teams, static_cast<double>(mask))};
      ++states;
    }
  }
  return {true, fmt("%.0f states agree exactly", static_cast<double>(states))};
}

Outcome regularity() {
  for (std::size_t teams = 4; teams <= 48; teams += 4) {
    const SourceGraph g = source_graph(build_qubo(random_mdrrt(teams, derive_seed(3, {teams}))).qubo);
    const std::size_t n = teams / 2;
    const DegreeStats d = degree_stats(g);
    if (g.num_nodes != n * (2 * n - 1) || g.edges.size() != 2 * n * (2 * n - 1) || !d.is_regular || d.max_degree != 4)
      return {false, fmt("%.0f teams: %.0f nodes, %.0f edges", teams, g.num_nodes, g.edges.size())};
  }
  return {true, "4..48 teams 4-regular, 48 teams -> 1128 nodes / 2256 edges"};
}

Outcome degree_bound() {
  std::size_t worst = 0;
  for (std::size_t teams = 4; teams <= 28; teams += 2)
    for (std::uint64_t seed = 0; seed < 20; ++seed)
      worst = std::max(worst, degree_stats(source_graph(build_qubo(random_drrt(teams, derive_seed(4, {teams, seed}))).qubo)).max_degree);
  return {worst <= 8, fmt("largest degree over 260 instances: %.0f", static_cast<double>(worst))};
}

Outcome lower_bound_held() {
  std::string detail;
  bool pass = true;
  for (std::size_t teams : {4u, 6u, 8u}) {
    double sum = 0.0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const double opt = exhaustive_solve(build_qubo(random_mdrrt(teams, derive_seed(5, {teams, seed}))).qubo, 1).best_energy;
      pass = pass && opt >= static_cast<double>(lower_bound(TournamentKind::MDRRT, teams));
      sum += opt;
    }
    detail += fmt("%.0f teams mean %.1f (bound %.0f); ", teams, sum / 5.0,
                  static_cast<double>(lower_bound(TournamentKind::MDRRT, teams)));
  }
  return {pass, detail};
}

Outcome anneal_quality() {
  std::string detail;
  bool pass = true;
  for (std::size_t teams : {4u, 6u, 8u}) {
    std::size_t hits = 0;
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const Qubo q = build_qubo(random_mdrrt(teams, derive_seed(6, {teams, seed}))).qubo;
      AnnealConfig cfg;
      cfg.reads = 1000;
      cfg.seed = seed;
      hits += simulated_annealing(q, cfg).best().energy == exhaustive_solve(q, 1).best_energy;
    }
    pass = pass && hits >= (teams == 8 ? 4u : 5u);
    detail += fmt("%.0f teams %.0f/5; ", teams, static_cast<double>(hits));
  }
  return {pass, detail};
}

Outcome ising_equivalence() {
  double worst = 0.0;
  for (std::uint64_t trial = 0; trial < 100; ++trial) {
    const Qubo q = oracle::random_qubo(10, derive_seed(7, {trial}));
    const IsingModel m = qubo_to_ising(q);
    for (std::uint64_t mask = 0; mask < 1024; ++mask) {
      const Bits x = oracle::bits_of(mask, 10);
      worst = std::max(worst, std::abs(m.evaluate(bits_to_spins(x)) - q.evaluate(x)));
    }
  }
  return {worst <= 1e-9, fmt("largest difference %.3g", worst)};
}

Outcome penalty_feasibility() {
  const std::size_t expected[] = {0, 0, 2, 6, 24};
  for (std::size_t n : {2u, 3u, 4u}) {
    const Qubo q = permutation_qubo(n);
    std::size_t zeros = 0;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << (n * n)); ++m) zeros += q.evaluate(oracle::bits_of(m, n * n)) == 0.0;
    if (zeros != expected[n] || oracle::count_permutation_matrices(n) != expected[n])
      return {false, fmt("n=%.0f: %.0f zero-energy states", n, zeros)};
  }
  std::size_t monotone_seeds = 0;
  std::string curve;
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    double prev = 2.0;
    bool monotone = true;
    for (std::size_t n = 2; n <= 6; ++n) {
      const double p = feasibility_experiment(n, 1000, weak_sampler(seed)).per_feasible;
      monotone = monotone && p <= prev;
      prev = p;
      if (seed == 1) curve += fmt("%.3f ", p);
    }
    monotone_seeds += monotone;
  }
  return {monotone_seeds >= 3,
          "counts 2/6/24; non-increasing on " + std::to_string(monotone_seeds) + "/5 seeds; seed 1: " + curve};
}

Outcome embedding_validity() {
  const HardwareGraph hw = pegasus_graph(16);
  std::string detail;
  for (std::size_t teams = 4; teams <= 12; teams += 2) {
    const SourceGraph g = source_graph(build_qubo(random_mdrrt(teams, derive_seed(9, {teams}))).qubo);
    const auto emb = find_embedding(g, hw, derive_seed(9, {teams, 1}));
    if (!emb || !verify_embedding(g, hw, *emb).ok()) return {false, fmt("%.0f teams did not embed", teams)};
    const double per_node = embedding_stats(g, *emb).qubits_per_node;
    if (per_node < 1.0) return {false, "qubits/nodes below 1"};
    detail += fmt("%.0f:%.2f ", teams, per_node);
  }
  SourceGraph k4;
  k4.num_nodes = 4;
  k4.edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
  const HardwareGraph c4 = HardwareGraph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
  if (find_embedding(k4, c4, 1).has_value()) return {false, "K4 embedded into C4"};
  return {true, "qubits/nodes " + detail + "; K4 into C4 rejected"};
}

Outcome reproducibility() {
  bench::ExperimentConfig cfg;
  cfg.team_sizes = {4, 6, 8};
  cfg.instances_per_size = 2;
  cfg.master_seed = 2024;
  SolverSpec sa{SolverKind::Anneal, {}};
  sa.anneal.reads = 200;
  SolverSpec local{SolverKind::Local, {}};
  local.anneal.reads = 100;
  cfg.solvers = {sa, local};
  const std::string a = bench::experiment1_csv(bench::run_experiment1(cfg).rows, false);
  const std::string b = bench::experiment1_csv(bench::run_experiment1(cfg).rows, false);
  return {a == b, a == b ? "identical tables" : "tables differ"};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "exact optimum at 4 teams", 1.0, four_team_optimum},
      {2, "energy equals break count at 4 and 6 teams", 10.0, energy_break_equivalence},
      {3, "mirrored source graphs are 4-regular", 5.0, regularity},
      {4, "double round robin degree at most 8", 10.0, degree_bound},
      {5, "exhaustive optima respect 6n-6", 600.0, lower_bound_held},
      {6, "annealer reaches the optimum", 120.0, anneal_quality},
      {7, "Ising conversion preserves energies", 0.0, ising_equivalence},
      {8, "penalty feasibility counts and decay", 0.0, penalty_feasibility},
      {9, "embedding into pegasus(16)", 120.0, embedding_validity},
      {10, "experiment tables reproduce", 0.0, reproducibility},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.check();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0.0 && secs > c.limit_seconds) {
      o.pass = false;
      o.detail += fmt(" [over time limit %.0f s]", c.limit_seconds);
    }
    std::printf("%s criterion %d: %s (%.2f s) %s\n", o.pass ? "PASS" : "FAIL", c.id, c.title, secs, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.pass;
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
