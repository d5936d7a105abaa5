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

#include <gtest/gtest.h>

#include "brkmin/bench.hpp"

using namespace brkmin;
using namespace brkmin::bench;

namespace {

ExperimentConfig small_config() {
  ExperimentConfig cfg;
  cfg.team_sizes = {4, 6};
  cfg.instances_per_size = 3;
  cfg.master_seed = 21;
  SolverSpec sa{SolverKind::Anneal, {}};
  sa.anneal.reads = 100;
  SolverSpec local{SolverKind::Local, {}};
  local.anneal.reads = 50;
  cfg.solvers = {sa, local};
  return cfg;
}

}  // namespace

TEST(Config, Validation) {
  ExperimentConfig cfg = small_config();
  EXPECT_NO_THROW(cfg.validate());
  cfg.solvers.clear();
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  EXPECT_NO_THROW(cfg.validate(false));
  cfg = small_config();
  cfg.team_sizes = {5};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.instances_per_size = 0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = small_config();
  cfg.budget_seconds = 0.0;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Experiment1, FourTeamsAreSolvedOptimally) {
  ExperimentConfig cfg = small_config();
  cfg.team_sizes = {4};
  cfg.instances_per_size = 5;
  const Experiment1 out = run_experiment1(cfg);
  ASSERT_EQ(out.rows.size(), 1u);
  const ResultRow& row = out.rows.front();
  EXPECT_EQ(row.lower_bound, 6u);
  ASSERT_TRUE(row.oracle_breaks.has_value());
  EXPECT_DOUBLE_EQ(*row.oracle_breaks, 6.0);
  for (const auto& col : row.solvers) {
    EXPECT_DOUBLE_EQ(col.mean_breaks, 6.0);
    ASSERT_TRUE(col.optimal_fraction.has_value());
    EXPECT_DOUBLE_EQ(*col.optimal_fraction, 1.0);
  }
}

TEST(Experiment1, RowsPerSizeAndBreaksAboveOracle) {
  const Experiment1 out = run_experiment1(small_config());
  ASSERT_EQ(out.rows.size(), 2u);
  EXPECT_EQ(out.instances.size(), 2u * 3u * 2u);
  for (const auto& rec : out.instances) {
    ASSERT_TRUE(rec.breaks.has_value());
    ASSERT_TRUE(rec.oracle.has_value());
    EXPECT_GE(*rec.breaks, *rec.oracle);
    EXPECT_GE(*rec.oracle, lower_bound(TournamentKind::MDRRT, rec.teams));
  }
}

TEST(Experiment1, TablesAreReproducible) {
  const auto a = experiment1_csv(run_experiment1(small_config()).rows, false);
  const auto b = experiment1_csv(run_experiment1(small_config()).rows, false);
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.substr(0, 33), "teams,lower_bound,oracle_breaks,s");
}

TEST(Experiment1, LargeSizesSkipTheOracle) {
  ExperimentConfig cfg = small_config();
  cfg.team_sizes = {10};
  cfg.instances_per_size = 1;
  const Experiment1 out = run_experiment1(cfg);
  EXPECT_FALSE(out.rows.front().oracle_breaks.has_value());
  EXPECT_FALSE(out.rows.front().solvers.front().optimal_fraction.has_value());
}

TEST(Experiment2, LocalSearchCatchesExhaustiveOnFourTeams) {
  ExperimentConfig cfg = small_config();
  cfg.team_sizes = {4};
  cfg.instances_per_size = 5;
  cfg.budget_seconds = 10.0;
  const auto rows = run_experiment2(cfg, SolverSpec{SolverKind::Exhaustive, {}}, SolverSpec{SolverKind::Local, {}});
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_DOUBLE_EQ(rows.front().reference_breaks, 6.0);
  EXPECT_EQ(rows.front().reached, 5u);
}

TEST(Experiment2, OneRowPerSize) {
  ExperimentConfig cfg = small_config();
  cfg.team_sizes = {4, 6, 8};
  cfg.instances_per_size = 1;
  cfg.budget_seconds = 5.0;
  SolverSpec sa{SolverKind::Anneal, {}};
  sa.anneal.reads = 20;
  EXPECT_EQ(run_experiment2(cfg, sa, sa).size(), 3u);
}

TEST(Survey, NodesEdgesAndQubits) {
  ExperimentConfig cfg = small_config();
  cfg.team_sizes = {4, 8};
  cfg.instances_per_size = 2;
  const auto rows = run_embedding_survey(cfg, pegasus_graph(16));
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_DOUBLE_EQ(rows[0].nodes, 6.0);
  EXPECT_DOUBLE_EQ(rows[0].edges, 12.0);
  for (const auto& r : rows) {
    EXPECT_DOUBLE_EQ(r.edges, 2.0 * r.nodes);
    EXPECT_EQ(r.embedded, 2u);
    ASSERT_TRUE(r.qubits_per_node.has_value());
    EXPECT_GE(*r.qubits_per_node, 1.0);
  }
  EXPECT_EQ(survey_csv(rows).substr(0, 35), "Teams,Nodes,Edges,Qubits,Qubits/Nod");
}

TEST(Survey, DoubleRoundRobinNodeCount) {
  ExperimentConfig cfg = small_config();
  cfg.kind = TournamentKind::DRRT;
  cfg.team_sizes = {28};
  cfg.instances_per_size = 1;
  const BreakModel m = build_qubo(random_timetable(cfg.kind, 28, cfg.instance_seed(28, 0)));
  EXPECT_EQ(m.qubo.num_vars, 378u);
}
