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

// Penalty encoding of the permutation-matrix constraints, used to measure how
// quickly feasibility collapses for a sampler when hard constraints are folded
// into the objective.
//
// Variable x_ij (i, j 1-based) lives at index (i - 1) * n + (j - 1).

#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>

#include "brkmin/qubo.hpp"
#include "brkmin/solver.hpp"

namespace brkmin {

constexpr std::size_t grid_index(std::size_t n, std::size_t row, std::size_t col) noexcept { return row * n + col; }

/// sum_i (1 - sum_j x_ij)^2 + sum_j (1 - sum_i x_ij)^2, expanded.
inline Qubo permutation_qubo(std::size_t n) {
  if (n < 2) throw std::invalid_argument("permutation_qubo: n must be at least 2");
  Qubo q(n * n);
  // (1 - sum_a x_a)^2 = 1 - sum_a x_a + 2 sum_{a<b} x_a x_b for binary x.
  auto add_group = [&](auto index_of) {
    q.offset += 1.0;
    for (std::size_t a = 0; a < n; ++a) {
      q.add_linear(index_of(a), -1.0);
      for (std::size_t b = a + 1; b < n; ++b) q.add_quadratic(index_of(a), index_of(b), 2.0);
    }
  };
  for (std::size_t i = 0; i < n; ++i) add_group([&](std::size_t j) { return grid_index(n, i, j); });
  for (std::size_t j = 0; j < n; ++j) add_group([&](std::size_t i) { return grid_index(n, i, j); });
  return q;
}

/// Rows and columns whose sum differs from 1.
inline std::size_t violated_constraints(std::span<const std::uint8_t> x, std::size_t n) {
  if (x.size() != n * n)
    throw std::invalid_argument("violated_constraints: expected " + std::to_string(n * n) + " bits");
  std::size_t violated = 0;
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t row = 0;
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
      row += x[grid_index(n, i, j)];
      col += x[grid_index(n, j, i)];
    }
    violated += (row != 1) + (col != 1);
  }
  return violated;
}

struct FeasibilityStats {
  std::size_t n = 0;
  double per_feasible = 0.0;
  double ev_break = 0.0;   // mean violated-constraint count
  double ev_energy = 0.0;  // mean penalty energy
};

/// Deliberately weak annealer: few sweeps, cold end kept warm, no greedy
/// finish. Strong settings find permutation matrices at every n tried here,
/// which hides the decay the study is about.
inline AnnealConfig weak_sampler(std::uint64_t seed = 0, std::size_t reads = 1000) {
  AnnealConfig cfg;
  cfg.reads = reads;
  cfg.sweeps = 4;
  cfg.beta_start = 0.1;
  cfg.beta_end = 2.0;
  cfg.greedy_finish = false;
  cfg.seed = seed;
  return cfg;
}

inline FeasibilityStats feasibility_experiment(std::size_t n, std::size_t reads, AnnealConfig cfg) {
  cfg.reads = reads;
  const Qubo q = permutation_qubo(n);
  const SampleSet samples = simulated_annealing(q, cfg);
  FeasibilityStats stats;
  stats.n = n;
  std::size_t total = 0;
  for (const auto& rec : samples.records) {
    const auto broken = violated_constraints(rec.state, n);
    total += rec.occurrences;
    if (broken == 0) stats.per_feasible += static_cast<double>(rec.occurrences);
    stats.ev_break += static_cast<double>(broken * rec.occurrences);
    stats.ev_energy += rec.energy * static_cast<double>(rec.occurrences);
  }
  const double denom = static_cast<double>(total);
  stats.per_feasible /= denom;
  stats.ev_break /= denom;
  stats.ev_energy /= denom;
  return stats;
}

}  // namespace brkmin
