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

// Quadratic binary models for break minimization.
//
// A double round robin is decomposed into pair blocks: the four cells
// (t, s), (t, s'), (t', s), (t', s') played by teams t < t' at their first
// and second meeting s < s'. All four home bits of a block follow from one
// binary z_k:
//
//   y(t, s) = z_k      y(t', s) = 1 - z_k
//   y(t, s') = 1 - z_k  y(t', s') = z_k
//
// so the home/away constraints vanish and the break count becomes an
// unconstrained quadratic in z.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brkmin/schedule.hpp"

namespace brkmin {

using Bits = std::vector<std::uint8_t>;

/// energy(x) = offset + sum_i linear[i] x_i + sum_{i<j} quadratic[(i,j)] x_i x_j
struct Qubo {
  std::size_t num_vars = 0;
  std::vector<double> linear;
  std::map<std::pair<std::size_t, std::size_t>, double> quadratic;
  double offset = 0.0;

  Qubo() = default;
  explicit Qubo(std::size_t n) : num_vars(n), linear(n, 0.0) {}

  void add_linear(std::size_t i, double value) {
    check_index(i);
    linear[i] += value;
  }

  /// Accumulates; a diagonal term folds into the linear part since x*x = x.
  void add_quadratic(std::size_t i, std::size_t j, double value) {
    check_index(i);
    check_index(j);
    if (i == j) {
      linear[i] += value;
      return;
    }
    if (i > j) std::swap(i, j);
    quadratic[{i, j}] += value;
  }

  double quadratic_at(std::size_t i, std::size_t j) const {
    if (i > j) std::swap(i, j);
    auto it = quadratic.find({i, j});
    return it == quadratic.end() ? 0.0 : it->second;
  }

  /// Drops quadratic entries whose accumulated coefficient is exactly zero.
  void prune() { std::erase_if(quadratic, [](const auto& kv) { return kv.second == 0.0; }); }

  double evaluate(std::span<const std::uint8_t> x) const {
    if (x.size() != num_vars) throw std::invalid_argument("state length does not match variable count");
    double e = offset;
    for (std::size_t i = 0; i < num_vars; ++i)
      if (x[i]) e += linear[i];
    for (const auto& [key, v] : quadratic)
      if (x[key.first] && x[key.second]) e += v;
    return e;
  }

  friend bool operator==(const Qubo&, const Qubo&) = default;

 private:
  void check_index(std::size_t i) const {
    if (i >= num_vars) throw std::out_of_range("variable index " + std::to_string(i) + " out of range");
  }
};

/// energy(s) = offset + sum_i biases[i] s_i + sum_{i<j} couplings[(i,j)] s_i s_j, s in {-1,+1}.
struct IsingModel {
  std::size_t num_spins = 0;
  std::vector<double> biases;
  std::map<std::pair<std::size_t, std::size_t>, double> couplings;
  double offset = 0.0;

  double evaluate(std::span<const int> spins) const {
    if (spins.size() != num_spins) throw std::invalid_argument("spin vector length does not match model");
    double e = offset;
    for (std::size_t i = 0; i < num_spins; ++i) e += biases[i] * spins[i];
    for (const auto& [key, v] : couplings) e += v * spins[key.first] * spins[key.second];
    return e;
  }
};

/// Substitutes x = (s + 1) / 2 exactly.
inline IsingModel qubo_to_ising(const Qubo& q) {
  IsingModel m;
  m.num_spins = q.num_vars;
  m.biases.assign(q.num_vars, 0.0);
  m.offset = q.offset;
  for (std::size_t i = 0; i < q.num_vars; ++i) {
    m.biases[i] += q.linear[i] / 2.0;
    m.offset += q.linear[i] / 2.0;
  }
  for (const auto& [key, v] : q.quadratic) {
    m.couplings[key] += v / 4.0;
    m.biases[key.first] += v / 4.0;
    m.biases[key.second] += v / 4.0;
    m.offset += v / 4.0;
  }
  return m;
}

inline std::vector<int> bits_to_spins(std::span<const std::uint8_t> x) {
  std::vector<int> s(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) s[i] = x[i] ? 1 : -1;
  return s;
}

/// One pair block. Teams and slots are 0-based.
struct PairIndex {
  std::size_t k = 0;
  std::size_t team = 0;         // t_k
  std::size_t other_team = 0;   // t'_k, with team < other_team
  std::size_t first_slot = 0;   // s_k
  std::size_t second_slot = 0;  // s'_k, with first_slot < second_slot

  friend bool operator==(const PairIndex&, const PairIndex&) = default;
};

/// A home bit expressed through z: y = z_var when positive, 1 - z_var otherwise.
struct Literal {
  std::size_t var = 0;
  bool positive = true;

  friend bool operator==(const Literal&, const Literal&) = default;
};

class VariableMap {
 public:
  VariableMap() = default;
  VariableMap(Timetable tt, std::vector<PairIndex> pairs) : timetable_(std::move(tt)), pairs_(std::move(pairs)) {
    const std::size_t slots = timetable_.num_slots();
    cells_.assign(timetable_.num_teams() * slots, Literal{});
    std::vector<std::uint8_t> seen(cells_.size(), 0);
    auto place = [&](std::size_t t, std::size_t s, Literal lit) {
      const std::size_t idx = t * slots + s;
      if (seen[idx]) throw std::logic_error("pair blocks overlap at " + detail::cell_name(t, s));
      seen[idx] = 1;
      cells_[idx] = lit;
    };
    for (const auto& p : pairs_) {
      place(p.team, p.first_slot, {p.k, true});
      place(p.other_team, p.first_slot, {p.k, false});
      place(p.team, p.second_slot, {p.k, false});
      place(p.other_team, p.second_slot, {p.k, true});
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
      throw std::logic_error("pair blocks do not cover every cell");
  }

  const Timetable& timetable() const noexcept { return timetable_; }
  const std::vector<PairIndex>& pairs() const noexcept { return pairs_; }
  std::size_t num_vars() const noexcept { return pairs_.size(); }
  Literal cell(std::size_t team, std::size_t slot) const { return cells_[team * timetable_.num_slots() + slot]; }

 private:
  Timetable timetable_;
  std::vector<PairIndex> pairs_;
  std::vector<Literal> cells_;
};

/// Pair blocks ordered lexicographically by (t_k, t'_k).
inline VariableMap build_pairs(const Timetable& tt) {
  if (tt.kind() == TournamentKind::RRT)
    throw std::invalid_argument("build_pairs: a single round robin has one meeting per pair");
  require_valid(tt, tt.kind(), "build_pairs");
  const std::size_t teams = tt.num_teams();
  const auto meetings = meeting_slots(tt);
  std::vector<PairIndex> pairs;
  pairs.reserve(teams * (teams - 1) / 2);
  for (std::size_t a = 0; a < teams; ++a)
    for (std::size_t b = a + 1; b < teams; ++b) {
      const auto& slots = meetings[a * teams + b];
      pairs.push_back({pairs.size(), a, b, slots[0], slots[1]});
    }
  return VariableMap(tt, std::move(pairs));
}

struct BreakModel {
  Qubo qubo;
  VariableMap vars;
};

/// Adds the quadratic expansion of [y_a == y_b] for two literals over distinct variables.
inline void add_equal_indicator(Qubo& q, Literal a, Literal b) {
  if (a.positive == b.positive) {
    // z z' + (1 - z)(1 - z') = 1 - z - z' + 2 z z'
    q.offset += 1.0;
    q.add_linear(a.var, -1.0);
    q.add_linear(b.var, -1.0);
    q.add_quadratic(a.var, b.var, 2.0);
  } else {
    // z (1 - z') + (1 - z) z' = z + z' - 2 z z'
    q.add_linear(a.var, 1.0);
    q.add_linear(b.var, 1.0);
    q.add_quadratic(a.var, b.var, -2.0);
  }
}

/// Break count as an unconstrained model over the pair variables.
inline BreakModel build_qubo(const Timetable& tt) {
  VariableMap vm = build_pairs(tt);
  Qubo q(vm.num_vars());
  for (std::size_t t = 0; t < tt.num_teams(); ++t)
    for (std::size_t s = 0; s + 1 < tt.num_slots(); ++s) {
      const Literal here = vm.cell(t, s);
      const Literal next = vm.cell(t, s + 1);
      // Same block on adjacent slots: the two bits are z and 1 - z, never a break.
      if (here.var == next.var) continue;
      add_equal_indicator(q, here, next);
    }
  q.prune();
  return {std::move(q), std::move(vm)};
}

inline HAAssignment decode(std::span<const std::uint8_t> z, const VariableMap& vm) {
  if (z.size() != vm.num_vars()) throw std::invalid_argument("decode: state length does not match variable count");
  const Timetable& tt = vm.timetable();
  std::vector<std::uint8_t> home(tt.num_teams() * tt.num_slots());
  for (std::size_t t = 0; t < tt.num_teams(); ++t)
    for (std::size_t s = 0; s < tt.num_slots(); ++s) {
      const Literal lit = vm.cell(t, s);
      const bool bit = z[lit.var] != 0;
      home[t * tt.num_slots() + s] = (lit.positive ? bit : !bit) ? 1 : 0;
    }
  return HAAssignment(tt, std::move(home));
}

/// Reads z_k = a(t_k, s_k). Inverse of decode on valid assignments.
inline Bits encode(const HAAssignment& ha, const VariableMap& vm) {
  Bits z(vm.num_vars());
  for (const auto& p : vm.pairs()) z[p.k] = ha.home(p.team, p.first_slot) ? 1 : 0;
  return z;
}

struct SourceGraph {
  std::size_t num_nodes = 0;
  std::vector<std::pair<std::size_t, std::size_t>> edges;

  std::vector<std::vector<std::size_t>> adjacency() const {
    std::vector<std::vector<std::size_t>> adj(num_nodes);
    for (auto [u, v] : edges) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
    return adj;
  }
};

inline SourceGraph source_graph(const Qubo& q) {
  SourceGraph g;
  g.num_nodes = q.num_vars;
  for (const auto& [key, v] : q.quadratic)
    if (v != 0.0) g.edges.push_back(key);
  return g;
}

struct DegreeStats {
  std::size_t min_degree = 0;
  std::size_t max_degree = 0;
  bool is_regular = true;
};

inline DegreeStats degree_stats(const SourceGraph& g) {
  if (g.num_nodes == 0) return {};
  std::vector<std::size_t> deg(g.num_nodes, 0);
  for (auto [u, v] : g.edges) {
    ++deg[u];
    ++deg[v];
  }
  const auto [lo, hi] = std::minmax_element(deg.begin(), deg.end());
  return {*lo, *hi, *lo == *hi};
}

}  // namespace brkmin
