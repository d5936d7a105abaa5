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

// Classical samplers over Qubo models.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "brkmin/qubo.hpp"
#include "brkmin/report.hpp"
#include "brkmin/rng.hpp"

namespace brkmin {

inline double energy(const Qubo& q, std::span<const std::uint8_t> x) { return q.evaluate(x); }

/// Compressed adjacency of a Qubo, for O(degree) flip updates.
class FlipModel {
 public:
  struct Neighbor {
    std::size_t var;
    double weight;
  };

  explicit FlipModel(const Qubo& q) : offset_(q.offset), linear_(q.linear), start_(q.num_vars + 1, 0) {
    for (const auto& [key, v] : q.quadratic) {
      ++start_[key.first + 1];
      ++start_[key.second + 1];
    }
    for (std::size_t i = 0; i < q.num_vars; ++i) start_[i + 1] += start_[i];
    neighbors_.resize(start_.back());
    std::vector<std::size_t> fill(start_.begin(), start_.end() - 1);
    for (const auto& [key, v] : q.quadratic) {
      neighbors_[fill[key.first]++] = {key.second, v};
      neighbors_[fill[key.second]++] = {key.first, v};
    }
  }

  std::size_t size() const noexcept { return linear_.size(); }
  double offset() const noexcept { return offset_; }

  std::span<const Neighbor> neighbors(std::size_t i) const {
    return {neighbors_.data() + start_[i], start_[i + 1] - start_[i]};
  }

  /// field[i] = linear[i] + sum_j Q_ij x_j, so flipping i changes the energy by (1 - 2 x_i) field[i].
  std::vector<double> fields(std::span<const std::uint8_t> x) const {
    std::vector<double> f(linear_);
    for (std::size_t i = 0; i < size(); ++i)
      if (x[i])
        for (const auto& nb : neighbors(i)) f[nb.var] += nb.weight;
    return f;
  }

  double flip_delta(std::span<const std::uint8_t> x, std::span<const double> field, std::size_t i) const {
    return x[i] ? -field[i] : field[i];
  }

  /// Flips x[i] and keeps fields consistent.
  void flip(std::span<std::uint8_t> x, std::span<double> field, std::size_t i) const {
    x[i] ^= 1;
    const double sign = x[i] ? 1.0 : -1.0;
    for (const auto& nb : neighbors(i)) field[nb.var] += sign * nb.weight;
  }

 private:
  double offset_;
  std::vector<double> linear_;
  std::vector<std::size_t> start_;
  std::vector<Neighbor> neighbors_;
};

struct ExhaustiveResult {
  std::vector<Bits> best_states;
  double best_energy = 0.0;
  std::uint64_t optimum_count = 0;  // may exceed best_states.size() when capped
};

inline constexpr std::size_t kExhaustiveMaxVars = 30;

/// Global minimum by Gray-code enumeration. States within `tolerance` of the
/// optimum count as optimal; at most `state_cap` of them are kept.
inline ExhaustiveResult exhaustive_solve(const Qubo& q, std::size_t state_cap = 64, double tolerance = 1e-9) {
  if (q.num_vars > kExhaustiveMaxVars)
    throw InfeasibleOperation("exhaustive search is capped at " + std::to_string(kExhaustiveMaxVars) +
                              " variables, model has " + std::to_string(q.num_vars));
  const FlipModel model(q);
  const std::size_t n = q.num_vars;
  Bits x(n, 0);
  std::vector<double> field = model.fields(x);
  double e = q.offset;
  double best = e;
  std::vector<std::uint32_t> masks{0};
  std::uint64_t count = 1;

  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t step = 1; step < total; ++step) {
    const auto i = static_cast<std::size_t>(std::countr_zero(step));
    e += model.flip_delta(x, field, i);
    model.flip(x, field, i);
    if (e < best - tolerance) {
      best = e;
      masks.clear();
      count = 0;
    }
    if (e <= best + tolerance) {
      ++count;
      if (masks.size() < state_cap) masks.push_back(static_cast<std::uint32_t>(step ^ (step >> 1)));
    }
  }

  ExhaustiveResult result;
  result.best_energy = best;
  result.optimum_count = count;
  for (auto m : masks) {
    Bits s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = (m >> i) & 1U;
    result.best_states.push_back(std::move(s));
  }
  std::sort(result.best_states.begin(), result.best_states.end());
  // Re-evaluate the reported optimum exactly; the running sum can drift for
  // non-integral coefficients.
  result.best_energy = q.evaluate(result.best_states.front());
  return result;
}

struct SampleRecord {
  Bits state;
  double energy = 0.0;
  std::size_t occurrences = 0;

  friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

struct SampleSet {
  std::vector<SampleRecord> records;  // ascending by energy, then state
  std::string solver;
  std::uint64_t seed = 0;
  std::string parameters;
  double wall_seconds = 0.0;

  bool empty() const noexcept { return records.empty(); }
  const SampleRecord& best() const { return records.front(); }
  std::size_t total_reads() const {
    std::size_t n = 0;
    for (const auto& r : records) n += r.occurrences;
    return n;
  }
};

/// Collapses raw reads into records, re-evaluating energies from scratch.
inline std::vector<SampleRecord> aggregate(const Qubo& q, const std::vector<Bits>& reads) {
  std::map<Bits, std::size_t> counts;
  for (const auto& r : reads) ++counts[r];
  std::vector<SampleRecord> records;
  records.reserve(counts.size());
  for (const auto& [state, n] : counts) records.push_back({state, q.evaluate(state), n});
  std::stable_sort(records.begin(), records.end(),
                   [](const SampleRecord& a, const SampleRecord& b) { return a.energy < b.energy; });
  return records;
}

struct AnnealConfig {
  std::size_t reads = 1000;
  std::size_t sweeps = 100;
  double beta_start = 0.1;
  double beta_end = 10.0;
  std::uint64_t seed = 0;
  /// Finish each read with strict-descent single flips at zero temperature.
  bool greedy_finish = true;

  void validate() const {
    if (reads < 1) throw std::invalid_argument("anneal: reads must be >= 1");
    if (sweeps < 1) throw std::invalid_argument("anneal: sweeps must be >= 1");
    if (!(beta_start > 0.0) || !(beta_start < beta_end))
      throw std::invalid_argument("anneal: need 0 < beta_start < beta_end");
  }

  std::string summary() const {
    std::ostringstream os;
    os << "reads=" << reads << " sweeps=" << sweeps << " beta=" << beta_start << ".." << beta_end
       << " schedule=geometric greedy_finish=" << (greedy_finish ? "yes" : "no");
    return os.str();
  }
};

namespace detail {

/// Repeated strict-descent passes in index order until no flip improves.
inline void greedy_descend(const FlipModel& model, std::span<std::uint8_t> x, std::span<double> field) {
  bool improved = true;
  while (improved) {
    improved = false;
    for (std::size_t i = 0; i < model.size(); ++i)
      if (model.flip_delta(x, field, i) < 0.0) {
        model.flip(x, field, i);
        improved = true;
      }
  }
}

inline Bits random_bits(Rng& rng, std::size_t n) {
  Bits x(n);
  for (auto& b : x) b = rng.coin() ? 1 : 0;
  return x;
}

inline double elapsed_seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since).count();
}

}  // namespace detail

/// One annealing read: random start, `sweeps` in-order Metropolis passes with
/// beta interpolated geometrically from beta_start to beta_end.
inline Bits anneal_read(const FlipModel& model, const AnnealConfig& cfg, std::uint64_t read_seed) {
  Rng rng(read_seed);
  Bits x = detail::random_bits(rng, model.size());
  std::vector<double> field = model.fields(x);
  const double ratio = cfg.beta_end / cfg.beta_start;
  for (std::size_t sweep = 0; sweep < cfg.sweeps; ++sweep) {
    const double frac = cfg.sweeps == 1 ? 1.0 : static_cast<double>(sweep) / static_cast<double>(cfg.sweeps - 1);
    const double beta = cfg.beta_start * std::pow(ratio, frac);
    for (std::size_t i = 0; i < model.size(); ++i) {
      const double delta = model.flip_delta(x, field, i);
      if (delta <= 0.0 || rng.uniform01() < std::exp(-beta * delta)) model.flip(x, field, i);
    }
  }
  if (cfg.greedy_finish) detail::greedy_descend(model, x, field);
  return x;
}

/// Reads are independent; read r draws from Rng(derive_seed(seed, {r})).
inline SampleSet simulated_annealing(const Qubo& q, const AnnealConfig& cfg) {
  cfg.validate();
  const auto t0 = std::chrono::steady_clock::now();
  const FlipModel model(q);
  std::vector<Bits> reads;
  reads.reserve(cfg.reads);
  for (std::size_t r = 0; r < cfg.reads; ++r) reads.push_back(anneal_read(model, cfg, derive_seed(cfg.seed, {r})));
  SampleSet out;
  out.records = aggregate(q, reads);
  out.solver = "sa";
  out.seed = cfg.seed;
  out.parameters = cfg.summary();
  out.wall_seconds = detail::elapsed_seconds(t0);
  return out;
}

struct LocalResult {
  Bits state;
  double energy = 0.0;
};

/// Steepest descent over single flips; ties go to the lowest index. Stops
/// when no flip strictly lowers the energy.
inline LocalResult local_search(const Qubo& q, Bits start) {
  if (start.size() != q.num_vars) throw std::invalid_argument("local_search: state length does not match model");
  const FlipModel model(q);
  std::vector<double> field = model.fields(start);
  for (;;) {
    double best_delta = 0.0;
    std::size_t best_var = model.size();
    for (std::size_t i = 0; i < model.size(); ++i) {
      const double d = model.flip_delta(start, field, i);
      if (d < best_delta) {
        best_delta = d;
        best_var = i;
      }
    }
    if (best_var == model.size()) break;
    model.flip(start, field, best_var);
  }
  const double e = q.evaluate(start);
  return {std::move(start), e};
}

/// `starts` independent local searches from random states.
inline SampleSet local_search_multistart(const Qubo& q, std::size_t starts, std::uint64_t seed) {
  if (starts < 1) throw std::invalid_argument("local_search: need at least one start");
  const auto t0 = std::chrono::steady_clock::now();
  std::vector<Bits> reads;
  reads.reserve(starts);
  for (std::size_t r = 0; r < starts; ++r) {
    Rng rng(derive_seed(seed, {r}));
    reads.push_back(local_search(q, detail::random_bits(rng, q.num_vars)).state);
  }
  SampleSet out;
  out.records = aggregate(q, reads);
  out.solver = "local";
  out.seed = seed;
  out.parameters = "starts=" + std::to_string(starts);
  out.wall_seconds = detail::elapsed_seconds(t0);
  return out;
}

enum class SolverKind { Exhaustive, Anneal, Local };

inline std::string to_string(SolverKind kind) {
  switch (kind) {
    case SolverKind::Exhaustive: return "exhaustive";
    case SolverKind::Anneal: return "sa";
    case SolverKind::Local: return "local";
  }
  return "?";
}

inline SolverKind parse_solver(const std::string& name) {
  if (name == "exhaustive") return SolverKind::Exhaustive;
  if (name == "sa") return SolverKind::Anneal;
  if (name == "local") return SolverKind::Local;
  throw std::invalid_argument("unknown solver: " + name);
}

/// A solver with its parameters. `reads` is the SA read count or the number of
/// local-search starts.
struct SolverSpec {
  SolverKind kind = SolverKind::Anneal;
  AnnealConfig anneal;

  std::string name() const { return to_string(kind); }

  /// Runs at the configured effort with the given seed.
  SampleSet run(const Qubo& q, std::uint64_t seed) const { return run_with_effort(q, anneal.reads, seed); }

  /// `effort` replaces the read/start count; exhaustive ignores it.
  SampleSet run_with_effort(const Qubo& q, std::size_t effort, std::uint64_t seed) const {
    switch (kind) {
      case SolverKind::Exhaustive: {
        const auto t0 = std::chrono::steady_clock::now();
        auto res = exhaustive_solve(q, 1);
        SampleSet out;
        out.records.push_back({res.best_states.front(), res.best_energy, 1});
        out.solver = "exhaustive";
        out.seed = seed;
        out.wall_seconds = detail::elapsed_seconds(t0);
        return out;
      }
      case SolverKind::Anneal: {
        AnnealConfig cfg = anneal;
        cfg.reads = effort;
        cfg.seed = seed;
        return simulated_annealing(q, cfg);
      }
      case SolverKind::Local: return local_search_multistart(q, effort, seed);
    }
    throw std::logic_error("unreachable solver kind");
  }
};

struct TracePoint {
  double elapsed_seconds = 0.0;
  double best_energy = 0.0;
};

struct TimeToTarget {
  bool reached = false;
  double elapsed_seconds = 0.0;
  std::vector<TracePoint> trace;  // best_energy non-increasing
};

/// Runs the solver with effort 1, 2, 4, ... (capped at `max_effort`) and fresh
/// sub-seeds until the best energy seen is <= target or the budget is spent.
/// Attempts are not interrupted, so a run can overshoot the budget by one attempt.
inline TimeToTarget time_to_target(const Qubo& q, double target_energy, const SolverSpec& solver,
                                   double budget_seconds, std::uint64_t seed, std::size_t max_effort = 1024,
                                   double tolerance = 1e-9) {
  if (!(budget_seconds > 0.0)) throw std::invalid_argument("time_to_target: budget must be positive");
  const auto t0 = std::chrono::steady_clock::now();
  TimeToTarget out;
  double best = std::numeric_limits<double>::infinity();
  std::size_t effort = 1;
  for (std::uint64_t attempt = 0;; ++attempt) {
    const SampleSet s = solver.run_with_effort(q, effort, derive_seed(seed, {attempt}));
    best = std::min(best, s.best().energy);
    const double now = detail::elapsed_seconds(t0);
    out.trace.push_back({now, best});
    if (best <= target_energy + tolerance) {
      out.reached = true;
      out.elapsed_seconds = now;
      return out;
    }
    if (now >= budget_seconds) {
      out.elapsed_seconds = now;
      return out;
    }
    effort = std::min(effort * 2, max_effort);
  }
}

}  // namespace brkmin
