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

// Hardware topologies and a chain-growth minor embedder.
//
// Chimera(m, n, t): node (i, j, u, k) -> ((i * n + j) * 2 + u) * t + k, for
// cell row i < m, cell column j < n, orientation u (0 vertical, 1 horizontal)
// and index k < t. Each cell is a K_{t,t}; vertical qubits couple to the same
// k in the cell below, horizontal ones to the same k in the cell to the right.
//
// Pegasus(m): node (u, w, k, z) -> z + (m - 1) * (k + 12 * (w + m * u)), for
// u in {0, 1}, w < m, k < 12, z < m - 1. All 24 m (m - 1) coordinates are
// kept (no fabric trimming). Geometrically, a vertical qubit (0, w, k, z) is
// the segment at column 12 w + k covering rows [12 z + a_k, 12 z + a_k + 12);
// a horizontal qubit (1, w, k, z) is the segment at row 12 w + k covering
// columns [12 z + b_k, 12 z + b_k + 12), with the standard shift tables
// a = {2,2,2,2,10,10,10,10,6,6,6,6} and b = {6,6,6,6,2,2,2,2,10,10,10,10}.
// Couplers:
//   internal  a vertical and a horizontal segment that cross (up to 12);
//   external  (u, w, k, z) -- (u, w, k, z + 1)                (up to 2);
//   odd       (u, w, 2j, z) -- (u, w, 2j + 1, z)              (1).

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "brkmin/qubo.hpp"
#include "brkmin/report.hpp"
#include "brkmin/rng.hpp"

namespace brkmin {

enum class Topology { Custom, Chimera, Pegasus };

class HardwareGraph {
 public:
  HardwareGraph() = default;

  static HardwareGraph from_edges(std::size_t num_nodes, const std::vector<std::pair<std::size_t, std::size_t>>& edges) {
    HardwareGraph g;
    g.adj_.resize(num_nodes);
    for (auto [u, v] : edges) g.connect(u, v);
    g.finish();
    return g;
  }

  Topology topology() const noexcept { return topology_; }
  const std::string& name() const noexcept { return name_; }
  std::size_t num_nodes() const noexcept { return adj_.size(); }
  std::size_t num_edges() const noexcept { return num_edges_; }
  const std::vector<std::size_t>& neighbors(std::size_t q) const { return adj_[q]; }
  bool adjacent(std::size_t a, std::size_t b) const {
    return std::binary_search(adj_[a].begin(), adj_[a].end(), b);
  }
  std::size_t max_degree() const {
    std::size_t d = 0;
    for (const auto& a : adj_) d = std::max(d, a.size());
    return d;
  }

  std::vector<std::pair<std::size_t, std::size_t>> edges() const {
    std::vector<std::pair<std::size_t, std::size_t>> out;
    for (std::size_t u = 0; u < adj_.size(); ++u)
      for (auto v : adj_[u])
        if (u < v) out.emplace_back(u, v);
    return out;
  }

  friend HardwareGraph chimera_graph(std::size_t m, std::size_t n, std::size_t t);
  friend HardwareGraph pegasus_graph(std::size_t m);

 private:
  void connect(std::size_t u, std::size_t v) {
    if (u >= adj_.size() || v >= adj_.size()) throw std::out_of_range("hardware edge endpoint out of range");
    if (u == v) throw std::invalid_argument("hardware graph cannot have self-loops");
    adj_[u].push_back(v);
    adj_[v].push_back(u);
  }

  void finish() {
    num_edges_ = 0;
    for (auto& a : adj_) {
      std::sort(a.begin(), a.end());
      a.erase(std::unique(a.begin(), a.end()), a.end());
      num_edges_ += a.size();
    }
    num_edges_ /= 2;
  }

  Topology topology_ = Topology::Custom;
  std::string name_ = "custom";
  std::vector<std::vector<std::size_t>> adj_;
  std::size_t num_edges_ = 0;
};

inline std::size_t chimera_index(std::size_t n, std::size_t t, std::size_t i, std::size_t j, std::size_t u,
                                 std::size_t k) {
  return ((i * n + j) * 2 + u) * t + k;
}

inline HardwareGraph chimera_graph(std::size_t m, std::size_t n, std::size_t t) {
  if (m < 1 || n < 1 || t < 1) throw std::invalid_argument("chimera dimensions must be positive");
  HardwareGraph g;
  g.topology_ = Topology::Chimera;
  g.name_ = "chimera:" + std::to_string(m) + "," + std::to_string(n) + "," + std::to_string(t);
  g.adj_.resize(2 * m * n * t);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t k = 0; k < t; ++k) {
        for (std::size_t kk = 0; kk < t; ++kk) g.connect(chimera_index(n, t, i, j, 0, k), chimera_index(n, t, i, j, 1, kk));
        if (i + 1 < m) g.connect(chimera_index(n, t, i, j, 0, k), chimera_index(n, t, i + 1, j, 0, k));
        if (j + 1 < n) g.connect(chimera_index(n, t, i, j, 1, k), chimera_index(n, t, i, j + 1, 1, k));
      }
  g.finish();
  return g;
}

inline constexpr std::array<std::size_t, 12> kPegasusVerticalShift{2, 2, 2, 2, 10, 10, 10, 10, 6, 6, 6, 6};
inline constexpr std::array<std::size_t, 12> kPegasusHorizontalShift{6, 6, 6, 6, 2, 2, 2, 2, 10, 10, 10, 10};

inline std::size_t pegasus_index(std::size_t m, std::size_t u, std::size_t w, std::size_t k, std::size_t z) {
  return z + (m - 1) * (k + 12 * (w + m * u));
}

inline HardwareGraph pegasus_graph(std::size_t m) {
  if (m < 2) throw std::invalid_argument("pegasus size must be at least 2");
  HardwareGraph g;
  g.topology_ = Topology::Pegasus;
  g.name_ = "pegasus:" + std::to_string(m);
  const std::size_t zs = m - 1;
  g.adj_.resize(24 * m * zs);
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t w = 0; w < m; ++w)
      for (std::size_t k = 0; k < 12; ++k)
        for (std::size_t z = 0; z < zs; ++z) {
          const std::size_t q = pegasus_index(m, u, w, k, z);
          if (z + 1 < zs) g.connect(q, pegasus_index(m, u, w, k, z + 1));
          if (k % 2 == 0) g.connect(q, pegasus_index(m, u, w, k + 1, z));
        }
  // Internal couplers, enumerated from the vertical side.
  for (std::size_t w = 0; w < m; ++w)
    for (std::size_t k = 0; k < 12; ++k)
      for (std::size_t z = 0; z < zs; ++z) {
        const std::size_t column = 12 * w + k;
        const std::size_t row0 = 12 * z + kPegasusVerticalShift[k];
        for (std::size_t row = row0; row < row0 + 12; ++row) {
          const std::size_t hw = row / 12;
          const std::size_t hk = row % 12;
          if (hw >= m || column < kPegasusHorizontalShift[hk]) continue;
          const std::size_t hz = (column - kPegasusHorizontalShift[hk]) / 12;
          if (hz >= zs) continue;
          g.connect(pegasus_index(m, 0, w, k, z), pegasus_index(m, 1, hw, hk, hz));
        }
      }
  g.finish();
  return g;
}

/// Parses "chimera:m,n,t" or "pegasus:m".
inline HardwareGraph parse_topology(const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos) throw std::invalid_argument("topology must look like chimera:m,n,t or pegasus:m");
  const std::string family = spec.substr(0, colon);
  std::vector<std::size_t> dims;
  std::size_t pos = colon + 1;
  while (pos <= spec.size()) {
    const auto comma = spec.find(',', pos);
    const std::string part = spec.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
    if (part.empty() || part.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad topology dimension in '" + spec + "'");
    dims.push_back(std::stoul(part));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  if (family == "chimera" && dims.size() == 3) return chimera_graph(dims[0], dims[1], dims[2]);
  if (family == "pegasus" && dims.size() == 1) return pegasus_graph(dims[0]);
  throw std::invalid_argument("unknown topology '" + spec + "'");
}

/// chains[v] is the set of hardware nodes representing source node v, sorted.
struct Embedding {
  std::vector<std::vector<std::size_t>> chains;

  friend bool operator==(const Embedding&, const Embedding&) = default;
};

inline ValidationReport verify_embedding(const SourceGraph& src, const HardwareGraph& hw, const Embedding& emb) {
  ValidationReport report;
  if (emb.chains.size() != src.num_nodes) {
    report.add("chain-count", std::to_string(emb.chains.size()) + " chains for " + std::to_string(src.num_nodes) +
                                  " source nodes");
    return report;
  }
  std::vector<std::size_t> owner(hw.num_nodes(), std::numeric_limits<std::size_t>::max());
  for (std::size_t v = 0; v < emb.chains.size(); ++v) {
    const auto& chain = emb.chains[v];
    if (chain.empty()) report.add("empty-chain", "source node " + std::to_string(v));
    for (auto q : chain) {
      if (q >= hw.num_nodes()) {
        report.add("qubit-range", "source node " + std::to_string(v) + ", qubit " + std::to_string(q));
        continue;
      }
      if (owner[q] != std::numeric_limits<std::size_t>::max() && owner[q] != v)
        report.add("disjointness", "qubit " + std::to_string(q) + " in chains " + std::to_string(owner[q]) + " and " +
                                       std::to_string(v));
      owner[q] = v;
    }
  }
  if (!report.ok()) return report;

  for (std::size_t v = 0; v < emb.chains.size(); ++v) {
    const auto& chain = emb.chains[v];
    std::set<std::size_t> members(chain.begin(), chain.end());
    std::set<std::size_t> seen{chain.front()};
    std::vector<std::size_t> stack{chain.front()};
    while (!stack.empty()) {
      const auto q = stack.back();
      stack.pop_back();
      for (auto nb : hw.neighbors(q))
        if (members.count(nb) && seen.insert(nb).second) stack.push_back(nb);
    }
    if (seen.size() != members.size()) report.add("chain-connectivity", "source node " + std::to_string(v));
  }

  for (auto [a, b] : src.edges) {
    bool covered = false;
    for (auto q : emb.chains[a]) {
      for (auto nb : hw.neighbors(q))
        if (owner[nb] == b) {
          covered = true;
          break;
        }
      if (covered) break;
    }
    if (!covered) report.add("edge-coverage", "source edge " + std::to_string(a) + "-" + std::to_string(b));
  }
  return report;
}

struct EmbeddingStats {
  std::size_t nodes = 0;
  std::size_t edges = 0;
  std::size_t qubits_used = 0;
  double qubits_per_node = 0.0;
  std::size_t max_chain_length = 0;
};

inline EmbeddingStats embedding_stats(const SourceGraph& src, const Embedding& emb) {
  EmbeddingStats s;
  s.nodes = src.num_nodes;
  s.edges = src.edges.size();
  for (const auto& c : emb.chains) {
    s.qubits_used += c.size();
    s.max_chain_length = std::max(s.max_chain_length, c.size());
  }
  s.qubits_per_node = s.nodes == 0 ? 0.0 : static_cast<double>(s.qubits_used) / static_cast<double>(s.nodes);
  return s;
}

struct EmbedOptions {
  std::size_t tries = 10;       // independent restarts before giving up
  std::size_t max_rounds = 64;  // tear-out-and-replace passes per try
  std::size_t patience = 3;     // passes without a shorter valid embedding before stopping
};

namespace detail {

/// Chain placement in the style of Cai, Macready and Roy: each chain is grown
/// from a root qubit along cheapest paths to the chains of its embedded
/// neighbours, where a qubit already used by k chains costs alpha^k. Chains are
/// repeatedly torn out and replaced until none share a qubit, then for a few
/// more passes while the total qubit count keeps falling.
class ChainRouter {
 public:
  ChainRouter(const SourceGraph& src, const HardwareGraph& hw, Rng& rng)
      : hw_(hw),
        adj_(src.adjacency()),
        rng_(rng),
        chains_(src.num_nodes),
        usage_(hw.num_nodes(), 0),
        history_(hw.num_nodes(), 0.0),
        owners_(hw.num_nodes()),
        is_source_(hw.num_nodes(), 0),
        settled_stamp_(hw.num_nodes(), 0),
        settled_count_(hw.num_nodes(), 0),
        blocked_(hw.num_nodes(), 0) {}

  std::optional<Embedding> run(const EmbedOptions& opts) {
    alpha_ = std::max(2.0, static_cast<double>(diameter_estimate()));
    std::optional<Embedding> best;
    std::size_t best_qubits = std::numeric_limits<std::size_t>::max();
    std::size_t stale = 0;

    for (auto v : placement_order()) place(v);
    for (std::size_t round = 0; round < opts.max_rounds; ++round) {
      const std::size_t shared = shared_qubits();
      if (shared == 0) {
        const std::size_t used = total_qubits();
        if (used < best_qubits) {
          best_qubits = used;
          best = snapshot();
          stale = 0;
        } else if (++stale >= opts.patience) {
          break;
        }
      } else {
        for (std::size_t q = 0; q < usage_.size(); ++q)
          if (usage_[q] > 1) history_[q] += static_cast<double>(usage_[q] - 1);
      }
      std::vector<std::size_t> order(chains_.size());
      std::iota(order.begin(), order.end(), std::size_t{0});
      rng_.shuffle(std::span<std::size_t>(order));
      for (auto v : order) place(v);
    }
    if (shared_qubits() == 0 && total_qubits() < best_qubits) best = snapshot();
    return best;
  }

 private:
  double cost(std::size_t q) const { return (1.0 + history_[q]) * std::pow(alpha_, static_cast<double>(usage_[q])); }

  std::size_t shared_qubits() const {
    return static_cast<std::size_t>(std::count_if(usage_.begin(), usage_.end(), [](std::uint32_t u) { return u > 1; }));
  }

  /// Double-sweep BFS lower bound on the diameter of the component of qubit 0.
  std::size_t diameter_estimate() const {
    auto farthest = [&](std::size_t from) {
      std::vector<std::size_t> depth(hw_.num_nodes(), kNone);
      std::vector<std::size_t> queue{from};
      depth[from] = 0;
      std::size_t last = from;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        last = queue[head];
        for (auto nb : hw_.neighbors(last))
          if (depth[nb] == kNone) {
            depth[nb] = depth[last] + 1;
            queue.push_back(nb);
          }
      }
      return std::pair{last, depth[last]};
    };
    return farthest(farthest(0).first).second;
  }

  std::size_t total_qubits() const {
    std::size_t n = 0;
    for (const auto& c : chains_) n += c.size();
    return n;
  }

  Embedding snapshot() const {
    Embedding e{chains_};
    for (auto& c : e.chains) std::sort(c.begin(), c.end());
    return e;
  }

  /// Breadth-first over each component from a random start, so every placed
  /// node after the first of a component has an embedded neighbour.
  std::vector<std::size_t> placement_order() {
    const std::size_t n = chains_.size();
    std::vector<std::size_t> starts(n);
    std::iota(starts.begin(), starts.end(), std::size_t{0});
    rng_.shuffle(std::span<std::size_t>(starts));
    std::vector<std::uint8_t> queued(n, 0);
    std::vector<std::size_t> order;
    order.reserve(n);
    for (auto s : starts) {
      if (queued[s]) continue;
      queued[s] = 1;
      std::size_t head = order.size();
      order.push_back(s);
      while (head < order.size()) {
        const auto v = order[head++];
        std::vector<std::size_t> nbs = adj_[v];
        rng_.shuffle(std::span<std::size_t>(nbs));
        for (auto u : nbs)
          if (!queued[u]) {
            queued[u] = 1;
            order.push_back(u);
          }
      }
    }
    return order;
  }

  void release(std::size_t v) {
    for (auto q : chains_[v]) {
      --usage_[q];
      auto& own = owners_[q];
      own.erase(std::find(own.begin(), own.end(), v));
    }
    chains_[v].clear();
  }

  void claim(std::size_t v, std::vector<std::size_t> chain) {
    for (auto q : chain) {
      ++usage_[q];
      owners_[q].push_back(v);
    }
    chains_[v] = std::move(chain);
  }

  bool owned_by(std::size_t q, std::size_t v) const {
    return std::find(owners_[q].begin(), owners_[q].end(), v) != owners_[q].end();
  }

  /// True when some qubit of chain(v) other than `skip` touches chain(w).
  bool touches(std::size_t v, std::size_t w, std::size_t skip) const {
    for (auto q : chains_[v]) {
      if (q == skip) continue;
      for (auto nb : hw_.neighbors(q))
        if (nb != skip && owned_by(nb, w)) return true;
    }
    return false;
  }

  /// Drops leaf qubits of chain(v) that no edge of v needs.
  void trim(std::size_t v) {
    auto& chain = chains_[v];
    bool changed = true;
    while (changed && chain.size() > 1) {
      changed = false;
      for (std::size_t idx = 0; idx < chain.size() && chain.size() > 1; ++idx) {
        const std::size_t q = chain[idx];
        std::size_t inside = 0;
        for (auto nb : hw_.neighbors(q))
          if (owned_by(nb, v)) ++inside;
        if (inside > 1) continue;
        bool needed = false;
        for (auto w : adj_[v])
          if (!chains_[w].empty() && !touches(v, w, q)) {
            needed = true;
            break;
          }
        if (needed) continue;
        --usage_[q];
        auto& own = owners_[q];
        own.erase(std::find(own.begin(), own.end(), v));
        chain.erase(chain.begin() + static_cast<std::ptrdiff_t>(idx));
        changed = true;
        break;
      }
    }
  }

  struct Search {
    std::vector<double> dist;
    std::vector<std::size_t> parent;
    std::vector<std::uint32_t> stamp;  // dist/parent valid where stamp == epoch
    std::vector<std::pair<double, std::size_t>> heap;
  };

  static bool heap_order(const std::pair<double, std::size_t>& a, const std::pair<double, std::size_t>& b) {
    return a.first > b.first;
  }

  double dist_of(const Search& s, std::size_t q) const {
    return s.stamp[q] == epoch_ ? s.dist[q] : std::numeric_limits<double>::infinity();
  }

  void seed_search(Search& s, const std::vector<std::size_t>& from) {
    if (s.dist.size() != hw_.num_nodes()) {
      s.dist.assign(hw_.num_nodes(), 0.0);
      s.parent.assign(hw_.num_nodes(), kNone);
      s.stamp.assign(hw_.num_nodes(), 0);
    }
    s.heap.clear();
    for (auto q : from) {
      s.stamp[q] = epoch_;
      s.dist[q] = 0.0;
      s.parent[q] = kNone;
      s.heap.emplace_back(0.0, q);
    }
    std::make_heap(s.heap.begin(), s.heap.end(), heap_order);
  }

  /// Settles the next qubit of a node-weighted Dijkstra search; returns kNone
  /// when exhausted. Distances include the cost of the qubit itself; the
  /// source chain sits at distance 0.
  std::size_t settle_next(Search& s) {
    while (!s.heap.empty()) {
      std::pop_heap(s.heap.begin(), s.heap.end(), heap_order);
      const auto [d, q] = s.heap.back();
      s.heap.pop_back();
      if (d > s.dist[q]) continue;
      for (auto nb : hw_.neighbors(q)) {
        const double nd = d + cost(nb);
        if (nd < dist_of(s, nb)) {
          s.stamp[nb] = epoch_;
          s.dist[nb] = nd;
          s.parent[nb] = q;
          s.heap.emplace_back(nd, nb);
          std::push_heap(s.heap.begin(), s.heap.end(), heap_order);
        }
      }
      return q;
    }
    return kNone;
  }

  /// Root minimising sum_i dist_i(q) - (k - 1) cost(q) over the k neighbour
  /// searches. The searches advance in lockstep by distance; since the score
  /// of q is at least dist_i(q) for every i, the scan stops once every
  /// frontier lies beyond the best complete score.
  std::size_t choose_root(std::size_t k) {
    std::size_t root = kNone;
    double best = std::numeric_limits<double>::infinity();
    std::size_t ties = 0;
    for (;;) {
      std::size_t next = kNone;
      double frontier = std::numeric_limits<double>::infinity();
      for (std::size_t i = 0; i < k; ++i)
        if (!searches_[i].heap.empty() && searches_[i].heap.front().first < frontier) {
          frontier = searches_[i].heap.front().first;
          next = i;
        }
      if (next == kNone || frontier > best) break;
      const std::size_t q = settle_next(searches_[next]);
      if (q == kNone || is_source_[q]) continue;
      if (settled_stamp_[q] != epoch_) {
        settled_stamp_[q] = epoch_;
        settled_count_[q] = 0;
      }
      if (++settled_count_[q] != k) continue;
      double score = -static_cast<double>(k - 1) * cost(q);
      for (std::size_t i = 0; i < k; ++i) score += searches_[i].dist[q];
      if (score < best) {
        best = score;
        root = q;
        ties = 1;
      } else if (score == best && rng_.uniform_below(++ties) == 0) {
        root = q;
      }
    }
    return root;
  }

  void place(std::size_t v) {
    release(v);
    std::vector<std::size_t> placed;
    for (auto u : adj_[v])
      if (!chains_[u].empty()) {
        placed.push_back(u);
        trim(u);  // branches that only reached the old chain of v
      }

    if (placed.empty()) {
      claim(v, {cheapest_random_qubit()});
      return;
    }
    if (searches_.size() < placed.size()) searches_.resize(placed.size());
    ++epoch_;
    for (std::size_t i = 0; i < placed.size(); ++i) seed_search(searches_[i], chains_[placed[i]]);
    for (auto u : placed)
      for (auto q : chains_[u]) is_source_[q] = 1;
    const std::size_t root = choose_root(placed.size());
    for (auto u : placed)
      for (auto q : chains_[u]) is_source_[q] = 0;

    if (root == kNone) {  // every reachable qubit already belongs to a neighbour
      claim(v, {cheapest_random_qubit()});
      return;
    }
    std::vector<std::size_t> chain{root};
    blocked_[root] = 1;
    for (std::size_t i = 0; i < placed.size(); ++i) {
      const Search& search = searches_[i];
      for (std::size_t q = search.parent[root]; q != kNone && search.dist[q] > 0.0; q = search.parent[q]) {
        if (!blocked_[q]) {
          blocked_[q] = 1;
          chain.push_back(q);
        }
      }
    }
    for (auto q : chain) blocked_[q] = 0;
    claim(v, std::move(chain));
    trim(v);
    for (auto u : placed) trim(u);
  }

  std::size_t cheapest_random_qubit() {
    std::size_t pick = 0;
    double best = std::numeric_limits<double>::infinity();
    std::size_t ties = 0;
    for (std::size_t q = 0; q < hw_.num_nodes(); ++q) {
      const double c = cost(q);
      if (c < best) {
        best = c;
        pick = q;
        ties = 1;
      } else if (c == best && rng_.uniform_below(++ties) == 0) {
        pick = q;
      }
    }
    return pick;
  }

  static constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

  const HardwareGraph& hw_;
  std::vector<std::vector<std::size_t>> adj_;
  Rng& rng_;
  std::vector<std::vector<std::size_t>> chains_;
  std::vector<std::uint32_t> usage_;
  std::vector<double> history_;
  std::vector<std::vector<std::size_t>> owners_;
  std::vector<std::uint8_t> is_source_;
  std::vector<std::uint32_t> settled_stamp_;
  std::vector<std::uint32_t> settled_count_;
  std::vector<Search> searches_;
  std::uint32_t epoch_ = 0;
  std::vector<std::uint8_t> blocked_;
  double alpha_ = 2.0;
};

}  // namespace detail

/// Randomized minor embedding. Returns std::nullopt when `opts.tries`
/// independent attempts all fail; any returned embedding has passed
/// verify_embedding.
inline std::optional<Embedding> find_embedding(const SourceGraph& src, const HardwareGraph& hw, std::uint64_t seed,
                                               const EmbedOptions& opts = {}) {
  if (src.num_nodes == 0) return Embedding{};
  if (hw.num_nodes() == 0) return std::nullopt;
  for (std::size_t attempt = 0; attempt < opts.tries; ++attempt) {
    Rng rng(derive_seed(seed, {attempt}));
    detail::ChainRouter router(src, hw, rng);
    auto emb = router.run(opts);
    if (emb && verify_embedding(src, hw, *emb).ok()) return emb;
  }
  return std::nullopt;
}

}  // namespace brkmin
