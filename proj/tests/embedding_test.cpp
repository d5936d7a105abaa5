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

#include <array>
#include <set>
#include <utility>
#include <vector>

#include "brkmin/embedding.hpp"
#include "oracles.hpp"

using namespace brkmin;

namespace {

using EdgeSet = std::set<std::pair<std::size_t, std::size_t>>;

EdgeSet edge_set(const HardwareGraph& g) {
  const auto e = g.edges();
  return EdgeSet(e.begin(), e.end());
}

SourceGraph complete_graph(std::size_t n) {
  SourceGraph g;
  g.num_nodes = n;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) g.edges.emplace_back(a, b);
  return g;
}

HardwareGraph cycle(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> e;
  for (std::size_t i = 0; i < n; ++i) e.emplace_back(i, (i + 1) % n);
  return HardwareGraph::from_edges(n, e);
}

/// Pegasus couplers from pairwise segment geometry, independent of the
/// generator's enumeration order.
EdgeSet pegasus_by_geometry(std::size_t m) {
  const std::size_t a[12] = {2, 2, 2, 2, 10, 10, 10, 10, 6, 6, 6, 6};
  const std::size_t b[12] = {6, 6, 6, 6, 2, 2, 2, 2, 10, 10, 10, 10};
  struct Q {
    std::size_t u, w, k, z, id;
  };
  std::vector<Q> qs;
  for (std::size_t u = 0; u < 2; ++u)
    for (std::size_t w = 0; w < m; ++w)
      for (std::size_t k = 0; k < 12; ++k)
        for (std::size_t z = 0; z + 1 < m; ++z) qs.push_back({u, w, k, z, z + (m - 1) * (k + 12 * (w + m * u))});
  EdgeSet out;
  auto add = [&](std::size_t x, std::size_t y) { out.emplace(std::min(x, y), std::max(x, y)); };
  for (const auto& p : qs)
    for (const auto& q : qs) {
      if (p.id >= q.id) continue;
      if (p.u == q.u && p.w == q.w && p.k == q.k && (p.z + 1 == q.z || q.z + 1 == p.z)) add(p.id, q.id);
      if (p.u == q.u && p.w == q.w && p.z == q.z && p.k / 2 == q.k / 2) add(p.id, q.id);
      if (p.u == 0 && q.u == 1) {
        const std::size_t col = 12 * p.w + p.k;
        const std::size_t row = 12 * q.w + q.k;
        const std::size_t row_lo = 12 * p.z + a[p.k];
        const std::size_t col_lo = 12 * q.z + b[q.k];
        if (row >= row_lo && row < row_lo + 12 && col >= col_lo && col < col_lo + 12) add(p.id, q.id);
      }
    }
  return out;
}

}  // namespace

TEST(Chimera, CountsMatchClosedForm) {
  for (auto [m, n, t] : std::vector<std::array<std::size_t, 3>>{{1, 1, 4}, {4, 4, 4}, {16, 16, 4}, {3, 5, 2}}) {
    const HardwareGraph g = chimera_graph(m, n, t);
    EXPECT_EQ(g.num_nodes(), 2 * m * n * t);
    EXPECT_EQ(g.num_edges(), m * n * t * t + (m - 1) * n * t + m * (n - 1) * t);
  }
  EXPECT_EQ(chimera_graph(16, 16, 4).max_degree(), 6u);
}

TEST(Chimera, UnitCellIsCompleteBipartite) {
  const HardwareGraph g = chimera_graph(1, 1, 4);
  for (std::size_t k = 0; k < 4; ++k)
    for (std::size_t kk = 0; kk < 4; ++kk) {
      EXPECT_TRUE(g.adjacent(chimera_index(1, 4, 0, 0, 0, k), chimera_index(1, 4, 0, 0, 1, kk)));
      if (k != kk) {
        EXPECT_FALSE(g.adjacent(chimera_index(1, 4, 0, 0, 0, k), chimera_index(1, 4, 0, 0, 0, kk)));
      }
    }
}

TEST(Pegasus, MatchesSegmentGeometry) {
  for (std::size_t m : {2u, 3u, 6u}) {
    const HardwareGraph g = pegasus_graph(m);
    EXPECT_EQ(g.num_nodes(), 24 * m * (m - 1));
    EXPECT_EQ(edge_set(g), pegasus_by_geometry(m)) << m;
  }
}

TEST(Pegasus, SixteenCounts) {
  const HardwareGraph g = pegasus_graph(16);
  EXPECT_EQ(g.num_nodes(), 5760u);
  EXPECT_EQ(g.num_edges(), 40656u);
  EXPECT_EQ(g.max_degree(), 15u);
}

TEST(Topology, Parses) {
  EXPECT_EQ(parse_topology("chimera:2,3,4").num_nodes(), 48u);
  EXPECT_EQ(parse_topology("pegasus:4").name(), "pegasus:4");
  EXPECT_THROW(parse_topology("zephyr:4"), std::invalid_argument);
  EXPECT_THROW(parse_topology("chimera:2,x,4"), std::invalid_argument);
  EXPECT_THROW(parse_topology("pegasus"), std::invalid_argument);
}

TEST(Verify, AcceptsIdentityTriangle) {
  const SourceGraph tri = complete_graph(3);
  const HardwareGraph hw = HardwareGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  EXPECT_TRUE(verify_embedding(tri, hw, Embedding{{{0}, {1}, {2}}}).ok());
}

TEST(Verify, ReportsEachKindOfDefect) {
  const SourceGraph tri = complete_graph(3);
  const HardwareGraph hw = cycle(6);
  EXPECT_TRUE(verify_embedding(tri, hw, Embedding{{{0}, {1}}}).has("chain-count"));
  EXPECT_TRUE(verify_embedding(tri, hw, Embedding{{{0}, {}, {2}}}).has("empty-chain"));
  EXPECT_TRUE(verify_embedding(tri, hw, Embedding{{{0}, {1}, {9}}}).has("qubit-range"));
  EXPECT_TRUE(verify_embedding(tri, hw, Embedding{{{0, 1}, {1}, {2}}}).has("disjointness"));
  EXPECT_TRUE(verify_embedding(tri, hw, Embedding{{{0, 2}, {1}, {3}}}).has("chain-connectivity"));
  EXPECT_TRUE(verify_embedding(tri, hw, Embedding{{{0}, {1}, {2}}}).has("edge-coverage"));
  EXPECT_TRUE(verify_embedding(tri, hw, Embedding{{{0, 5, 4}, {1}, {2, 3}}}).ok());
}

TEST(FindEmbedding, TriangleIntoTriangle) {
  const SourceGraph tri = complete_graph(3);
  const HardwareGraph hw = HardwareGraph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
  const auto emb = find_embedding(tri, hw, 1);
  ASSERT_TRUE(emb.has_value());
  EXPECT_EQ(embedding_stats(tri, *emb).qubits_used, 3u);
}

TEST(FindEmbedding, CompleteFourDoesNotFitInACycle) {
  EmbedOptions opts;
  opts.tries = 3;
  EXPECT_FALSE(find_embedding(complete_graph(4), cycle(4), 1, opts).has_value());
}

TEST(FindEmbedding, CompleteEightIntoChimera) {
  const SourceGraph k8 = complete_graph(8);
  const HardwareGraph hw = chimera_graph(4, 4, 4);
  const auto emb = find_embedding(k8, hw, 3);
  ASSERT_TRUE(emb.has_value());
  EXPECT_TRUE(verify_embedding(k8, hw, *emb).ok());
}

TEST(FindEmbedding, MirroredSchedulesIntoPegasus) {
  const HardwareGraph hw = pegasus_graph(16);
  for (std::size_t teams = 4; teams <= 12; teams += 2) {
    const SourceGraph g = source_graph(build_qubo(random_mdrrt(teams, 1)).qubo);
    const auto emb = find_embedding(g, hw, 7);
    ASSERT_TRUE(emb.has_value()) << teams;
    EXPECT_TRUE(verify_embedding(g, hw, *emb).ok());
    EXPECT_GE(embedding_stats(g, *emb).qubits_per_node, 1.0);
  }
}

TEST(FindEmbedding, DeterministicPerSeed) {
  const HardwareGraph hw = pegasus_graph(6);
  const SourceGraph g = source_graph(build_qubo(random_mdrrt(8, 2)).qubo);
  EXPECT_EQ(find_embedding(g, hw, 11), find_embedding(g, hw, 11));
}

TEST(FindEmbedding, EmptySourceNeedsNoQubits) {
  const auto emb = find_embedding(SourceGraph{}, cycle(4), 0);
  ASSERT_TRUE(emb.has_value());
  EXPECT_TRUE(emb->chains.empty());
}

TEST(Stats, CountsQubits) {
  const SourceGraph tri = complete_graph(3);
  const EmbeddingStats s = embedding_stats(tri, Embedding{{{0, 5, 4}, {1}, {2, 3}}});
  EXPECT_EQ(s.nodes, 3u);
  EXPECT_EQ(s.edges, 3u);
  EXPECT_EQ(s.qubits_used, 6u);
  EXPECT_EQ(s.max_chain_length, 3u);
  EXPECT_DOUBLE_EQ(s.qubits_per_node, 2.0);
}
