// Copyright 2026 The coinrig Authors
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

#include <gtest/gtest.h>

#include "coinrig/constructions.hpp"
#include "coinrig/error.hpp"
#include "coinrig/matroid.hpp"
#include "coinrig/pebble.hpp"
#include "coinrig/theorems.hpp"

namespace coinrig {
namespace {

Graph complete(int n) {
  std::vector<Edge> e;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) e.push_back({a, b});
  }
  return Graph(n, e);
}

VertexId outside(const Graph&, Edge e) {
  VertexId x = 0;
  while (x == e.u || x == e.v) ++x;
  return x;
}

TEST(ZeroExtension, Counts) {
  const Graph tri = zero_extension(Graph(2, {{0, 1}}), 0, 1);
  EXPECT_EQ(tri, complete(3));
  Graph g(2, {{0, 1}});
  for (int k = 2; k < 9; ++k) g = zero_extension(g, k - 1, k - 2);
  EXPECT_EQ(g.num_vertices(), 9);
  EXPECT_EQ(g.num_edges(), 15u);
  EXPECT_EQ(pebble_rank_23(g), 15);
  EXPECT_THROW(zero_extension(g, 2, 2), PreconditionError);
  EXPECT_THROW(zero_extension(g, 2, 40), PreconditionError);
}

TEST(OneExtension, Counts) {
  const Graph g = one_extension(complete(3), {0, 1}, 2);
  EXPECT_EQ(g.num_vertices(), 4);
  EXPECT_EQ(g.num_edges(), 5u);
  EXPECT_FALSE(g.has_edge(0, 1));
  const Graph lam = henneberg_random(10, 5);
  const Graph next = one_extension(lam, lam.edges()[0], outside(lam, lam.edges()[0]));
  EXPECT_EQ(next.num_edges(), static_cast<std::size_t>(2 * next.num_vertices() - 3));
  EXPECT_THROW(one_extension(Graph(3, {{0, 1}}), {1, 2}, 0), PreconditionError);
  EXPECT_THROW(one_extension(complete(3), {0, 1}, 1), PreconditionError);
}

TEST(VertexSplit, Star) {
  const Graph star(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
  const Graph g = vertex_split(star, {0, {1}, {2, 3}, {4}});
  EXPECT_EQ(g.num_vertices(), 6);
  EXPECT_EQ(g.num_edges(), 6u);
  EXPECT_TRUE(g.has_edge(5, 4));
  EXPECT_FALSE(g.has_edge(0, 4));
  const Graph degree_two = vertex_split(star, {0, {1, 4}, {2, 3}, {}});
  EXPECT_EQ(degree_two.degree(5), 2);
  EXPECT_THROW(vertex_split(star, {0, {1}, {2}, {3, 4}}), PreconditionError);
  EXPECT_THROW(vertex_split(star, {0, {1}, {2, 3}, {}}), PreconditionError);
  EXPECT_THROW(vertex_split(star, {0, {1, 2}, {2, 3}, {4}}), PreconditionError);
}

TEST(ReplaceRigidSubgraph, SixVertexBlock) {
  // A rigid block on 0..5 hanging off vertices 6, 7.
  Graph g = henneberg_random(6, 3);
  auto edges = g.edges();
  edges.push_back({0, 6});
  edges.push_back({3, 6});
  edges.push_back({5, 7});
  edges.push_back({6, 7});
  g = Graph(8, edges);
  const auto r = replace_rigid_subgraph(g, {0, 1, 2, 3, 4, 5}, {{0, 1}, {2, 3}, {4, 5}});
  EXPECT_EQ(r.graph.num_vertices(), 5);
  EXPECT_EQ(r.representatives, (std::vector<VertexId>{0, 1, 2}));
  EXPECT_TRUE(r.graph.has_edge(0, 1));
  EXPECT_TRUE(r.graph.has_edge(1, 2));
  EXPECT_TRUE(r.graph.has_edge(0, 2));
  EXPECT_EQ(r.image[6], 3);
  EXPECT_THROW(replace_rigid_subgraph(g, {0, 1, 2, 3}, {{0, 1}, {2, 3}}), PreconditionError);
  EXPECT_THROW(replace_rigid_subgraph(g, {0, 1, 2, 3}, {{0, 1}, {2}, {1, 3}}), PreconditionError);
  EXPECT_THROW(replace_rigid_subgraph(g, {0, 1, 2, 3}, {{0}, {1}, {2}}), PreconditionError);
}

TEST(ReplaceRigidSubgraph, ContractsBackToBaseGraph) {
  // Attach g to d, e, f so that {d, e, f, g} spans K4; merging g into d
  // returns the base graph.
  const auto f = fixture("fig3-1");
  const VertexId d = *f.graph.find("d");
  const VertexId e = *f.graph.find("e");
  const VertexId ff = *f.graph.find("f");
  auto edges = f.graph.edges();
  edges.push_back({d, 9});
  edges.push_back({e, 9});
  edges.push_back({ff, 9});
  const Graph big(10, edges);
  const auto r = replace_rigid_subgraph(big, {d, e, ff, 9}, {{d, 9}, {e}, {ff}});
  EXPECT_EQ(r.graph.num_vertices(), 9);
  EXPECT_EQ(r.graph.edges(), f.graph.edges());
}

TEST(ReduceLowDegree, DegreeTwo) {
  const Graph g = zero_extension(complete(3), 0, 1);
  const auto r = reduce_low_degree(g, {0}, 3);
  EXPECT_EQ(r.graph, complete(3));
  EXPECT_FALSE(r.added);
  EXPECT_EQ(r.image[3], -1);
}

TEST(ReduceLowDegree, DegreeThreeFindsPair) {
  int reduced = 0;
  for (int seed = 0; seed < 200 && reduced < 60; ++seed) {
    const Graph dense = henneberg_with_noise(7, 3, derive_seed(40, seed));
    const VertexSet t{0, 1, 2};
    SparsityOracle mt(dense, t);
    const Graph g = edge_subgraph(dense, greedy_rank(mt, dense.edges()).base);
    for (VertexId z = 3; z < 7; ++z) {
      if (g.degree(z) != 3) continue;
      int in_t = 0;
      for (VertexId x : g.neighbors(z)) in_t += t.contains(x);
      if (in_t > 1) continue;
      const auto r = reduce_low_degree(g, t, z);
      ASSERT_TRUE(r.added);
      EXPECT_TRUE(strongly_T_sparse(r.graph, r.T));
      EXPECT_EQ(r.graph.num_edges(), g.num_edges() - 2);
      ++reduced;
    }
  }
  EXPECT_GT(reduced, 20);
}

TEST(ReduceLowDegree, Preconditions) {
  // Vertex 3 adjacent to 0 and 1, both in T.
  const Graph g(4, {{0, 2}, {1, 2}, {0, 3}, {1, 3}});
  EXPECT_THROW(reduce_low_degree(g, {0, 1}, 3), PreconditionError);
  EXPECT_THROW(reduce_low_degree(g, {0, 1}, 0), PreconditionError);
  EXPECT_THROW(reduce_low_degree(complete(4), {0}, 1), PreconditionError);
}

TEST(Henneberg, SmallAndLarge) {
  EXPECT_EQ(henneberg_random(3, 77), complete(3));
  const Graph a = henneberg_random(4, 12);
  EXPECT_EQ(a.num_edges(), 5u);
  EXPECT_EQ(a, henneberg_random(4, 12));
  const Graph big = henneberg_random(200, 1);
  EXPECT_EQ(big.num_edges(), 397u);
  EXPECT_EQ(pebble_rank_23(big), 397);
  EXPECT_THROW(henneberg_random(1, 0), PreconditionError);
}

TEST(Henneberg, MixesBothMoves) {
  // A pure 0-extension sequence never removes an edge of the previous graph,
  // so vertex 0 keeps its first neighbour. Some seeds must break that.
  int broke = 0;
  for (int seed = 0; seed < 50; ++seed) broke += !henneberg_random(12, seed).has_edge(0, 1);
  EXPECT_GT(broke, 0);
}

TEST(Extensions, NumericChecks) {
  const Graph g = henneberg_random(7, 8);
  const auto p = sample_generic(g, 2, 9);
  const auto z = check_zero_extension(g, p, 0, 3, 1);
  EXPECT_TRUE(z.hypothesis);
  EXPECT_TRUE(z.holds);
  EXPECT_EQ(z.rank_after, z.rank_before + 2);
  const auto o = check_one_extension(g, p, g.edges()[0], outside(g, g.edges()[0]), 2);
  EXPECT_TRUE(o.holds);
  EXPECT_EQ(o.rank_after, o.edges_after);
  const auto nb = g.neighbors(6);
  ASSERT_GE(nb.size(), 2u);
  std::vector<VertexId> rest(nb.begin() + 2, nb.end());
  const auto s = check_vertex_split(g, p, {6, VertexSet(rest), {nb[0], nb[1]}, {}});
  EXPECT_TRUE(s.holds);
  EXPECT_TRUE(collinear({0, 0}, {1, 1}, {3, 3}));
  EXPECT_FALSE(collinear({0, 0}, {1, 1}, {3, 2}));
}

}  // namespace
}  // namespace coinrig
