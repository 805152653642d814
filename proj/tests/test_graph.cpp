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

#include "coinrig/error.hpp"
#include "coinrig/graph.hpp"
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

TEST(Graph, CanonicalEdgeStorage) {
  Graph g(3, {{2, 1}, {1, 0}, {0, 2}});
  ASSERT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{0, 2}));
  EXPECT_EQ(g.edges()[2], (Edge{1, 2}));
  EXPECT_TRUE(g.has_edge(2, 0));
  EXPECT_EQ(g.degree(1), 2);
}

TEST(Graph, RejectsLoopsDuplicatesAndRange) {
  EXPECT_THROW(Graph(2, {{0, 0}}), PreconditionError);
  EXPECT_THROW(Graph(2, {{0, 1}, {1, 0}}), PreconditionError);
  EXPECT_THROW(Graph(2, {{0, 2}}), PreconditionError);
  EXPECT_THROW(Graph(2, {{0, 1}}, {"a"}), PreconditionError);
}

TEST(Graph, InducedEdgeCount) {
  const Graph k4 = complete(4);
  EXPECT_EQ(induced_edge_count(k4, k4.vertex_set()), 6);
  EXPECT_EQ(induced_edge_count(k4, {0, 1}), 1);
  EXPECT_THROW(induced_edge_count(k4, {0, 9}), PreconditionError);
  const auto g = fixture("fig4").graph;
  const VertexSet buv{*g.find("b"), *g.find("u"), *g.find("v")};
  EXPECT_EQ(induced_edge_count(g, buv), 2);
}

TEST(Graph, ContractCounterexample) {
  const auto f = fixture("fig4");
  const Graph g_uv = contract(f.graph, {0, 1});
  EXPECT_EQ(g_uv.num_vertices(), 7);
  EXPECT_EQ(g_uv.num_edges(), 10u);
  const Graph g_t = contract(f.graph, f.T);
  EXPECT_EQ(g_t.num_vertices(), 6);
  EXPECT_EQ(g_t.num_edges(), 9u);
  EXPECT_EQ(g_t.label(0), "u+v+w");
}

TEST(Graph, ContractTriangleToEdge) {
  const Graph k2 = contract(complete(3), {0, 1});
  EXPECT_EQ(k2.num_vertices(), 2);
  EXPECT_EQ(k2.num_edges(), 1u);
  EXPECT_THROW(contract(complete(3), {0}), PreconditionError);
}

TEST(Graph, ContractMapUsesSmallestId) {
  const auto c = contract_with_map(complete(5), {1, 3});
  EXPECT_EQ(c.merged, 1);
  EXPECT_EQ(c.image[3], 1);
  EXPECT_EQ(c.image[4], 3);
  EXPECT_EQ(c.graph.num_edges(), 6u);
}

TEST(Graph, DeleteEdges) {
  const Graph k4 = complete(4);
  const std::vector<Edge> one{{0, 1}};
  EXPECT_EQ(delete_edges(k4, one).num_edges(), 5u);
  const Graph path(3, {{0, 1}, {1, 2}});
  const std::vector<Edge> absent{{0, 2}};
  EXPECT_EQ(delete_edges(path, absent), path);
  const std::vector<Edge> tri{{0, 1}, {0, 2}, {1, 2}};
  const Graph only_uv(4, {{0, 1}, {1, 3}});
  const Graph after = delete_edges(only_uv, tri);
  EXPECT_EQ(after.num_edges(), 1u);
  EXPECT_TRUE(after.has_edge(1, 3));
}

TEST(Graph, MinusTEdges) {
  EXPECT_EQ(minus_T_edges(complete(4), {0, 1, 2}).num_edges(), 3u);
  const auto f = fixture("fig4");
  EXPECT_EQ(minus_T_edges(f.graph, f.T), f.graph);
  EXPECT_EQ(minus_T_edges(complete(3), {0, 1, 2}).num_edges(), 0u);
}

TEST(Graph, VertexSetAlgebra) {
  const VertexSet a{3, 1, 2, 1};
  EXPECT_EQ(a.size(), 3u);
  const VertexSet b{2, 5};
  EXPECT_EQ(set_union(a, b), (VertexSet{1, 2, 3, 5}));
  EXPECT_EQ(set_intersection(a, b), (VertexSet{2}));
  EXPECT_EQ(set_difference(a, b), (VertexSet{1, 3}));
  EXPECT_TRUE((VertexSet{1, 2}).proper_subset_of(a));
  EXPECT_FALSE(a.proper_subset_of(a));
}

TEST(Graph, SimplifiedDropsLoopsAndParallels) {
  const Graph g = Graph::simplified(3, {{0, 1}, {1, 0}, {2, 2}, {1, 2}});
  EXPECT_EQ(g.num_edges(), 2u);
}

}  // namespace
}  // namespace coinrig
