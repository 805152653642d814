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

TEST(Fixtures, Shapes) {
  const auto all = fixtures();
  ASSERT_EQ(all.size(), 9u);
  for (int i = 1; i <= 7; ++i) {
    const auto f = fixture("fig3-" + std::to_string(i));
    EXPECT_EQ(f.graph.num_vertices(), 9);
    EXPECT_EQ(f.graph.num_edges(), 15u);
    EXPECT_EQ(f.T, (VertexSet{0, 1, 2}));
    ASSERT_TRUE(f.realization);
    // Outer 6-cycle u-a-v-b-w-c.
    for (auto [a, b] : std::vector<std::pair<std::string, std::string>>{
             {"u", "a"}, {"a", "v"}, {"v", "b"}, {"b", "w"}, {"w", "c"}, {"c", "u"}}) {
      EXPECT_TRUE(f.graph.has_edge(*f.graph.find(a), *f.graph.find(b)));
    }
    // Inner triangle d-e-f.
    EXPECT_TRUE(f.graph.has_edge(6, 7));
    EXPECT_TRUE(f.graph.has_edge(6, 8));
    EXPECT_TRUE(f.graph.has_edge(7, 8));
  }
  const auto f4 = fixture("fig4");
  EXPECT_EQ(f4.graph.num_vertices(), 8);
  EXPECT_EQ(f4.graph.num_edges(), 13u);
  EXPECT_EQ(f4.T, (VertexSet{0, 1, 2}));
  const auto k55 = fixture("k55");
  EXPECT_EQ(k55.graph.num_vertices(), 10);
  EXPECT_EQ(k55.graph.num_edges(), 25u);
  EXPECT_TRUE(k55.graph.has_edge(0, 5));
  EXPECT_THROW(fixture("fig9"), PreconditionError);
}

TEST(Fixtures, SevenDistinctWirings) {
  for (int i = 1; i <= 7; ++i) {
    for (int j = i + 1; j <= 7; ++j) {
      EXPECT_NE(fixture("fig3-" + std::to_string(i)).graph.edges(),
                fixture("fig3-" + std::to_string(j)).graph.edges());
    }
  }
}

TEST(Combinatorial, Counterexample) {
  const auto f = fixture("fig4");
  const auto v = coincident_rigid_combinatorial(f.graph, f.T);
  EXPECT_FALSE(*v.combinatorial);
  ASSERT_TRUE(v.failing_S);
  EXPECT_EQ(*v.failing_S, (VertexSet{0, 1}));
  ASSERT_EQ(v.checks.size(), 5u);
  EXPECT_TRUE(v.checks[0].rigid);
  EXPECT_EQ(v.checks[0].rank, 13);
  EXPECT_EQ(v.checks[1].rank, 10);
  EXPECT_EQ(v.checks[1].target, 11);
  EXPECT_EQ(v.checks[4].S, f.T);
  EXPECT_EQ(v.checks[4].rank, 9);
  EXPECT_TRUE(v.checks[4].rigid);
}

TEST(Combinatorial, K4AndBaseGraphs) {
  EXPECT_TRUE(*coincident_rigid_combinatorial(complete(4), {0, 1}).combinatorial);
  for (int i = 1; i <= 7; ++i) {
    const auto f = fixture("fig3-" + std::to_string(i));
    const auto v = coincident_rigid_combinatorial(f.graph, f.T);
    EXPECT_TRUE(*v.combinatorial) << f.name;
    EXPECT_FALSE(v.failing_S);
  }
}

TEST(Combinatorial, RangeOfT) {
  EXPECT_THROW(coincident_rigid_combinatorial(complete(4), {0}), PreconditionError);
  EXPECT_THROW(coincident_rigid_combinatorial(complete(5), {0, 1, 2, 3}), PreconditionError);
}

TEST(Combinatorial, FlexibleReducedGraphReportsEmptyS) {
  const auto v = coincident_rigid_combinatorial(complete(3), {0, 1});
  EXPECT_FALSE(*v.combinatorial);
  ASSERT_TRUE(v.failing_S);
  EXPECT_TRUE(v.failing_S->empty());
}

TEST(Algebraic, Fixtures) {
  const auto f3 = fixture("fig3-1");
  const auto a = coincident_rigid_algebraic(f3.graph, f3.T);
  EXPECT_TRUE(*a.algebraic);
  EXPECT_EQ(a.reports.at(0).rank, 15);
  const auto f4 = fixture("fig4");
  const auto b = coincident_rigid_algebraic(f4.graph, f4.T);
  EXPECT_FALSE(*b.algebraic);
  EXPECT_EQ(b.reports.at(0).rank, 12);
  const auto k = fixture("k55");
  const auto c = coincident_rigid_algebraic(k.graph, k.T, 3);
  EXPECT_FALSE(*c.algebraic);
  EXPECT_LE(c.reports.at(0).rank, 23);
}

TEST(Verdict, BothProceduresAgreeOnFixtures) {
  for (const auto& f : fixtures()) {
    if (f.name == "k55") continue;
    const auto v = coincident_rigid(f.graph, f.T);
    ASSERT_TRUE(v.combinatorial && v.algebraic);
    EXPECT_TRUE(v.consistent()) << f.name;
  }
}

TEST(CrossValidate, SmallRunHasNoMismatch) {
  XvalOptions o;
  o.n_max = 6;
  o.t_sizes = {2};
  o.samples = 80;
  o.seed = 5;
  const auto r = cross_validate(o);
  EXPECT_EQ(r.samples, 80);
  EXPECT_EQ(r.mismatches, 0);
  EXPECT_GT(r.independent_cases, 0);
  EXPECT_LT(r.independent_cases, 80);
  EXPECT_EQ(r.samples_per_t.at(0), 80);
}

TEST(CrossValidate, RejectsTooSmallVertexRange) {
  XvalOptions o;
  o.n_max = 3;
  o.t_sizes = {3};
  o.samples = 1;
  EXPECT_THROW(cross_validate(o), PreconditionError);
}

TEST(ConjectureSearch, Budgets) {
  const auto empty = conjecture_search(7, 4, 0, 1);
  EXPECT_EQ(empty.tested, 0);
  EXPECT_TRUE(empty.candidates.empty());
  EXPECT_THROW(conjecture_search(7, 3, 10, 1), PreconditionError);
  const auto small = conjecture_search(7, 4, 60, 2);
  EXPECT_EQ(small.tested, 60);
  EXPECT_TRUE(small.candidates.empty());
}

}  // namespace
}  // namespace coinrig
