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
#include "coinrig/rigidity.hpp"
#include "coinrig/theorems.hpp"
#include "oracles.hpp"

namespace coinrig {
namespace {

Realization points(std::vector<std::vector<long>> xs) {
  Realization p;
  p.dim = static_cast<int>(xs.front().size());
  for (auto& x : xs) {
    std::vector<Rational> pt;
    for (long c : x) pt.emplace_back(c);
    p.coords.push_back(std::move(pt));
  }
  return p;
}

Graph complete(int n) {
  std::vector<Edge> e;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) e.push_back({a, b});
  }
  return Graph(n, e);
}

TEST(RigidityMatrix, SingleEdgeRow) {
  const auto m = rigidity_matrix(Graph(2, {{0, 1}}), points({{0, 0}, {1, 0}}));
  ASSERT_EQ(m.num_rows(), 1);
  ASSERT_EQ(m.num_cols(), 4);
  EXPECT_EQ(m.row(0), (std::vector<Rational>{-1, 0, 1, 0}));
  EXPECT_EQ(rank_exact(m), 1);
}

TEST(RigidityMatrix, CoincidentEndpointsGiveZeroRow) {
  const auto m = rigidity_matrix(Graph(2, {{0, 1}}), points({{3, 4}, {3, 4}}));
  EXPECT_EQ(m.num_rows(), 1);
  EXPECT_EQ(rank_exact(m), 0);
}

TEST(RigidityMatrix, MissingCoordinatesThrow) {
  EXPECT_THROW(rigidity_matrix(Graph(3, {{0, 1}}), points({{0, 0}, {1, 0}})), PreconditionError);
}

TEST(RigidityMatrix, RowIndexFollowsEdges) {
  const auto m = rigidity_matrix(complete(3), points({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(m.row_index({1, 2}), 2);
  EXPECT_EQ(m.row_index({0, 5}), -1);
}

TEST(RankExact, SmallCases) {
  EXPECT_EQ(bareiss_rank({{0, 0}, {0, 0}}), 0);
  EXPECT_EQ(rank_exact(rigidity_matrix(complete(3), points({{0, 0}, {1, 0}, {0, 1}}))), 3);
}

TEST(RankExact, BaseGraphPrintedRealization) {
  const auto f = fixture("fig3-1");
  const auto m = rigidity_matrix(f.graph, *f.realization);
  EXPECT_EQ(m.num_rows(), 15);
  EXPECT_EQ(m.num_cols(), 18);
  EXPECT_EQ(rank_exact(m), 15);
  EXPECT_EQ(rank_modp(m), 15);
  EXPECT_EQ(oracle::gauss_rank(m.rows()), 15);
}

TEST(RankExact, MatchesGaussianEliminationOnRationalRealizations) {
  Rng rng(7);
  for (int iter = 0; iter < 60; ++iter) {
    const int n = static_cast<int>(uniform_int(rng, 3, 7));
    const Graph g = random_near_threshold(n, derive_seed(99, iter));
    Realization p;
    p.dim = static_cast<int>(uniform_int(rng, 1, 3));
    for (int v = 0; v < n; ++v) {
      std::vector<Rational> pt;
      for (int k = 0; k < p.dim; ++k) {
        // Small range forces frequent degeneracy.
        pt.emplace_back(uniform_int(rng, -2, 2), uniform_int(rng, 1, 3));
        pt.back().canonicalize();
      }
      p.coords.push_back(pt);
    }
    const auto m = rigidity_matrix(g, p);
    const int exact = rank_exact(m);
    EXPECT_EQ(exact, oracle::gauss_rank(m.rows()));
    EXPECT_LE(rank_modp(m), exact);
  }
}

TEST(RankModp, RejectsComposite) {
  const auto m = rigidity_matrix(complete(3), points({{0, 0}, {1, 0}, {0, 1}}));
  EXPECT_EQ(rank_modp(m), 3);
  EXPECT_EQ(rank_modp(m, 101), 3);
  EXPECT_THROW(rank_modp(m, 100), PreconditionError);
  EXPECT_TRUE(is_prime_u64(kMersenne61));
  EXPECT_FALSE(is_prime_u64(kMersenne61 - 2));
}

TEST(RankModp, ZeroMatrix) {
  const auto m = rigidity_matrix(Graph(2, {{0, 1}}), points({{1, 1}, {1, 1}}));
  EXPECT_EQ(rank_modp(m), 0);
}

TEST(Rigidity, Targets) {
  EXPECT_EQ(rigidity_target(2, 2), 1);
  EXPECT_EQ(rigidity_target(9, 2), 15);
  EXPECT_EQ(rigidity_target(10, 3), 24);
  EXPECT_EQ(rigidity_target(2, 3), 1);
  EXPECT_EQ(rigidity_target(1, 2), 0);
}

TEST(Rigidity, InfinitesimalRigidity) {
  EXPECT_TRUE(is_infinitesimally_rigid(Graph(2, {{0, 1}}), points({{0, 0}, {1, 0}})));
  const Graph path(3, {{0, 1}, {1, 2}});
  EXPECT_FALSE(is_infinitesimally_rigid(path, sample_generic(path, 2, 5)));
  const auto f = fixture("fig3-1");
  EXPECT_TRUE(is_infinitesimally_rigid(f.graph, *f.realization));
}

TEST(Sampling, CoincidenceAndDeterminism) {
  const Graph k4 = complete(4);
  const auto p = sample_T_coincident(k4, CoincidenceSpec::of({1, 3}), 2, 11);
  EXPECT_EQ(p.point(1), p.point(3));
  EXPECT_NE(p.point(0), p.point(1));
  const auto q = sample_T_coincident(k4, CoincidenceSpec::of({1, 3}), 2, 11);
  EXPECT_EQ(p.coords, q.coords);
  const auto r = sample_T_coincident(k4, CoincidenceSpec::of({1, 3}), 2, 12);
  EXPECT_NE(p.coords, r.coords);
  const auto single = sample_T_coincident(k4, CoincidenceSpec::of({2}), 2, 11);
  for (int a = 0; a < 4; ++a) {
    for (int b = a + 1; b < 4; ++b) EXPECT_NE(single.point(a), single.point(b));
  }
  for (const auto& pt : p.coords) {
    for (const auto& c : pt) {
      EXPECT_EQ(c.get_den(), 1);
      EXPECT_LE(abs(c), kSampleRadius);
    }
  }
}

TEST(GenericRank, CompleteGraphsWithCoincidentPair) {
  const auto k4 = generic_rank(complete(4), CoincidenceSpec::of({0, 1}), 2);
  EXPECT_EQ(k4.rank, 5);
  EXPECT_TRUE(k4.rigid);
  EXPECT_FALSE(k4.independent);
  EXPECT_EQ(k4.method, RankMethod::exact_rational);
  EXPECT_EQ(k4.trials, 3);
  EXPECT_LT(k4.failure_bound, 1e-15);
  const auto k3 = generic_rank(complete(3), CoincidenceSpec::of({0, 1}), 2);
  EXPECT_LT(k3.rank, 3);
  EXPECT_FALSE(k3.rigid);
}

TEST(GenericRank, PrimeFieldAboveExactLimit) {
  const Graph g = henneberg_random(40, 3);
  const auto r = generic_rank(g, CoincidenceSpec::of({0}), 2, 1);
  EXPECT_EQ(r.method, RankMethod::prime_field);
  EXPECT_EQ(r.rank, 77);
  const auto forced = generic_rank(g, CoincidenceSpec::of({0}), 2, 1, 42, RankMethod::exact_rational);
  EXPECT_EQ(forced.rank, 77);
  EXPECT_THROW(generic_rank(g, CoincidenceSpec::of({0}), 2, 0), PreconditionError);
}

TEST(GenericRank, KFiveFiveInThreeSpace) {
  const auto f = fixture("k55");
  const auto r = generic_rank(f.graph, CoincidenceSpec::of(f.T), 3);
  EXPECT_LE(r.rank, 23);
  EXPECT_FALSE(r.rigid);
}

TEST(Rigidity, RigidMotionsSpanKernel) {
  const Graph g = henneberg_random(8, 4);
  const auto p = sample_generic(g, 2, 6);
  const auto m = rigidity_matrix(g, p);
  // Translations along x and y, and the rotation (-y, x).
  std::vector<std::vector<Rational>> motions(3, std::vector<Rational>(16));
  for (int v = 0; v < 8; ++v) {
    motions[0][2 * v] = 1;
    motions[1][2 * v + 1] = 1;
    motions[2][2 * v] = -p.point(v)[1];
    motions[2][2 * v + 1] = p.point(v)[0];
  }
  for (const auto& mv : motions) {
    for (int r = 0; r < m.num_rows(); ++r) {
      Rational dot = 0;
      for (int c = 0; c < m.num_cols(); ++c) dot += m.row(r)[c] * mv[c];
      EXPECT_EQ(dot, 0);
    }
  }
}

TEST(Rigidity, LiftContractedRealization) {
  const Graph k4 = complete(4);
  const auto c = contract_with_map(k4, {1, 2});
  const auto pc = sample_generic(c.graph, 2, 3);
  const auto p = lift_contracted(c, pc);
  EXPECT_EQ(p.point(1), p.point(2));
  EXPECT_EQ(p.point(3), pc.point(c.image[3]));
}

}  // namespace
}  // namespace coinrig
