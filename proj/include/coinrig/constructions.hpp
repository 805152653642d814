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

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "coinrig/graph.hpp"
#include "coinrig/random.hpp"
#include "coinrig/rigidity.hpp"
#include "coinrig/sparsity.hpp"

namespace coinrig {

/// Vertex split of z: z keeps U1 u U2, the new vertex z' takes U2 u U3.
struct SplitSpec {
  VertexId z = 0;
  VertexSet U1, U2, U3;
};

/// Adds vertex w = n with edges wa, wb.
Graph zero_extension(const Graph& g, VertexId a, VertexId b);

/// Removes uv and adds vertex w = n with edges wu, wv, wx.
Graph one_extension(const Graph& g, Edge uv, VertexId x);

/// The new vertex z' gets id n.
Graph vertex_split(const Graph& g, const SplitSpec& spec);

struct Replacement {
  Graph graph;
  std::vector<VertexId> image;        // image[old id] = new id
  std::vector<VertexId> representatives;  // y_i for each part, in partition order
};

/// Contracts each part Y_i to y_i (smallest id of the part) and completes
/// {y_1..y_m} to a clique.
Replacement replace_rigid_subgraph(const Graph& g, const VertexSet& y,
                                   const std::vector<VertexSet>& partition);

struct Reduction {
  Graph graph;
  VertexSet T;                      // T renumbered into the reduced graph
  std::vector<VertexId> image;      // image[z] == -1
  std::optional<Edge> added;        // in reduced ids
};

/// Deletes a degree-2 vertex, or a degree-3 vertex plus the first
/// non-adjacent neighbour pair (canonical order) keeping strong T-sparsity.
Reduction reduce_low_degree(const Graph& g, const VertexSet& t, VertexId z,
                            int cap = kDefaultEnumerationCap);

/// Random 0/1-extension sequence from K2 (0.7 / 0.3).
Graph henneberg_random(int n, std::uint64_t seed);

/// Random graph with about 2n-3 edges (plus or minus 3).
Graph random_near_threshold(int n, std::uint64_t seed);

/// Henneberg graph with up to `noise` extra or removed edges.
Graph henneberg_with_noise(int n, int noise, std::uint64_t seed);

/// Rank bookkeeping of one extension step at an explicit realization.
struct ExtensionCheck {
  bool hypothesis = false;   // non-collinearity condition holds
  int rank_before = 0;
  int rank_after = 0;
  int edges_before = 0;
  int edges_after = 0;
  int attempts = 0;
  bool holds = false;
};

bool collinear(const std::vector<Rational>& a, const std::vector<Rational>& b,
               const std::vector<Rational>& c);

/// p extended by a sampled point for w; holds iff rank grows by exactly 2.
ExtensionCheck check_zero_extension(const Graph& g, const Realization& p, VertexId a,
                                    VertexId b, std::uint64_t seed);

/// (g, p) independent; samples p'(w) up to `attempts` times until (G', p')
/// is independent.
ExtensionCheck check_one_extension(const Graph& g, const Realization& p, Edge uv, VertexId x,
                                   std::uint64_t seed, int attempts = 5);

/// p'(z') = p(z); holds iff the split framework is independent whenever
/// (g, p) is.
ExtensionCheck check_vertex_split(const Graph& g, const Realization& p, const SplitSpec& spec);

/// Rigid-subgraph replacement: (G', p') generic and rigid, lifted to G* = G
/// plus all pairs in Y, then G itself with fresh points on Y and p' elsewhere.
struct ReplacementCheck {
  bool replaced_rigid = false;   // (G', p') infinitesimally rigid
  bool completed_rigid = false;  // (G*, lifted p)
  bool original_rigid = false;   // (G, p) with generic Y
  bool holds = false;
};

ReplacementCheck check_replacement(const Graph& g, const VertexSet& y,
                                   const std::vector<VertexSet>& partition, std::uint64_t seed);

}  // namespace coinrig
