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

#include <bit>
#include <cstdint>
#include <vector>

#include "coinrig/graph.hpp"

namespace coinrig::detail {

/// Vertex subset of a graph with at most 64 vertices.
using Mask = std::uint64_t;

inline constexpr Mask bit(int v) { return Mask{1} << v; }
inline int popcount(Mask m) { return std::popcount(m); }
inline int lowest(Mask m) { return std::countr_zero(m); }

Mask to_mask(const VertexSet& s);
VertexSet from_mask(Mask m);

/// Lexicographic order on the sorted member lists of two masks.
bool lex_less(Mask a, Mask b);

/// Adjacency as bitmasks.
struct MaskGraph {
  int n = 0;
  std::vector<Mask> adj;

  MaskGraph(int num_vertices, const std::vector<Edge>& edges);
  explicit MaskGraph(const Graph& g) : MaskGraph(g.num_vertices(), g.edges()) {}

  int induced(Mask x) const;
  /// i(X) for every X in [0, 2^n).
  std::vector<int> induced_table() const;
};

}  // namespace coinrig::detail
