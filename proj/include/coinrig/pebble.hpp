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

#include <span>
#include <vector>

#include "coinrig/graph.hpp"

namespace coinrig {

/// (2,3)-pebble game. Accepts exactly the edge sets independent in the
/// generic 2-dimensional rigidity matroid.
class PebbleGame {
 public:
  explicit PebbleGame(int num_vertices);

  /// Inserts e if it is independent of the edges accepted so far.
  bool try_insert(Edge e);

  int accepted() const { return accepted_; }

 private:
  bool gather(VertexId target, VertexId blocked);

  std::vector<int> pebbles_;
  std::vector<std::vector<VertexId>> out_;
  std::vector<int> seen_;
  std::vector<VertexId> parent_;
  int stamp_ = 0;
  int accepted_ = 0;
};

/// Rank of E' in R_2(G); edges are played in canonical order.
int pebble_rank_23(const Graph& g, std::span<const Edge> eprime);
int pebble_rank_23(const Graph& g);

/// G rigid in the plane (|V| <= 1 counts as rigid).
bool is_rigid_2d(const Graph& g);

}  // namespace coinrig
