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

#include "coinrig/pebble.hpp"

#include <algorithm>

#include "coinrig/error.hpp"
#include "coinrig/rigidity.hpp"

namespace coinrig {

PebbleGame::PebbleGame(int num_vertices)
    : pebbles_(num_vertices, 2), out_(num_vertices), seen_(num_vertices, 0),
      parent_(num_vertices, -1) {}

// Moves one free pebble onto `target` along a reversed directed path, never
// touching `blocked`. Returns false when no pebble is reachable.
bool PebbleGame::gather(VertexId target, VertexId blocked) {
  ++stamp_;
  seen_[target] = stamp_;
  seen_[blocked] = stamp_;
  std::vector<VertexId> stack{target};
  VertexId found = -1;
  while (!stack.empty() && found < 0) {
    VertexId x = stack.back();
    stack.pop_back();
    for (VertexId y : out_[x]) {
      if (seen_[y] == stamp_) continue;
      seen_[y] = stamp_;
      parent_[y] = x;
      if (pebbles_[y] > 0) {
        found = y;
        break;
      }
      stack.push_back(y);
    }
  }
  if (found < 0) return false;

  for (VertexId y = found; y != target;) {
    VertexId x = parent_[y];
    auto& xs = out_[x];
    xs.erase(std::find(xs.begin(), xs.end(), y));
    out_[y].push_back(x);
    y = x;
  }
  --pebbles_[found];
  ++pebbles_[target];
  return true;
}

bool PebbleGame::try_insert(Edge e) {
  const auto n = static_cast<VertexId>(pebbles_.size());
  if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
    throw PreconditionError("pebble game: invalid edge");
  }
  while (pebbles_[e.u] < 2 && gather(e.u, e.v)) {
  }
  while (pebbles_[e.v] < 2 && gather(e.v, e.u)) {
  }
  if (pebbles_[e.u] + pebbles_[e.v] < 4) return false;
  --pebbles_[e.u];
  out_[e.u].push_back(e.v);
  ++accepted_;
  return true;
}

int pebble_rank_23(const Graph& g, std::span<const Edge> eprime) {
  std::vector<Edge> order(eprime.begin(), eprime.end());
  for (auto& e : order) {
    e = make_edge(e.u, e.v);
    if (!g.has_edge(e.u, e.v)) throw PreconditionError("E' contains an edge outside G");
  }
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  PebbleGame game(g.num_vertices());
  for (const auto& e : order) game.try_insert(e);
  return game.accepted();
}

int pebble_rank_23(const Graph& g) { return pebble_rank_23(g, g.edges()); }

bool is_rigid_2d(const Graph& g) {
  return pebble_rank_23(g) == rigidity_target(g.num_vertices(), 2);
}

}  // namespace coinrig
