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

#include "coinrig/bitmask.hpp"

#include "coinrig/error.hpp"

namespace coinrig::detail {

Mask to_mask(const VertexSet& s) {
  Mask m = 0;
  for (VertexId v : s) {
    if (v < 0 || v >= 64) throw PreconditionError("vertex id too large for bitmask kernels");
    m |= bit(v);
  }
  return m;
}

VertexSet from_mask(Mask m) {
  std::vector<VertexId> ids;
  while (m) {
    ids.push_back(lowest(m));
    m &= m - 1;
  }
  return VertexSet(std::move(ids));
}

bool lex_less(Mask a, Mask b) {
  while (a && b) {
    const int la = lowest(a);
    const int lb = lowest(b);
    if (la != lb) return la < lb;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

MaskGraph::MaskGraph(int num_vertices, const std::vector<Edge>& edges)
    : n(num_vertices), adj(num_vertices, 0) {
  if (n > 64) throw CapExceeded("bitmask kernels support at most 64 vertices");
  for (const auto& e : edges) {
    adj[e.u] |= bit(e.v);
    adj[e.v] |= bit(e.u);
  }
}

int MaskGraph::induced(Mask x) const {
  int twice = 0;
  for (Mask r = x; r; r &= r - 1) twice += popcount(adj[lowest(r)] & x);
  return twice / 2;
}

std::vector<int> MaskGraph::induced_table() const {
  if (n > 30) throw CapExceeded("induced-count table limited to 30 vertices");
  std::vector<int> table(std::size_t{1} << n, 0);
  for (Mask x = 1; x < table.size(); ++x) {
    const int v = lowest(x);
    const Mask rest = x & (x - 1);
    table[x] = table[rest] + popcount(adj[v] & rest);
  }
  return table;
}

}  // namespace coinrig::detail
