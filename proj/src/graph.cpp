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

#include "coinrig/graph.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "coinrig/error.hpp"

namespace coinrig {

VertexSet::VertexSet(std::initializer_list<VertexId> ids) : VertexSet(std::vector<VertexId>(ids)) {}

VertexSet::VertexSet(std::vector<VertexId> ids) : members_(std::move(ids)) {
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool VertexSet::contains(VertexId v) const {
  return std::binary_search(members_.begin(), members_.end(), v);
}

bool VertexSet::subset_of(const VertexSet& other) const {
  return std::includes(other.members_.begin(), other.members_.end(), members_.begin(),
                       members_.end());
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_union(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                 std::back_inserter(out.members_));
  return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_intersection(a.members_.begin(), a.members_.end(), b.members_.begin(),
                        b.members_.end(), std::back_inserter(out.members_));
  return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
  VertexSet out;
  std::set_difference(a.members_.begin(), a.members_.end(), b.members_.begin(), b.members_.end(),
                      std::back_inserter(out.members_));
  return out;
}

namespace {

std::string edge_text(const Edge& e) {
  return "[" + std::to_string(e.u) + "," + std::to_string(e.v) + "]";
}

}  // namespace

Graph::Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 0) throw PreconditionError("negative vertex count");
  if (!labels_.empty() && static_cast<int>(labels_.size()) != n) {
    throw PreconditionError("label map must name every vertex");
  }
  for (auto& e : edges) {
    if (e.u == e.v) throw PreconditionError("loop at vertex " + std::to_string(e.u));
    e = make_edge(e.u, e.v);
    if (e.u < 0 || e.v >= n) {
      throw PreconditionError("edge " + edge_text(e) + " references a vertex outside 0.." +
                              std::to_string(n - 1));
    }
  }
  std::sort(edges.begin(), edges.end());
  auto dup = std::adjacent_find(edges.begin(), edges.end());
  if (dup != edges.end()) throw PreconditionError("duplicate edge " + edge_text(*dup));
  edges_ = std::move(edges);

  adjacency_.assign(n_, {});
  for (const auto& e : edges_) {
    adjacency_[e.u].push_back(e.v);
    adjacency_[e.v].push_back(e.u);
  }
  for (auto& nb : adjacency_) std::sort(nb.begin(), nb.end());
}

Graph Graph::simplified(int n, std::vector<Edge> edges, std::vector<std::string> labels) {
  std::erase_if(edges, [](const Edge& e) { return e.u == e.v; });
  for (auto& e : edges) e = make_edge(e.u, e.v);
  std::sort(edges.begin(), edges.end());
  edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
  return Graph(n, std::move(edges), std::move(labels));
}

bool Graph::has_edge(VertexId a, VertexId b) const {
  if (!has_vertex(a) || !has_vertex(b) || a == b) return false;
  return std::binary_search(edges_.begin(), edges_.end(), make_edge(a, b));
}

std::string Graph::label(VertexId v) const {
  if (has_labels()) return labels_.at(v);
  return std::to_string(v);
}

std::optional<VertexId> Graph::find(const std::string& name) const {
  if (has_labels()) {
    auto it = std::find(labels_.begin(), labels_.end(), name);
    if (it != labels_.end()) return static_cast<VertexId>(it - labels_.begin());
  }
  VertexId id = 0;
  auto [ptr, ec] = std::from_chars(name.data(), name.data() + name.size(), id);
  if (ec == std::errc() && ptr == name.data() + name.size() && has_vertex(id)) return id;
  return std::nullopt;
}

VertexSet Graph::vertex_set() const {
  std::vector<VertexId> all(n_);
  for (int i = 0; i < n_; ++i) all[i] = i;
  return VertexSet(std::move(all));
}

void require_vertices(const Graph& g, const VertexSet& s, const char* what) {
  for (VertexId v : s) {
    if (!g.has_vertex(v)) {
      throw PreconditionError(std::string(what) + " contains unknown vertex " + std::to_string(v));
    }
  }
}

int induced_edge_count(const Graph& g, const VertexSet& x) {
  require_vertices(g, x, "vertex set");
  int count = 0;
  for (VertexId v : x) {
    for (VertexId w : g.neighbors(v)) {
      if (w > v && x.contains(w)) ++count;
    }
  }
  return count;
}

std::vector<Edge> induced_edges(const Graph& g, const VertexSet& x) {
  require_vertices(g, x, "vertex set");
  std::vector<Edge> out;
  for (const auto& e : g.edges()) {
    if (x.contains(e.u) && x.contains(e.v)) out.push_back(e);
  }
  return out;
}

Contraction contract_with_map(const Graph& g, const VertexSet& s) {
  require_vertices(g, s, "contracted set");
  if (s.size() < 2) throw PreconditionError("contraction needs at least two vertices");

  const VertexId keep = s.front();
  Contraction out;
  out.image.assign(g.num_vertices(), 0);
  VertexId next = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (s.contains(v) && v != keep) continue;
    out.image[v] = next++;
  }
  for (VertexId v : s) out.image[v] = out.image[keep];
  out.merged = out.image[keep];

  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.resize(next);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (!s.contains(v)) labels[out.image[v]] = g.label(v);
    }
    std::string merged;
    for (VertexId v : s) {
      if (!merged.empty()) merged += '+';
      merged += g.label(v);
    }
    labels[out.merged] = merged;
  }

  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (const auto& e : g.edges()) edges.push_back({out.image[e.u], out.image[e.v]});
  out.graph = Graph::simplified(next, std::move(edges), std::move(labels));
  return out;
}

Graph contract(const Graph& g, const VertexSet& s) { return contract_with_map(g, s).graph; }

Graph delete_edges(const Graph& g, std::span<const Edge> f) {
  std::vector<Edge> drop(f.begin(), f.end());
  for (auto& e : drop) e = make_edge(e.u, e.v);
  std::sort(drop.begin(), drop.end());
  std::vector<Edge> kept;
  for (const auto& e : g.edges()) {
    if (!std::binary_search(drop.begin(), drop.end(), e)) kept.push_back(e);
  }
  return Graph(g.num_vertices(), std::move(kept), g.labels());
}

Graph minus_T_edges(const Graph& g, const VertexSet& t) {
  require_vertices(g, t, "T");
  auto inside = induced_edges(g, t);
  return delete_edges(g, inside);
}

Graph edge_subgraph(const Graph& g, std::span<const Edge> subset) {
  std::vector<Edge> edges(subset.begin(), subset.end());
  for (auto& e : edges) {
    e = make_edge(e.u, e.v);
    if (!g.has_edge(e.u, e.v)) throw PreconditionError("edge " + edge_text(e) + " not in graph");
  }
  return Graph(g.num_vertices(), std::move(edges), g.labels());
}

Graph add_edges(const Graph& g, std::span<const Edge> extra) {
  std::vector<Edge> edges = g.edges();
  edges.insert(edges.end(), extra.begin(), extra.end());
  for (const auto& e : extra) {
    if (e.u == e.v) throw PreconditionError("loop at vertex " + std::to_string(e.u));
  }
  return Graph::simplified(g.num_vertices(), std::move(edges), g.labels());
}

}  // namespace coinrig
