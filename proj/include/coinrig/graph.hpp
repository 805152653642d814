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

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace coinrig {

using VertexId = std::int32_t;

/// Undirected edge stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  auto operator<=>(const Edge&) const = default;
};

/// Orders the endpoints. Does not reject loops; callers validate.
constexpr Edge make_edge(VertexId a, VertexId b) {
  return a < b ? Edge{a, b} : Edge{b, a};
}

/// Sorted, duplicate-free set of vertex ids. Compared lexicographically on
/// the sorted member list.
class VertexSet {
 public:
  VertexSet() = default;
  VertexSet(std::initializer_list<VertexId> ids);
  explicit VertexSet(std::vector<VertexId> ids);

  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }
  bool contains(VertexId v) const;
  bool subset_of(const VertexSet& other) const;
  bool proper_subset_of(const VertexSet& other) const {
    return size() < other.size() && subset_of(other);
  }

  const std::vector<VertexId>& members() const { return members_; }
  auto begin() const { return members_.begin(); }
  auto end() const { return members_.end(); }
  VertexId front() const { return members_.front(); }

  friend VertexSet set_union(const VertexSet& a, const VertexSet& b);
  friend VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
  friend VertexSet set_difference(const VertexSet& a, const VertexSet& b);

  auto operator<=>(const VertexSet&) const = default;
  bool operator==(const VertexSet&) const = default;

 private:
  std::vector<VertexId> members_;
};

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
 public:
  Graph() = default;

  /// Strict constructor: loops, duplicate edges and out-of-range endpoints
  /// throw PreconditionError. `labels` is empty or has exactly n entries.
  Graph(int n, std::vector<Edge> edges, std::vector<std::string> labels = {});

  /// Drops loops and merges parallel edges instead of rejecting them.
  static Graph simplified(int n, std::vector<Edge> edges,
                          std::vector<std::string> labels = {});

  int num_vertices() const { return n_; }
  std::size_t num_edges() const { return edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<VertexId>& neighbors(VertexId v) const { return adjacency_.at(v); }
  int degree(VertexId v) const { return static_cast<int>(adjacency_.at(v).size()); }
  bool has_edge(VertexId a, VertexId b) const;
  bool has_vertex(VertexId v) const { return v >= 0 && v < n_; }

  bool has_labels() const { return !labels_.empty(); }
  const std::vector<std::string>& labels() const { return labels_; }
  /// The vertex label, or its decimal id when the graph is unlabeled.
  std::string label(VertexId v) const;
  /// Reverse label lookup; also accepts a decimal id.
  std::optional<VertexId> find(const std::string& name) const;

  VertexSet vertex_set() const;

  bool operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_ && labels_ == other.labels_;
  }

 private:
  int n_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::vector<VertexId>> adjacency_;
  std::vector<std::string> labels_;
};

/// Result of contracting a vertex set: the new graph plus the old->new id map.
struct Contraction {
  Graph graph;
  std::vector<VertexId> image;  // image[old id] = new id
  VertexId merged = 0;          // id of z_S in the new graph
};

/// i_G(X): number of edges with both endpoints in X.
int induced_edge_count(const Graph& g, const VertexSet& x);

/// E_G(X).
std::vector<Edge> induced_edges(const Graph& g, const VertexSet& x);

/// G/S. z_S takes the smallest id of S; the remaining vertices are renumbered
/// densely in their original order. The result is simple.
Contraction contract_with_map(const Graph& g, const VertexSet& s);
Graph contract(const Graph& g, const VertexSet& s);

/// E \ F. Edges of F not present in G are ignored.
Graph delete_edges(const Graph& g, std::span<const Edge> f);

/// G - E_G(T).
Graph minus_T_edges(const Graph& g, const VertexSet& t);

/// Same vertex set, edge set replaced by `subset` (must be edges of g).
Graph edge_subgraph(const Graph& g, std::span<const Edge> subset);

/// Adds edges (ignored when already present).
Graph add_edges(const Graph& g, std::span<const Edge> extra);

/// Checks every member of `s` is a vertex of `g`.
void require_vertices(const Graph& g, const VertexSet& s, const char* what);

}  // namespace coinrig
