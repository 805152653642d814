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

#include "coinrig/constructions.hpp"

#include <algorithm>
#include <string>

#include "coinrig/error.hpp"

namespace coinrig {

namespace {

void require_vertex(const Graph& g, VertexId v, const char* what) {
  if (!g.has_vertex(v)) {
    throw PreconditionError(std::string(what) + " " + std::to_string(v) + " is not a vertex");
  }
}

std::vector<std::string> labels_with(const Graph& g, std::string name) {
  if (!g.has_labels()) return {};
  while (g.find(name)) name += "'";
  auto labels = g.labels();
  labels.push_back(std::move(name));
  return labels;
}

std::vector<Rational> random_point(Rng& rng, int dim) {
  std::vector<Rational> pt(dim);
  for (auto& c : pt) c = Rational(static_cast<long>(uniform_int(rng, -kSampleRadius, kSampleRadius)));
  return pt;
}

int rank_at(const Graph& g, const Realization& p) { return rank_exact(rigidity_matrix(g, p)); }

Graph remove_vertex(const Graph& g, VertexId z, std::vector<VertexId>& image) {
  image.assign(g.num_vertices(), -1);
  VertexId next = 0;
  std::vector<std::string> labels;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (v == z) continue;
    image[v] = next++;
    if (g.has_labels()) labels.push_back(g.label(v));
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e.u != z && e.v != z) edges.push_back(make_edge(image[e.u], image[e.v]));
  }
  return Graph(next, std::move(edges), std::move(labels));
}

}  // namespace

Graph zero_extension(const Graph& g, VertexId a, VertexId b) {
  require_vertex(g, a, "0-extension endpoint");
  require_vertex(g, b, "0-extension endpoint");
  if (a == b) throw PreconditionError("0-extension needs two distinct endpoints");
  const VertexId w = g.num_vertices();
  auto edges = g.edges();
  edges.push_back(make_edge(a, w));
  edges.push_back(make_edge(b, w));
  return Graph(w + 1, std::move(edges), labels_with(g, "w"));
}

Graph one_extension(const Graph& g, Edge uv, VertexId x) {
  uv = make_edge(uv.u, uv.v);
  if (!g.has_edge(uv.u, uv.v)) {
    throw PreconditionError("1-extension: [" + std::to_string(uv.u) + "," +
                            std::to_string(uv.v) + "] is not an edge");
  }
  require_vertex(g, x, "1-extension vertex");
  if (x == uv.u || x == uv.v) throw PreconditionError("1-extension: x must differ from u and v");
  const VertexId w = g.num_vertices();
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (e != uv) edges.push_back(e);
  }
  edges.push_back(make_edge(uv.u, w));
  edges.push_back(make_edge(uv.v, w));
  edges.push_back(make_edge(x, w));
  return Graph(w + 1, std::move(edges), labels_with(g, "w"));
}

Graph vertex_split(const Graph& g, const SplitSpec& spec) {
  require_vertex(g, spec.z, "split vertex");
  if (spec.U2.size() != 2) throw PreconditionError("vertex split needs |U2| = 2");
  const VertexSet n(g.neighbors(spec.z));
  const auto all = set_union(set_union(spec.U1, spec.U2), spec.U3);
  const std::size_t total = spec.U1.size() + spec.U2.size() + spec.U3.size();
  if (all != n || total != n.size()) {
    throw PreconditionError("U1, U2, U3 must partition the neighbourhood of the split vertex");
  }
  const VertexId z2 = g.num_vertices();
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    const bool to_u3 = (e.u == spec.z && spec.U3.contains(e.v)) ||
                       (e.v == spec.z && spec.U3.contains(e.u));
    if (!to_u3) edges.push_back(e);
  }
  for (VertexId x : set_union(spec.U2, spec.U3)) edges.push_back(make_edge(x, z2));
  return Graph(z2 + 1, std::move(edges), labels_with(g, g.label(spec.z) + "'"));
}

Replacement replace_rigid_subgraph(const Graph& g, const VertexSet& y,
                                   const std::vector<VertexSet>& partition) {
  require_vertices(g, y, "Y");
  if (partition.size() < 3) throw PreconditionError("replacement needs at least 3 parts");
  std::vector<int> part_of(g.num_vertices(), -1);
  std::size_t covered = 0;
  for (std::size_t i = 0; i < partition.size(); ++i) {
    if (partition[i].empty()) throw PreconditionError("partition has an empty part");
    for (VertexId v : partition[i]) {
      if (!y.contains(v)) throw PreconditionError("partition part leaves Y");
      if (part_of[v] != -1) throw PreconditionError("partition parts overlap");
      part_of[v] = static_cast<int>(i);
      ++covered;
    }
  }
  if (covered != y.size()) throw PreconditionError("partition does not cover Y");

  Replacement out;
  out.image.assign(g.num_vertices(), -1);
  VertexId next = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (part_of[v] == -1 || partition[part_of[v]].front() == v) out.image[v] = next++;
  }
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (part_of[v] != -1) out.image[v] = out.image[partition[part_of[v]].front()];
  }
  std::vector<std::string> labels;
  if (g.has_labels()) {
    labels.resize(next);
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      auto& l = labels[out.image[v]];
      if (!l.empty()) l += "+";
      l += g.label(v);
    }
  }
  std::vector<Edge> edges;
  for (const auto& e : g.edges()) {
    if (out.image[e.u] != out.image[e.v]) edges.push_back(make_edge(out.image[e.u], out.image[e.v]));
  }
  for (const auto& part : partition) out.representatives.push_back(out.image[part.front()]);
  for (std::size_t i = 0; i < out.representatives.size(); ++i) {
    for (std::size_t j = i + 1; j < out.representatives.size(); ++j) {
      edges.push_back(make_edge(out.representatives[i], out.representatives[j]));
    }
  }
  out.graph = Graph::simplified(next, std::move(edges), std::move(labels));
  return out;
}

Reduction reduce_low_degree(const Graph& g, const VertexSet& t, VertexId z, int cap) {
  require_vertex(g, z, "reduced vertex");
  require_vertices(g, t, "T");
  if (t.contains(z)) throw PreconditionError("reduced vertex must lie outside T");
  const auto& nz = g.neighbors(z);
  const auto in_t = std::count_if(nz.begin(), nz.end(), [&](VertexId x) { return t.contains(x); });
  if (in_t > 1) throw PreconditionError("reduced vertex has more than one neighbour in T");
  if (g.degree(z) != 2 && g.degree(z) != 3) {
    throw PreconditionError("reduced vertex must have degree 2 or 3");
  }
  if (!strongly_T_sparse(g, t, cap)) throw PreconditionError("graph is not strongly T-sparse");

  Reduction out;
  out.graph = remove_vertex(g, z, out.image);
  std::vector<VertexId> mapped;
  for (VertexId v : t) mapped.push_back(out.image[v]);
  out.T = VertexSet(std::move(mapped));
  if (g.degree(z) == 2) return out;

  VertexSet n(nz);
  const auto& ids = n.members();
  for (std::size_t i = 0; i < ids.size(); ++i) {
    for (std::size_t j = i + 1; j < ids.size(); ++j) {
      if (g.has_edge(ids[i], ids[j])) continue;
      const Edge xy = make_edge(out.image[ids[i]], out.image[ids[j]]);
      Graph candidate = add_edges(out.graph, std::span<const Edge>(&xy, 1));
      if (strongly_T_sparse(candidate, out.T, cap)) {
        out.graph = std::move(candidate);
        out.added = xy;
        return out;
      }
    }
  }
  throw InvariantViolation("no neighbour pair of vertex " + std::to_string(z) +
                           " keeps the reduced graph strongly T-sparse");
}

Graph henneberg_random(int n, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("Henneberg graphs need n >= 2");
  Rng rng(seed);
  std::vector<Edge> edges{{0, 1}};
  for (VertexId k = 2; k < n; ++k) {
    if (k == 2 || bernoulli(rng, 0.7)) {
      const auto a = static_cast<VertexId>(uniform_int(rng, 0, k - 1));
      auto b = static_cast<VertexId>(uniform_int(rng, 0, k - 2));
      if (b >= a) ++b;
      edges.push_back(make_edge(a, k));
      edges.push_back(make_edge(b, k));
    } else {
      const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(edges.size()) - 1));
      const Edge uv = edges[i];
      edges[i] = edges.back();
      edges.pop_back();
      VertexId x;
      do {
        x = static_cast<VertexId>(uniform_int(rng, 0, k - 1));
      } while (x == uv.u || x == uv.v);
      edges.push_back(make_edge(uv.u, k));
      edges.push_back(make_edge(uv.v, k));
      edges.push_back(make_edge(x, k));
    }
  }
  return Graph(n, std::move(edges));
}

Graph random_near_threshold(int n, std::uint64_t seed) {
  if (n < 2) throw PreconditionError("random graphs need n >= 2");
  Rng rng(seed);
  const long pairs = static_cast<long>(n) * (n - 1) / 2;
  const long target = std::clamp<long>(2L * n - 3 + uniform_int(rng, -3, 3), 1, pairs);
  const double prob = static_cast<double>(target) / static_cast<double>(pairs);
  std::vector<Edge> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (bernoulli(rng, prob)) edges.push_back({a, b});
    }
  }
  return Graph(n, std::move(edges));
}

Graph henneberg_with_noise(int n, int noise, std::uint64_t seed) {
  Graph base = henneberg_random(n, derive_seed(seed, 0));
  Rng rng(derive_seed(seed, 1));
  auto edges = base.edges();
  const int flips = static_cast<int>(uniform_int(rng, 0, std::max(noise, 0)));
  for (int f = 0; f < flips; ++f) {
    if (!edges.empty() && bernoulli(rng, 0.5)) {
      const auto i = static_cast<std::size_t>(uniform_int(rng, 0, static_cast<std::int64_t>(edges.size()) - 1));
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(i));
      continue;
    }
    const auto a = static_cast<VertexId>(uniform_int(rng, 0, n - 1));
    const auto b = static_cast<VertexId>(uniform_int(rng, 0, n - 1));
    const Edge e = make_edge(a, b);
    if (a != b && std::find(edges.begin(), edges.end(), e) == edges.end()) edges.push_back(e);
  }
  return Graph(n, std::move(edges));
}

bool collinear(const std::vector<Rational>& a, const std::vector<Rational>& b,
               const std::vector<Rational>& c) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      if ((b[i] - a[i]) * (c[j] - a[j]) != (b[j] - a[j]) * (c[i] - a[i])) return false;
    }
  }
  return true;
}

ExtensionCheck check_zero_extension(const Graph& g, const Realization& p, VertexId a,
                                    VertexId b, std::uint64_t seed) {
  const Graph next = zero_extension(g, a, b);
  Rng rng(seed);
  Realization q = p;
  q.coords.push_back(random_point(rng, p.dim));
  ExtensionCheck c;
  c.attempts = 1;
  c.hypothesis = !collinear(p.point(a), p.point(b), q.coords.back());
  c.rank_before = rank_at(g, p);
  c.rank_after = rank_at(next, q);
  c.edges_before = static_cast<int>(g.num_edges());
  c.edges_after = static_cast<int>(next.num_edges());
  c.holds = c.rank_after == c.rank_before + 2;
  return c;
}

ExtensionCheck check_one_extension(const Graph& g, const Realization& p, Edge uv, VertexId x,
                                   std::uint64_t seed, int attempts) {
  const Graph next = one_extension(g, uv, x);
  ExtensionCheck c;
  c.rank_before = rank_at(g, p);
  c.edges_before = static_cast<int>(g.num_edges());
  c.edges_after = static_cast<int>(next.num_edges());
  if (c.rank_before != c.edges_before) {
    throw PreconditionError("1-extension check needs an independent framework");
  }
  c.hypothesis = !collinear(p.point(uv.u), p.point(uv.v), p.point(x));
  Rng rng(seed);
  Realization q = p;
  q.coords.emplace_back();
  while (c.attempts < attempts && !c.holds) {
    ++c.attempts;
    q.coords.back() = random_point(rng, p.dim);
    c.rank_after = rank_at(next, q);
    c.holds = c.rank_after == c.edges_after;
  }
  return c;
}

ExtensionCheck check_vertex_split(const Graph& g, const Realization& p, const SplitSpec& spec) {
  const Graph next = vertex_split(g, spec);
  Realization q = p;
  q.coords.push_back(p.point(spec.z));
  ExtensionCheck c;
  c.attempts = 1;
  c.hypothesis = !collinear(p.point(spec.z), p.point(spec.U2.members()[0]),
                            p.point(spec.U2.members()[1]));
  c.rank_before = rank_at(g, p);
  c.rank_after = rank_at(next, q);
  c.edges_before = static_cast<int>(g.num_edges());
  c.edges_after = static_cast<int>(next.num_edges());
  c.holds = c.rank_after == c.rank_before + 2;
  return c;
}

ReplacementCheck check_replacement(const Graph& g, const VertexSet& y,
                                   const std::vector<VertexSet>& partition, std::uint64_t seed) {
  const auto r = replace_rigid_subgraph(g, y, partition);
  const Realization pr = sample_generic(r.graph, 2, derive_seed(seed, 0));
  ReplacementCheck c;
  c.replaced_rigid = is_infinitesimally_rigid(r.graph, pr);

  Realization lifted;
  lifted.dim = 2;
  for (VertexId v = 0; v < g.num_vertices(); ++v) lifted.coords.push_back(pr.point(r.image[v]));
  std::vector<Edge> clique;
  for (VertexId a : y) {
    for (VertexId b : y) {
      if (a < b) clique.push_back({a, b});
    }
  }
  c.completed_rigid = is_infinitesimally_rigid(add_edges(g, clique), lifted);

  Rng rng(derive_seed(seed, 1));
  for (int attempt = 0; attempt < 3 && !c.original_rigid; ++attempt) {
    Realization q = lifted;
    for (VertexId v : y) q.coords[v] = random_point(rng, 2);
    c.original_rigid = is_infinitesimally_rigid(g, q);
  }
  c.holds = !c.replaced_rigid || (c.completed_rigid && c.original_rigid);
  return c;
}

}  // namespace coinrig
