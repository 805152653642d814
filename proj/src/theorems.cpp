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

#include "coinrig/theorems.hpp"

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <numeric>
#include <utility>

#include "coinrig/bitmask.hpp"
#include "coinrig/constructions.hpp"
#include "coinrig/error.hpp"
#include "coinrig/matroid.hpp"
#include "coinrig/pebble.hpp"

namespace coinrig {

namespace {

RigidityCheck planar_check(const Graph& g, VertexSet s) {
  RigidityCheck c;
  c.S = std::move(s);
  c.vertices = g.num_vertices();
  c.edges = static_cast<int>(g.num_edges());
  c.rank = pebble_rank_23(g);
  c.target = rigidity_target(g.num_vertices(), 2);
  c.rigid = c.rank == c.target;
  return c;
}

// Subsets of T with at least two members, by size then lexicographically.
std::vector<VertexSet> contractible_subsets(const VertexSet& t) {
  std::vector<detail::Mask> masks;
  const detail::Mask tm = detail::to_mask(t);
  for (detail::Mask sub = tm; sub; sub = (sub - 1) & tm) {
    if (detail::popcount(sub) >= 2) masks.push_back(sub);
  }
  std::sort(masks.begin(), masks.end(), [](detail::Mask a, detail::Mask b) {
    if (detail::popcount(a) != detail::popcount(b)) {
      return detail::popcount(a) < detail::popcount(b);
    }
    return detail::lex_less(a, b);
  });
  std::vector<VertexSet> out;
  for (auto m : masks) out.push_back(detail::from_mask(m));
  return out;
}

VertexSet random_subset(Rng& rng, int n, int k) {
  std::vector<VertexId> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  std::shuffle(ids.begin(), ids.end(), rng);
  ids.resize(k);
  return VertexSet(std::move(ids));
}

Graph random_instance(Rng& rng, int n, std::uint64_t seed) {
  if (bernoulli(rng, 0.5)) return random_near_threshold(n, seed);
  return henneberg_with_noise(n, 3, seed);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

CoincidenceVerdict coincident_rigid_combinatorial(const Graph& g, const VertexSet& t) {
  if (t.size() < 2 || t.size() > 3) {
    throw PreconditionError("combinatorial test needs 2 <= |T| <= 3");
  }
  require_vertices(g, t, "T");
  CoincidenceVerdict out;
  out.graph = g;
  out.T = t;
  const Graph reduced = minus_T_edges(g, t);
  out.checks.push_back(planar_check(reduced, {}));
  for (const auto& s : contractible_subsets(t)) {
    out.checks.push_back(planar_check(contract(reduced, s), s));
  }
  for (const auto& c : out.checks) {
    if (!c.rigid) {
      out.failing_S = c.S;
      break;
    }
  }
  out.combinatorial = !out.failing_S.has_value();
  return out;
}

CoincidenceVerdict coincident_rigid_algebraic(const Graph& g, const VertexSet& t, int dim,
                                              int trials, std::uint64_t seed, Execution exec) {
  CoincidenceVerdict out;
  out.graph = g;
  out.T = t;
  out.reports.push_back(
      generic_rank(g, CoincidenceSpec::of(t), dim, trials, seed, RankMethod::automatic, exec));
  out.algebraic = out.reports.back().rigid;
  return out;
}

CoincidenceVerdict coincident_rigid(const Graph& g, const VertexSet& t, int dim, int trials,
                                    std::uint64_t seed, Execution exec) {
  auto out = coincident_rigid_algebraic(g, t, dim, trials, seed, exec);
  if (dim == 2 && t.size() >= 2 && t.size() <= 3) {
    auto comb = coincident_rigid_combinatorial(g, t);
    out.combinatorial = comb.combinatorial;
    out.failing_S = comb.failing_S;
    out.checks = std::move(comb.checks);
  }
  return out;
}

namespace {

void check_options(const XvalOptions& options) {
  if (options.t_sizes.empty()) throw PreconditionError("no T sizes given");
  for (int t : options.t_sizes) {
    if (t < 1) throw PreconditionError("|T| must be at least 1");
    if (options.n_max < std::max(3, t + 1)) {
      throw PreconditionError("n_max " + std::to_string(options.n_max) +
                              " is too small for |T| = " + std::to_string(t));
    }
  }
}

}  // namespace

XvalCase cross_validate_case(const XvalOptions& options, int index) {
  check_options(options);
  const std::uint64_t seed = derive_seed(options.seed, static_cast<std::uint64_t>(index));
  Rng rng(seed);
  XvalCase c;
  c.index = index;
  const int t = options.t_sizes[static_cast<std::size_t>(index) % options.t_sizes.size()];
  const int n_min = std::max(3, t + 1);
  const int n = static_cast<int>(uniform_int(rng, n_min, options.n_max));
  c.graph = random_instance(rng, n, derive_seed(seed, 1));
  c.T = random_subset(rng, n, t);
  c.conjectural = t >= 4;

  c.mt_independent = strongly_T_sparse(c.graph, c.T);
  const auto report = generic_rank(c.graph, CoincidenceSpec::of(c.T), 2, options.trials,
                                   derive_seed(seed, 2), RankMethod::automatic, Execution::serial);
  c.rt_independent = report.independent;
  c.rt_rank = report.rank;

  SparsityOracle mt(c.graph, c.T);
  RigidityOracle rt(c.graph, c.T, 2, derive_seed(seed, 3));
  std::vector<Edge> base;
  for (const auto& e : c.graph.edges()) {
    base.push_back(e);
    const bool a = mt.independent(base);
    const bool b = rt.independent(base);
    ++c.queries;
    if (a != b) ++c.query_disagreements;
    if (!a) base.pop_back();
  }
  c.mt_rank = static_cast<int>(base.size());
  return c;
}

XvalReport cross_validate(const XvalOptions& options) {
  check_options(options);
  const auto start = std::chrono::steady_clock::now();
  XvalReport out;
  out.options = options;
  out.samples = std::max(options.samples, 0);
  std::vector<XvalCase> cases(static_cast<std::size_t>(out.samples));
  const bool parallel = options.exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < out.samples; ++i) cases[i] = cross_validate_case(options, i);

  out.samples_per_t.assign(options.t_sizes.size(), 0);
  for (auto& c : cases) {
    ++out.samples_per_t[static_cast<std::size_t>(c.index) % options.t_sizes.size()];
    if (c.mt_independent) ++out.independent_cases;
    out.queries += c.queries;
    if (c.agrees()) continue;
    if (c.conjectural) {
      ++out.conjectural_mismatches;
    } else {
      ++out.mismatches;
    }
    out.mismatched.push_back(std::move(c));
  }
  out.seconds = seconds_since(start);
  return out;
}

ConjectureReport conjecture_search(int n_max, int t_size, int budget, std::uint64_t seed,
                                   Execution exec) {
  if (t_size < 4) throw PreconditionError("conjecture search needs |T| >= 4");
  if (budget > 0 && n_max < t_size + 1) throw PreconditionError("n_max must exceed |T|");
  if (n_max > kDefaultEnumerationCap) {
    throw CapExceeded("conjecture search is capped at " + std::to_string(kDefaultEnumerationCap) +
                      " vertices");
  }
  const auto start = std::chrono::steady_clock::now();
  ConjectureReport out;
  out.n_max = n_max;
  out.t_size = t_size;
  out.budget = std::max(budget, 0);
  out.seed = seed;
  std::vector<std::optional<ConjectureCandidate>> slots(static_cast<std::size_t>(out.budget));
  const bool parallel = exec == Execution::parallel;
#pragma omp parallel for schedule(dynamic) if (parallel)
  for (int i = 0; i < out.budget; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
    Rng rng(s);
    const int n = static_cast<int>(uniform_int(rng, t_size + 1, n_max));
    ConjectureCandidate c;
    c.graph = random_instance(rng, n, derive_seed(s, 1));
    c.T = random_subset(rng, n, t_size);
    c.violation = is_strongly_T_sparse(c.graph, c.T);
    c.mt_independent = !c.violation.has_value();
    const auto spec = CoincidenceSpec::of(c.T);
    c.reports.push_back(generic_rank(c.graph, spec, 2, 3, derive_seed(s, 2),
                                     RankMethod::automatic, Execution::serial));
    if (c.reports.back().independent == c.mt_independent) continue;
    bool rt_independent = false;
    for (int k = 0; k < kQuarantineSeeds; ++k) {
      c.reports.push_back(generic_rank(c.graph, spec, 2, 1, derive_seed(s, 100 + k),
                                       RankMethod::exact_rational, Execution::serial));
      rt_independent = rt_independent || c.reports.back().independent;
    }
    c.confirmed = rt_independent != c.mt_independent;
    slots[i] = std::move(c);
  }
  out.tested = out.budget;
  for (auto& slot : slots) {
    if (!slot) continue;
    ++out.quarantined;
    if (slot->confirmed) out.candidates.push_back(std::move(*slot));
  }
  out.seconds = seconds_since(start);
  return out;
}

namespace {

Graph named_graph(const std::vector<std::string>& names,
                  const std::vector<std::pair<std::string, std::string>>& edges) {
  auto id = [&](const std::string& s) {
    return static_cast<VertexId>(std::find(names.begin(), names.end(), s) - names.begin());
  };
  std::vector<Edge> out;
  for (const auto& [a, b] : edges) out.push_back(make_edge(id(a), id(b)));
  return Graph(static_cast<int>(names.size()), std::move(out), names);
}

Realization fig3_realization() {
  const std::vector<std::pair<int, int>> pts{{0, 0}, {0, 0}, {0, 0}, {0, 1}, {1, 0},
                                             {2, 3}, {1, 3}, {1, 4}, {2, 2}};
  Realization p;
  p.dim = 2;
  for (auto [x, y] : pts) p.coords.push_back({Rational(x), Rational(y)});
  return p;
}

}  // namespace

std::vector<Fixture> fixtures() {
  const std::vector<std::string> fig3_names{"u", "v", "w", "a", "b", "c", "d", "e", "f"};
  using Wiring = std::vector<std::pair<std::string, std::string>>;
  const Wiring cycle{{"u", "a"}, {"v", "a"}, {"v", "b"}, {"w", "b"}, {"u", "c"}, {"w", "c"}};
  const std::vector<Wiring> inner{
      {{"d", "a"}, {"d", "u"}, {"e", "b"}, {"e", "v"}, {"e", "d"},
       {"f", "c"}, {"f", "w"}, {"f", "d"}, {"f", "e"}},
      {{"d", "u"}, {"d", "b"}, {"e", "v"}, {"e", "d"}, {"e", "a"},
       {"f", "w"}, {"f", "d"}, {"f", "e"}, {"f", "c"}},
      {{"d", "u"}, {"d", "b"}, {"e", "v"}, {"e", "d"}, {"e", "c"},
       {"f", "w"}, {"f", "d"}, {"f", "e"}, {"f", "a"}},
      {{"d", "u"}, {"e", "v"}, {"e", "d"}, {"e", "a"}, {"e", "b"},
       {"f", "w"}, {"f", "d"}, {"f", "e"}, {"f", "c"}},
      {{"d", "u"}, {"e", "v"}, {"e", "d"}, {"e", "a"}, {"e", "c"},
       {"f", "w"}, {"f", "d"}, {"f", "e"}, {"f", "b"}},
      {{"d", "u"}, {"d", "b"}, {"e", "v"}, {"e", "d"}, {"e", "a"},
       {"e", "c"}, {"f", "w"}, {"f", "d"}, {"f", "e"}},
      {{"d", "u"}, {"e", "v"}, {"e", "d"}, {"e", "a"}, {"e", "b"},
       {"e", "c"}, {"f", "w"}, {"f", "d"}, {"f", "e"}},
  };
  std::vector<Fixture> out;
  for (std::size_t i = 0; i < inner.size(); ++i) {
    Wiring edges = cycle;
    edges.insert(edges.end(), inner[i].begin(), inner[i].end());
    out.push_back({"fig3-" + std::to_string(i + 1), named_graph(fig3_names, edges), {0, 1, 2},
                   fig3_realization()});
  }

  out.push_back({"fig4",
                 named_graph({"u", "v", "w", "a", "b", "c", "d", "e"},
                             {{"b", "a"}, {"b", "u"}, {"b", "v"}, {"c", "a"}, {"c", "u"},
                              {"c", "v"}, {"d", "a"}, {"d", "u"}, {"d", "v"}, {"e", "b"},
                              {"e", "c"}, {"w", "e"}, {"w", "d"}}),
                 {0, 1, 2},
                 std::nullopt});

  std::vector<std::string> k55_names{"u", "x1", "x2", "x3", "x4", "v", "y1", "y2", "y3", "y4"};
  std::vector<Edge> k55_edges;
  for (VertexId a = 0; a < 5; ++a) {
    for (VertexId b = 5; b < 10; ++b) k55_edges.push_back({a, b});
  }
  out.push_back({"k55", Graph(10, std::move(k55_edges), k55_names), {0, 5}, std::nullopt});
  return out;
}

Fixture fixture(const std::string& name) {
  for (auto& f : fixtures()) {
    if (f.name == name) return f;
  }
  throw PreconditionError("unknown fixture '" + name + "'");
}

}  // namespace coinrig
