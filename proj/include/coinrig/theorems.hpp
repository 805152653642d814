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
#include <string>
#include <vector>

#include "coinrig/graph.hpp"
#include "coinrig/random.hpp"
#include "coinrig/rigidity.hpp"
#include "coinrig/sparsity.hpp"

namespace coinrig {

/// One planar rigidity test of the combinatorial characterization. An empty
/// S stands for G' itself, otherwise for G'/S.
struct RigidityCheck {
  VertexSet S;
  int vertices = 0;
  int edges = 0;
  int rank = 0;
  long target = 0;
  bool rigid = false;
};

struct CoincidenceVerdict {
  Graph graph;
  VertexSet T;
  std::optional<bool> combinatorial;
  std::optional<bool> algebraic;
  /// First failing check; an empty set means G' itself is flexible.
  std::optional<VertexSet> failing_S;
  std::vector<RigidityCheck> checks;
  std::vector<RankReport> reports;

  bool consistent() const { return !combinatorial || !algebraic || *combinatorial == *algebraic; }
};

/// Requires 2 <= |T| <= 3. G' = G minus the edges inside T; rigid iff G' and
/// every G'/S (S subset of T, |S| >= 2) are rigid in the plane.
CoincidenceVerdict coincident_rigid_combinatorial(const Graph& g, const VertexSet& t);

/// Sampled exact rank of a generic T-coincident realization in dimension d.
CoincidenceVerdict coincident_rigid_algebraic(const Graph& g, const VertexSet& t, int dim = 2,
                                              int trials = 3, std::uint64_t seed = 42,
                                              Execution exec = Execution::parallel);

/// Both procedures when the combinatorial one applies (d = 2, |T| in 2..3).
CoincidenceVerdict coincident_rigid(const Graph& g, const VertexSet& t, int dim = 2,
                                    int trials = 3, std::uint64_t seed = 42,
                                    Execution exec = Execution::parallel);

struct XvalOptions {
  int n_max = 7;
  std::vector<int> t_sizes{1, 2, 3};
  int samples = 500;
  std::uint64_t seed = 1;
  int trials = 3;
  Execution exec = Execution::parallel;
};

struct XvalCase {
  int index = 0;
  Graph graph;
  VertexSet T;
  bool mt_independent = false;
  bool rt_independent = false;
  int mt_rank = 0;  // greedy base of the mt oracle
  int rt_rank = 0;  // sampled generic T-coincident rank
  int queries = 0;
  int query_disagreements = 0;
  bool conjectural = false;

  bool agrees() const {
    return mt_independent == rt_independent && mt_rank == rt_rank && query_disagreements == 0;
  }
};

struct XvalReport {
  XvalOptions options;
  int samples = 0;
  std::vector<int> samples_per_t;  // indexed like options.t_sizes
  int independent_cases = 0;
  long queries = 0;
  int mismatches = 0;               // |T| <= 3
  int conjectural_mismatches = 0;   // |T| >= 4
  std::vector<XvalCase> mismatched;
  double seconds = 0;
};

/// Random (G, T) pairs; mt and rt oracles must agree on E, on every greedy
/// query, and on the rank of E.
XvalReport cross_validate(const XvalOptions& options);

/// Evaluates case `index` of a cross-validation run on its own.
XvalCase cross_validate_case(const XvalOptions& options, int index);

struct ConjectureCandidate {
  Graph graph;
  VertexSet T;
  bool mt_independent = false;
  std::optional<SparsityViolation> violation;
  std::vector<RankReport> reports;  // first sample, then each fresh seed
  bool confirmed = false;           // disagreement survived every fresh seed
};

struct ConjectureReport {
  int n_max = 0;
  int t_size = 0;
  int budget = 0;
  std::uint64_t seed = 0;
  int tested = 0;
  int quarantined = 0;
  std::vector<ConjectureCandidate> candidates;  // confirmed only
  double seconds = 0;
};

inline constexpr int kQuarantineSeeds = 10;

/// Random search for graphs where strong T-sparsity and sampled T-coincident
/// independence disagree, t_size >= 4.
ConjectureReport conjecture_search(int n_max, int t_size, int budget, std::uint64_t seed,
                                   Execution exec = Execution::parallel);

struct Fixture {
  std::string name;
  Graph graph;
  VertexSet T;
  std::optional<Realization> realization;
};

/// fig3-1 .. fig3-7, fig4, k55.
std::vector<Fixture> fixtures();
Fixture fixture(const std::string& name);

}  // namespace coinrig
