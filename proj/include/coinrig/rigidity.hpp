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

#include <gmpxx.h>

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "coinrig/graph.hpp"
#include "coinrig/random.hpp"

namespace coinrig {

using Rational = mpq_class;
using Integer = mpz_class;

/// p: V -> Q^d.
struct Realization {
  int dim = 0;
  std::vector<std::vector<Rational>> coords;  // coords[v].size() == dim

  int num_vertices() const { return static_cast<int>(coords.size()); }
  const std::vector<Rational>& point(VertexId v) const { return coords.at(v); }
};

/// Every vertex of T is placed at the point of `ref`.
struct CoincidenceSpec {
  VertexSet T;
  VertexId ref = 0;

  /// Uses the smallest member of T as reference vertex.
  static CoincidenceSpec of(const VertexSet& t);
};

/// |E| x d|V| matrix. Row i belongs to edge row_edges[i].
class RigidityMatrix {
 public:
  RigidityMatrix(int dim, int num_vertices, std::vector<Edge> row_edges,
                 std::vector<std::vector<Rational>> rows);

  int dim() const { return dim_; }
  int num_rows() const { return static_cast<int>(rows_.size()); }
  int num_cols() const { return cols_; }
  const std::vector<Rational>& row(int i) const { return rows_.at(i); }
  const std::vector<std::vector<Rational>>& rows() const { return rows_; }
  const std::vector<Edge>& row_edges() const { return row_edges_; }
  /// Row of edge e, or -1.
  int row_index(Edge e) const;

  /// Same matrix restricted to the given rows, in the given order.
  RigidityMatrix select_rows(std::span<const int> rows) const;

 private:
  int dim_;
  int cols_;
  std::vector<Edge> row_edges_;
  std::vector<std::vector<Rational>> rows_;
};

/// Bareiss elimination over Z; the matrix is consumed.
int bareiss_rank(std::vector<std::vector<Integer>> m);

/// Scales every row to integers (row-wise lcm of denominators).
std::vector<std::vector<Integer>> integer_rows(const RigidityMatrix& m);

RigidityMatrix rigidity_matrix(const Graph& g, const Realization& p);

int rank_exact(const RigidityMatrix& m);

inline constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

/// Rank over GF(prime). Never exceeds rank_exact.
int rank_modp(const RigidityMatrix& m, std::uint64_t prime = kMersenne61);

bool is_prime_u64(std::uint64_t n);

/// d|V| - C(d+1,2) for |V| >= d, C(|V|,2) otherwise.
long rigidity_target(int num_vertices, int dim);

bool is_infinitesimally_rigid(const Graph& g, const Realization& p);

inline constexpr std::int64_t kSampleRadius = std::int64_t{1} << 20;

/// Generic T-coincident realization with integer coordinates in
/// [-2^20, 2^20]; T - ref copies ref's point. Deterministic in `seed`.
Realization sample_T_coincident(const Graph& g, const CoincidenceSpec& spec, int dim,
                                std::uint64_t seed);

/// Ordinary generic realization (same as a singleton T).
Realization sample_generic(const Graph& g, int dim, std::uint64_t seed);

enum class RankMethod { automatic, exact_rational, prime_field };

std::string to_string(RankMethod m);

struct RankReport {
  int rank = 0;
  long target = 0;
  int edges = 0;
  bool rigid = false;
  bool independent = false;
  RankMethod method = RankMethod::exact_rational;
  int trials = 0;
  std::uint64_t seed = 0;
  /// Schwartz-Zippel bound on P(rank < generic rank) over all trials.
  double failure_bound = 1.0;
};

/// Largest vertex count for which `automatic` picks exact arithmetic.
inline constexpr int kExactVertexLimit = 30;

/// Max over `trials` sampled T-coincident realizations of the matrix rank.
/// Trial i uses derive_seed(seed, i), so both execution policies agree.
RankReport generic_rank(const Graph& g, const CoincidenceSpec& spec, int dim, int trials = 3,
                        std::uint64_t seed = 42, RankMethod method = RankMethod::automatic,
                        Execution exec = Execution::parallel);

/// Applies the T-coincident construction to a realization of G/T.
Realization lift_contracted(const Contraction& c, const Realization& contracted);

}  // namespace coinrig
