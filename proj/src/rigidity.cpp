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

#include "coinrig/rigidity.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>

#include "coinrig/error.hpp"

namespace coinrig {

CoincidenceSpec CoincidenceSpec::of(const VertexSet& t) {
  if (t.empty()) throw PreconditionError("coincidence set T must be nonempty");
  return {t, t.front()};
}

RigidityMatrix::RigidityMatrix(int dim, int num_vertices, std::vector<Edge> row_edges,
                               std::vector<std::vector<Rational>> rows)
    : dim_(dim), cols_(dim * num_vertices), row_edges_(std::move(row_edges)),
      rows_(std::move(rows)) {
  if (row_edges_.size() != rows_.size()) {
    throw PreconditionError("rigidity matrix: one edge per row required");
  }
}

int RigidityMatrix::row_index(Edge e) const {
  e = make_edge(e.u, e.v);
  auto it = std::find(row_edges_.begin(), row_edges_.end(), e);
  return it == row_edges_.end() ? -1 : static_cast<int>(it - row_edges_.begin());
}

RigidityMatrix RigidityMatrix::select_rows(std::span<const int> rows) const {
  std::vector<Edge> edges;
  std::vector<std::vector<Rational>> picked;
  for (int r : rows) {
    edges.push_back(row_edges_.at(r));
    picked.push_back(rows_.at(r));
  }
  return RigidityMatrix(dim_, dim_ == 0 ? 0 : cols_ / dim_, std::move(edges), std::move(picked));
}

int bareiss_rank(std::vector<std::vector<Integer>> m) {
  const int rows = static_cast<int>(m.size());
  if (rows == 0) return 0;
  const int cols = static_cast<int>(m.front().size());
  Integer prev = 1;
  Integer tmp;
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (sgn(m[i][c]) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(m[rank], m[pivot]);
    const auto& prow = m[rank];
    for (int i = rank + 1; i < rows; ++i) {
      auto& row = m[i];
      for (int k = c + 1; k < cols; ++k) {
        // row[k] = (prow[c]*row[k] - row[c]*prow[k]) / prev, exact
        mpz_mul(tmp.get_mpz_t(), prow[c].get_mpz_t(), row[k].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), row[c].get_mpz_t(), prow[k].get_mpz_t());
        mpz_divexact(row[k].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      row[c] = 0;
    }
    prev = prow[c];
    ++rank;
  }
  return rank;
}

std::vector<std::vector<Integer>> integer_rows(const RigidityMatrix& m) {
  std::vector<std::vector<Integer>> out;
  out.reserve(m.num_rows());
  for (const auto& row : m.rows()) {
    Integer scale = 1;
    for (const auto& x : row) {
      mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), x.get_den_mpz_t());
    }
    std::vector<Integer> r(row.size());
    for (std::size_t k = 0; k < row.size(); ++k) {
      r[k] = row[k].get_num() * (scale / row[k].get_den());
    }
    out.push_back(std::move(r));
  }
  return out;
}

RigidityMatrix rigidity_matrix(const Graph& g, const Realization& p) {
  if (p.dim < 1) throw PreconditionError("realization dimension must be >= 1");
  if (p.num_vertices() != g.num_vertices()) {
    throw PreconditionError("realization covers " + std::to_string(p.num_vertices()) +
                            " vertices, graph has " + std::to_string(g.num_vertices()));
  }
  const int d = p.dim;
  std::vector<std::vector<Rational>> rows;
  rows.reserve(g.num_edges());
  for (const auto& e : g.edges()) {
    const auto& pu = p.point(e.u);
    const auto& pv = p.point(e.v);
    if (static_cast<int>(pu.size()) != d || static_cast<int>(pv.size()) != d) {
      throw PreconditionError("missing coordinates for an endpoint of an edge");
    }
    std::vector<Rational> row(static_cast<std::size_t>(d) * g.num_vertices());
    for (int k = 0; k < d; ++k) {
      Rational diff = pu[k] - pv[k];
      row[e.u * d + k] = diff;
      row[e.v * d + k] = -diff;
    }
    rows.push_back(std::move(row));
  }
  return RigidityMatrix(d, g.num_vertices(), g.edges(), std::move(rows));
}

int rank_exact(const RigidityMatrix& m) { return bareiss_rank(integer_rows(m)); }

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 powmod(u64 a, u64 e, u64 p) {
  u64 r = 1 % p;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

u64 reduce(const Integer& x, u64 p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);  // only valid for p < 2^64 / fits ulong
  return r.get_ui();
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
  if (n < 2) return false;
  for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % small == 0) return n == small;
  }
  u64 d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    u64 x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

int rank_modp(const RigidityMatrix& m, std::uint64_t prime) {
  if (!is_prime_u64(prime)) throw PreconditionError(std::to_string(prime) + " is not prime");
  const int rows = m.num_rows();
  const int cols = m.num_cols();
  std::vector<std::vector<u64>> a(rows, std::vector<u64>(cols));
  for (int i = 0; i < rows; ++i) {
    for (int k = 0; k < cols; ++k) {
      const auto& x = m.row(i)[k];
      u64 den = reduce(x.get_den(), prime);
      if (den == 0) throw PreconditionError("denominator vanishes modulo the chosen prime");
      a[i][k] = mulmod(reduce(x.get_num(), prime), powmod(den, prime - 2, prime), prime);
    }
  }
  int rank = 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int pivot = -1;
    for (int i = rank; i < rows; ++i) {
      if (a[i][c] != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    const u64 inv = powmod(a[rank][c], prime - 2, prime);
    for (int i = rank + 1; i < rows; ++i) {
      if (a[i][c] == 0) continue;
      const u64 f = mulmod(a[i][c], inv, prime);
      for (int k = c; k < cols; ++k) {
        a[i][k] = (a[i][k] + prime - mulmod(f, a[rank][k], prime)) % prime;
      }
    }
    ++rank;
  }
  return rank;
}

long rigidity_target(int num_vertices, int dim) {
  const long n = num_vertices;
  const long d = dim;
  if (n >= d) return d * n - d * (d + 1) / 2;
  return n * (n - 1) / 2;
}

bool is_infinitesimally_rigid(const Graph& g, const Realization& p) {
  return rank_exact(rigidity_matrix(g, p)) == rigidity_target(g.num_vertices(), p.dim);
}

Realization sample_T_coincident(const Graph& g, const CoincidenceSpec& spec, int dim,
                                std::uint64_t seed) {
  if (dim < 1) throw PreconditionError("dimension must be >= 1");
  require_vertices(g, spec.T, "T");
  if (!spec.T.empty() && !spec.T.contains(spec.ref)) {
    throw PreconditionError("reference vertex must belong to T");
  }
  Rng rng(seed);
  Realization p;
  p.dim = dim;
  p.coords.assign(g.num_vertices(), std::vector<Rational>(dim));
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (spec.T.contains(v) && v != spec.ref) continue;
    for (int k = 0; k < dim; ++k) {
      p.coords[v][k] = Rational(static_cast<long>(uniform_int(rng, -kSampleRadius, kSampleRadius)));
    }
  }
  for (VertexId v : spec.T) p.coords[v] = p.coords[spec.ref];
  return p;
}

Realization sample_generic(const Graph& g, int dim, std::uint64_t seed) {
  return sample_T_coincident(g, CoincidenceSpec{{}, 0}, dim, seed);
}

std::string to_string(RankMethod m) {
  switch (m) {
    case RankMethod::automatic:
      return "automatic";
    case RankMethod::exact_rational:
      return "exact-rational";
    case RankMethod::prime_field:
      return "prime-field";
  }
  return "unknown";
}

RankReport generic_rank(const Graph& g, const CoincidenceSpec& spec, int dim, int trials,
                        std::uint64_t seed, RankMethod method, Execution exec) {
  if (trials < 1) throw PreconditionError("generic_rank needs at least one trial");
  if (method == RankMethod::automatic) {
    method = g.num_vertices() <= kExactVertexLimit ? RankMethod::exact_rational
                                                    : RankMethod::prime_field;
  }
  int best = 0;
#pragma omp parallel for schedule(dynamic) reduction(max : best) if (exec == Execution::parallel)
  for (int t = 0; t < trials; ++t) {
    const auto p = sample_T_coincident(g, spec, dim, derive_seed(seed, t));
    const auto m = rigidity_matrix(g, p);
    const int r = method == RankMethod::exact_rational ? rank_exact(m) : rank_modp(m);
    best = std::max(best, r);
  }

  RankReport rep;
  rep.rank = best;
  rep.target = rigidity_target(g.num_vertices(), dim);
  rep.edges = static_cast<int>(g.num_edges());
  rep.rigid = rep.rank == rep.target;
  rep.independent = rep.rank == rep.edges;
  rep.method = method;
  rep.trials = trials;
  rep.seed = seed;
  // A nonzero r-minor is a polynomial of degree <= r in the sampled coordinates.
  const double degree = std::min<double>(g.num_edges(), static_cast<double>(dim) * g.num_vertices());
  const double per_trial = std::min(1.0, degree / static_cast<double>(2 * kSampleRadius + 1));
  rep.failure_bound = std::pow(per_trial, trials);
  return rep;
}

Realization lift_contracted(const Contraction& c, const Realization& contracted) {
  if (contracted.num_vertices() != c.graph.num_vertices()) {
    throw PreconditionError("realization does not match the contracted graph");
  }
  Realization p;
  p.dim = contracted.dim;
  p.coords.reserve(c.image.size());
  for (VertexId img : c.image) p.coords.push_back(contracted.point(img));
  return p;
}

}  // namespace coinrig
