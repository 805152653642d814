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

#include <optional>
#include <span>
#include <vector>

#include "coinrig/graph.hpp"

namespace coinrig {

/// S-compatible family: every member is a proper superset of S.
struct CompatibleFamily {
  VertexSet S;
  std::vector<VertexSet> sets;
};

/// {H, X_1..X_k} over S. H may be empty.
struct AugmentedFamily {
  VertexSet S;
  std::vector<VertexSet> H;
  std::vector<VertexSet> X;
};

struct SparsityViolation {
  enum class Kind { set, family };
  Kind kind = Kind::set;
  VertexSet S;
  VertexSet set_witness;            // kind == set
  CompatibleFamily family_witness;  // kind == family
  int lhs = 0;                      // i_G of the witness
  int rhs = 0;                      // val_S of the witness
};

inline constexpr int kDefaultEnumerationCap = 12;
/// Hard ceiling for any cap; the enumeration tables are 2^n sized.
inline constexpr int kMaxEnumerationCap = 24;

/// val_S(X): 2|X|-3 when X is not inside S, 0 otherwise. Requires |X| >= 2.
int val_set(const VertexSet& x, const VertexSet& s);

/// sum(2|H_i \ S| - 1) + 2(|S| - 1).
int val_family(const CompatibleFamily& h);

/// val_S(H) + sum(2|X_i| - 3); the family term is omitted when H is empty.
int val_augmented(const AugmentedFamily& l);

/// Checks (T.1), (T.2) and (T.3).
bool is_one_thin(const AugmentedFamily& l);

/// Validates member sizes / containment; throws PreconditionError.
void validate(const CompatibleFamily& h);
void validate(const AugmentedFamily& l);

/// True when some member of `sets` contains both endpoints of e.
bool covers(const std::vector<VertexSet>& sets, Edge e);
bool covers(const AugmentedFamily& l, Edge e);

/// cov(a) is a subset of cov(b).
bool coverage_contained(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b);

/// i_G(H) and i_G(L): number of edges induced by some member.
int induced_edge_count(const Graph& g, const CompatibleFamily& h);
int induced_edge_count(const Graph& g, const AugmentedFamily& l);

/// Exhaustive S-sparsity test. Set violations are reported first (the
/// lexicographically smallest witness); family violations are found among
/// families whose members pairwise meet exactly in S, which is complete.
std::optional<SparsityViolation> is_S_sparse(const Graph& g, const VertexSet& s,
                                             int cap = kDefaultEnumerationCap);

/// First violation over nonempty S subset of T, S ordered by size then
/// lexicographically.
std::optional<SparsityViolation> is_strongly_T_sparse(const Graph& g, const VertexSet& t,
                                                      int cap = kDefaultEnumerationCap);

/// Verdict-only variant used by the matroid oracle. Same semantics.
bool strongly_T_sparse(const Graph& g, const VertexSet& t, int cap = kDefaultEnumerationCap);

/// Replaces the first pair (i < j) with |H_i & H_j| >= |S|+1 by its union.
CompatibleFamily merge_overlapping(const CompatibleFamily& h);

/// Combines a family whose members meet exactly in S with a set Y, following
/// either the |Y & S| <= 1 / |Y & H_i| >= 2 construction or the Y & S empty /
/// two singleton hits construction.
CompatibleFamily absorb_set(const CompatibleFamily& h, const VertexSet& y);

/// (S1 u S2)-compatible family from the components of the bipartite overlap
/// graph between the two families. Requires S1 & S2 nonempty.
CompatibleFamily combine_families(const CompatibleFamily& h1, const CompatibleFamily& h2);

struct ThinCover {
  int value = 0;
  std::vector<VertexSet> sets;
};

/// Minimum sum(2|X|-3) over 1-thin covers of `edges` in which every member
/// contains at most one vertex of `restricted`. nullopt when no such cover
/// exists. Requires n <= 11.
std::optional<ThinCover> min_thin_cover(int n, std::span<const Edge> edges,
                                        const VertexSet& restricted = {});

inline constexpr int kLovaszYeminiCap = 10;

/// Rank of E' in R_2(G) as the minimum over 1-thin covers.
int ly_rank_bruteforce(const Graph& g, std::span<const Edge> eprime,
                       int cap = kLovaszYeminiCap);

}  // namespace coinrig
