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
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "coinrig/graph.hpp"
#include "coinrig/rigidity.hpp"
#include "coinrig/sparsity.hpp"

namespace coinrig {

/// Independence test over subsets of a host graph's edges.
class IndependenceOracle {
 public:
  virtual ~IndependenceOracle() = default;

  virtual std::string name() const = 0;
  virtual const Graph& ground() const = 0;
  /// Non-const: the algebraic oracle may resample its realization.
  virtual bool independent(std::span<const Edge> subset) = 0;
  /// Set when the oracle's matroid property rests on an open conjecture.
  virtual bool conjectural() const { return false; }
};

/// Generic 2-dimensional rigidity matroid via the pebble game.
class LamanOracle final : public IndependenceOracle {
 public:
  explicit LamanOracle(Graph g) : g_(std::move(g)) {}
  std::string name() const override { return "laman"; }
  const Graph& ground() const override { return g_; }
  bool independent(std::span<const Edge> subset) override;

 private:
  Graph g_;
};

/// M_T: I is independent iff (V, I) is strongly T-sparse.
class SparsityOracle final : public IndependenceOracle {
 public:
  SparsityOracle(Graph g, VertexSet t, int cap = kDefaultEnumerationCap);
  std::string name() const override { return "mt"; }
  const Graph& ground() const override { return g_; }
  bool independent(std::span<const Edge> subset) override;
  bool conjectural() const override { return t_.size() >= 4; }
  const VertexSet& T() const { return t_; }

 private:
  Graph g_;
  VertexSet t_;
  int cap_;
};

/// R_T: rows of a sampled generic T-coincident rigidity matrix. One
/// realization serves every query; a shortfall triggers up to `resamples`
/// fresh realizations, and the first one certifying independence replaces
/// the shared sample.
class RigidityOracle final : public IndependenceOracle {
 public:
  RigidityOracle(Graph g, VertexSet t, int dim = 2, std::uint64_t seed = 42, int resamples = 2);
  std::string name() const override { return "rt"; }
  const Graph& ground() const override { return g_; }
  bool independent(std::span<const Edge> subset) override;

  int samples_drawn() const { return samples_drawn_; }

 private:
  void draw(std::uint64_t seed);
  bool independent_in(const std::vector<std::vector<Integer>>& rows,
                      std::span<const Edge> subset) const;

  Graph g_;
  CoincidenceSpec spec_;
  int dim_;
  std::uint64_t seed_;
  int resamples_;
  int samples_drawn_ = 0;
  std::map<Edge, int> row_of_;
  std::vector<std::vector<Integer>> rows_;
};

struct MatroidRankCertificate {
  int rank = 0;
  std::vector<Edge> base;
  std::optional<AugmentedFamily> dual;
};

/// Greedy base of E' scanned in canonical (lexicographic) order.
MatroidRankCertificate greedy_rank(IndependenceOracle& oracle, std::span<const Edge> eprime);

/// Greedy base scanning `order` as given.
MatroidRankCertificate greedy_rank_ordered(IndependenceOracle& oracle,
                                           std::span<const Edge> order);

struct CoverMinResult {
  int rank = 0;
  AugmentedFamily witness;
  /// False when |T| lies outside 2..3, where the formula is not a theorem.
  bool proven_range = true;
};

inline constexpr int kCoverMinCap = 10;

/// min val_S(L) over S subset of T with |S| >= 2 and 1-thin augmented
/// S-compatible families L covering E' \ E_T. The H-empty family is admitted
/// for every S. For |T| = 1 only the H-empty families are available.
CoverMinResult mt_rank_cover_min(const Graph& g, std::span<const Edge> eprime, const VertexSet& t,
                                 int cap = kCoverMinCap);

/// Maximum number of edge subsets circuits_upto may test.
inline constexpr long kCircuitScanCap = 2'000'000;

/// All minimal dependent edge sets of size <= k, smallest first.
std::vector<std::vector<Edge>> circuits_upto(IndependenceOracle& oracle, int k,
                                             long scan_cap = kCircuitScanCap);

}  // namespace coinrig
