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

#include "coinrig/matroid.hpp"

#include <algorithm>
#include <string>

#include "coinrig/bitmask.hpp"
#include "coinrig/error.hpp"
#include "coinrig/pebble.hpp"

namespace coinrig {

namespace {

void require_ground_edges(const Graph& g, std::span<const Edge> subset) {
  for (const auto& e : subset) {
    if (!g.has_edge(e.u, e.v)) throw PreconditionError("edge outside the oracle's ground set");
  }
}

}  // namespace

bool LamanOracle::independent(std::span<const Edge> subset) {
  require_ground_edges(g_, subset);
  PebbleGame game(g_.num_vertices());
  for (const auto& e : subset) {
    if (!game.try_insert(make_edge(e.u, e.v))) return false;
  }
  return true;
}

SparsityOracle::SparsityOracle(Graph g, VertexSet t, int cap)
    : g_(std::move(g)), t_(std::move(t)), cap_(cap) {
  if (t_.empty()) throw PreconditionError("T must be nonempty");
  require_vertices(g_, t_, "T");
  if (g_.num_vertices() > cap_) {
    throw CapExceeded("mt oracle: " + std::to_string(g_.num_vertices()) +
                      " vertices exceeds enumeration cap " + std::to_string(cap_));
  }
}

bool SparsityOracle::independent(std::span<const Edge> subset) {
  return strongly_T_sparse(edge_subgraph(g_, subset), t_, cap_);
}

RigidityOracle::RigidityOracle(Graph g, VertexSet t, int dim, std::uint64_t seed, int resamples)
    : g_(std::move(g)), spec_(CoincidenceSpec::of(t)), dim_(dim), seed_(seed),
      resamples_(resamples) {
  require_vertices(g_, spec_.T, "T");
  for (int i = 0; i < static_cast<int>(g_.num_edges()); ++i) row_of_[g_.edges()[i]] = i;
  draw(derive_seed(seed_, 0));
}

void RigidityOracle::draw(std::uint64_t seed) {
  rows_ = integer_rows(rigidity_matrix(g_, sample_T_coincident(g_, spec_, dim_, seed)));
  ++samples_drawn_;
}

bool RigidityOracle::independent_in(const std::vector<std::vector<Integer>>& rows,
                                    std::span<const Edge> subset) const {
  std::vector<std::vector<Integer>> picked;
  picked.reserve(subset.size());
  for (const auto& e : subset) {
    auto it = row_of_.find(make_edge(e.u, e.v));
    if (it == row_of_.end()) throw PreconditionError("edge outside the oracle's ground set");
    picked.push_back(rows[it->second]);
  }
  return bareiss_rank(std::move(picked)) == static_cast<int>(subset.size());
}

bool RigidityOracle::independent(std::span<const Edge> subset) {
  if (subset.empty()) return true;
  if (static_cast<long>(subset.size()) > static_cast<long>(dim_) * g_.num_vertices()) {
    require_ground_edges(g_, subset);
    return false;
  }
  if (independent_in(rows_, subset)) return true;
  for (int r = 0; r < resamples_; ++r) {
    auto saved = std::move(rows_);
    draw(derive_seed(seed_, static_cast<std::uint64_t>(samples_drawn_)));
    if (independent_in(rows_, subset)) return true;
    rows_ = std::move(saved);
  }
  return false;
}

MatroidRankCertificate greedy_rank_ordered(IndependenceOracle& oracle,
                                           std::span<const Edge> order) {
  std::vector<Edge> seen(order.begin(), order.end());
  for (auto& e : seen) e = make_edge(e.u, e.v);
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw PreconditionError("greedy order lists an edge twice");
  }
  require_ground_edges(oracle.ground(), order);

  MatroidRankCertificate cert;
  for (const auto& e : order) {
    cert.base.push_back(make_edge(e.u, e.v));
    if (!oracle.independent(cert.base)) cert.base.pop_back();
  }
  cert.rank = static_cast<int>(cert.base.size());
  return cert;
}

MatroidRankCertificate greedy_rank(IndependenceOracle& oracle, std::span<const Edge> eprime) {
  std::vector<Edge> order(eprime.begin(), eprime.end());
  for (auto& e : order) e = make_edge(e.u, e.v);
  std::sort(order.begin(), order.end());
  order.erase(std::unique(order.begin(), order.end()), order.end());
  return greedy_rank_ordered(oracle, order);
}

namespace {

using detail::bit;
using detail::from_mask;
using detail::Mask;
using detail::popcount;
using detail::to_mask;

class CoverMinimizer {
 public:
  CoverMinimizer(int n, std::vector<Edge> targets) : n_(n), targets_(std::move(targets)) {}

  // Tries every partial partition of V \ S into blocks B_i (H_i = S u B_i).
  void scan(Mask s) {
    s_ = s;
    free_.clear();
    for (int v = 0; v < n_; ++v) {
      if (!(s & bit(v))) free_.push_back(v);
    }
    blocks_.clear();
    recurse(0, 2 * (popcount(s) - 1));
  }

  void seed_with(int value, AugmentedFamily witness) {
    best_ = value;
    witness_ = std::move(witness);
  }

  int best() const { return best_; }
  const AugmentedFamily& witness() const { return witness_; }

 private:
  void recurse(std::size_t i, int h_value) {
    if (h_value >= best_) return;
    if (i == free_.size()) {
      if (!blocks_.empty()) evaluate(h_value);
      return;
    }
    const Mask v = bit(free_[i]);
    recurse(i + 1, h_value);
    for (auto& b : blocks_) {
      b |= v;
      recurse(i + 1, h_value + 2);
      b ^= v;
    }
    blocks_.push_back(v);
    recurse(i + 1, h_value + 1);
    blocks_.pop_back();
  }

  void evaluate(int h_value) {
    Mask hull = s_;
    for (Mask b : blocks_) hull |= b;
    std::vector<Edge> rest;
    for (const auto& e : targets_) {
      const Mask ends = bit(e.u) | bit(e.v);
      const bool in_h = std::any_of(blocks_.begin(), blocks_.end(),
                                    [&](Mask b) { return (ends & ~(s_ | b)) == 0; });
      if (in_h) continue;
      if ((ends & hull) == ends) return;  // joins two blocks: no X may take both ends
      rest.push_back(e);
    }
    auto cover = min_thin_cover(n_, rest, from_mask(hull));
    if (!cover) return;
    const int total = h_value + cover->value;
    if (total >= best_) return;
    best_ = total;
    witness_.S = from_mask(s_);
    witness_.H.clear();
    for (Mask b : blocks_) witness_.H.push_back(from_mask(s_ | b));
    std::sort(witness_.H.begin(), witness_.H.end());
    witness_.X = std::move(cover->sets);
  }

  int n_;
  std::vector<Edge> targets_;
  Mask s_ = 0;
  std::vector<int> free_;
  std::vector<Mask> blocks_;
  int best_ = 1 << 29;
  AugmentedFamily witness_;
};

}  // namespace

CoverMinResult mt_rank_cover_min(const Graph& g, std::span<const Edge> eprime, const VertexSet& t,
                                 int cap) {
  if (g.num_vertices() > cap || g.num_vertices() > 11) {
    throw CapExceeded("cover minimum: " + std::to_string(g.num_vertices()) +
                      " vertices exceeds cap " + std::to_string(std::min(cap, 11)));
  }
  if (t.empty()) throw PreconditionError("T must be nonempty");
  require_vertices(g, t, "T");
  require_ground_edges(g, eprime);

  std::vector<Edge> targets;
  for (const auto& e : eprime) {
    if (!(t.contains(e.u) && t.contains(e.v))) targets.push_back(make_edge(e.u, e.v));
  }
  std::sort(targets.begin(), targets.end());
  targets.erase(std::unique(targets.begin(), targets.end()), targets.end());

  std::vector<Mask> subsets;
  const Mask tm = to_mask(t);
  for (Mask sub = tm; sub; sub = (sub - 1) & tm) {
    if (popcount(sub) >= 2) subsets.push_back(sub);
  }
  std::sort(subsets.begin(), subsets.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return detail::lex_less(a, b);
  });

  CoverMinimizer minimizer(g.num_vertices(), targets);
  auto plain = min_thin_cover(g.num_vertices(), targets);
  AugmentedFamily empty_h;
  empty_h.S = subsets.empty() ? t : from_mask(subsets.front());
  empty_h.X = plain->sets;
  minimizer.seed_with(plain->value, empty_h);
  for (Mask s : subsets) minimizer.scan(s);

  CoverMinResult out;
  out.rank = minimizer.best();
  out.witness = minimizer.witness();
  out.proven_range = t.size() >= 2 && t.size() <= 3;
  return out;
}

std::vector<std::vector<Edge>> circuits_upto(IndependenceOracle& oracle, int k, long scan_cap) {
  const auto& edges = oracle.ground().edges();
  const int m = static_cast<int>(edges.size());
  k = std::min(k, m);
  double total = 0;
  double binom = 1;
  for (int s = 1; s <= k; ++s) {
    binom = binom * (m - s + 1) / s;
    total += binom;
  }
  if (total > static_cast<double>(scan_cap)) {
    throw CapExceeded("circuit scan would test " + std::to_string(static_cast<long>(total)) +
                      " subsets (cap " + std::to_string(scan_cap) + ")");
  }

  std::vector<std::vector<Edge>> circuits;
  std::vector<int> idx;
  std::vector<Edge> subset;
  for (int s = 1; s <= k; ++s) {
    idx.resize(s);
    for (int i = 0; i < s; ++i) idx[i] = i;
    while (true) {
      subset.clear();
      for (int i : idx) subset.push_back(edges[i]);
      const bool has_known = std::any_of(circuits.begin(), circuits.end(), [&](const auto& c) {
        return std::includes(subset.begin(), subset.end(), c.begin(), c.end());
      });
      // Every proper subset is circuit-free, hence independent.
      if (!has_known && !oracle.independent(subset)) circuits.push_back(subset);

      int pos = s - 1;
      while (pos >= 0 && idx[pos] == m - s + pos) --pos;
      if (pos < 0) break;
      ++idx[pos];
      for (int i = pos + 1; i < s; ++i) idx[i] = idx[i - 1] + 1;
    }
  }
  return circuits;
}

}  // namespace coinrig
