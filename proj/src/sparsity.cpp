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

#include "coinrig/sparsity.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <string>
#include <unordered_map>

#include "coinrig/bitmask.hpp"
#include "coinrig/error.hpp"

namespace coinrig {

using detail::bit;
using detail::from_mask;
using detail::lowest;
using detail::Mask;
using detail::MaskGraph;
using detail::popcount;
using detail::to_mask;

int val_set(const VertexSet& x, const VertexSet& s) {
  if (x.size() < 2) throw PreconditionError("val is only defined on sets of size >= 2");
  return x.subset_of(s) ? 0 : 2 * static_cast<int>(x.size()) - 3;
}

void validate(const CompatibleFamily& h) {
  if (h.S.empty()) throw PreconditionError("compatible family needs a nonempty S");
  if (h.sets.empty()) throw PreconditionError("compatible family must be nonempty");
  for (const auto& member : h.sets) {
    if (!h.S.proper_subset_of(member)) {
      throw PreconditionError("family member is not a proper superset of S");
    }
  }
}

void validate(const AugmentedFamily& l) {
  if (l.S.size() < 2) throw PreconditionError("augmented family needs |S| >= 2");
  if (!l.H.empty()) validate(CompatibleFamily{l.S, l.H});
  for (const auto& x : l.X) {
    if (x.size() < 2) throw PreconditionError("augmented family set X_i has fewer than two vertices");
  }
}

int val_family(const CompatibleFamily& h) {
  validate(h);
  int total = 2 * (static_cast<int>(h.S.size()) - 1);
  for (const auto& member : h.sets) {
    total += 2 * static_cast<int>(member.size() - h.S.size()) - 1;
  }
  return total;
}

int val_augmented(const AugmentedFamily& l) {
  validate(l);
  int total = l.H.empty() ? 0 : val_family(CompatibleFamily{l.S, l.H});
  for (const auto& x : l.X) total += 2 * static_cast<int>(x.size()) - 3;
  return total;
}

bool is_one_thin(const AugmentedFamily& l) {
  for (std::size_t i = 0; i < l.X.size(); ++i) {
    for (std::size_t j = i + 1; j < l.X.size(); ++j) {
      if (set_intersection(l.X[i], l.X[j]).size() > 1) return false;
    }
  }
  VertexSet hull;
  for (std::size_t i = 0; i < l.H.size(); ++i) {
    hull = set_union(hull, l.H[i]);
    for (std::size_t j = i + 1; j < l.H.size(); ++j) {
      if (set_intersection(l.H[i], l.H[j]) != l.S) return false;
    }
  }
  for (const auto& x : l.X) {
    if (set_intersection(x, hull).size() > 1) return false;
  }
  return true;
}

bool covers(const std::vector<VertexSet>& sets, Edge e) {
  return std::any_of(sets.begin(), sets.end(),
                     [&](const VertexSet& s) { return s.contains(e.u) && s.contains(e.v); });
}

bool covers(const AugmentedFamily& l, Edge e) { return covers(l.H, e) || covers(l.X, e); }

bool coverage_contained(const std::vector<VertexSet>& a, const std::vector<VertexSet>& b) {
  for (const auto& s : a) {
    const auto& m = s.members();
    for (std::size_t i = 0; i < m.size(); ++i) {
      for (std::size_t j = i + 1; j < m.size(); ++j) {
        if (!covers(b, Edge{m[i], m[j]})) return false;
      }
    }
  }
  return true;
}

int induced_edge_count(const Graph& g, const CompatibleFamily& h) {
  return static_cast<int>(
      std::count_if(g.edges().begin(), g.edges().end(), [&](Edge e) { return covers(h.sets, e); }));
}

int induced_edge_count(const Graph& g, const AugmentedFamily& l) {
  return static_cast<int>(
      std::count_if(g.edges().begin(), g.edges().end(), [&](Edge e) { return covers(l, e); }));
}

namespace {

void check_cap(const Graph& g, int cap) {
  if (cap > kMaxEnumerationCap) {
    throw PreconditionError("enumeration cap above " + std::to_string(kMaxEnumerationCap));
  }
  if (g.num_vertices() > cap) {
    throw CapExceeded("graph has " + std::to_string(g.num_vertices()) +
                      " vertices, enumeration cap is " + std::to_string(cap));
  }
}

// Exhaustive S-sparsity over a precomputed induced-count table.
class SparsityKernel {
 public:
  SparsityKernel(int n, const std::vector<int>& cnt) : n_(n), cnt_(cnt) {}

  // Lexicographically smallest X with i(X) > val_S(X), or 0.
  Mask set_violation(Mask s, bool want_smallest) const {
    const Mask full = full_mask();
    Mask best = 0;
    for (Mask x = 1; x <= full; ++x) {
      const int size = popcount(x);
      if (size < 2) continue;
      const int rhs = (x & ~s) == 0 ? 0 : 2 * size - 3;
      if (cnt_[x] <= rhs) continue;
      if (!want_smallest) return x;
      if (best == 0 || detail::lex_less(x, best)) best = x;
    }
    return best;
  }

  // Max-weight packing of blocks of V \ S; block B weighs
  // i(S u B) - i(S) - (2|B| - 1). A nonempty packing beating 2(|S|-1) - i(S)
  // is a violating family.
  bool family_violation_exists(Mask s) const {
    const Mask free = full_mask() & ~s;
    if (free == 0) return false;
    std::vector<int> ids;
    for (Mask r = free; r; r &= r - 1) ids.push_back(lowest(r));
    const int m = static_cast<int>(ids.size());
    const std::size_t count = std::size_t{1} << m;
    std::vector<Mask> expand(count, 0);
    std::vector<int> weight(count, 0);
    for (std::size_t idx = 1; idx < count; ++idx) {
      const int low = std::countr_zero(idx);
      expand[idx] = expand[idx & (idx - 1)] | bit(ids[low]);
      weight[idx] = cnt_[s | expand[idx]] - cnt_[s] - (2 * popcount(expand[idx]) - 1);
    }
    std::vector<int> best(count, 0);
    for (std::size_t idx = 1; idx < count; ++idx) {
      const std::size_t low = idx & (~idx + 1);
      const std::size_t rest = idx ^ low;
      int value = best[rest];
      for (std::size_t sub = rest;; sub = (sub - 1) & rest) {
        const std::size_t block = sub | low;
        value = std::max(value, weight[block] + best[idx ^ block]);
        if (sub == 0) break;
      }
      best[idx] = value;
    }
    const std::size_t all = count - 1;
    int nonempty = std::numeric_limits<int>::min();
    for (std::size_t block = 1; block < count; ++block) {
      nonempty = std::max(nonempty, weight[block] + best[all ^ block]);
    }
    return nonempty + cnt_[s] > 2 * (popcount(s) - 1);
  }

  // First violating family in generation order: vertices of V \ S in
  // increasing order, each either skipped, added to an existing block, or
  // opening a new block.
  std::vector<Mask> family_witness(Mask s) const {
    std::vector<int> ids;
    for (Mask r = full_mask() & ~s; r; r &= r - 1) ids.push_back(lowest(r));
    std::vector<Mask> blocks;
    const int limit = 2 * (popcount(s) - 1);
    auto violated = [&]() {
      int lhs = cnt_[s];
      int rhs = limit;
      for (Mask b : blocks) {
        lhs += cnt_[s | b] - cnt_[s];
        rhs += 2 * popcount(b) - 1;
      }
      return lhs > rhs;
    };
    auto search = [&](auto&& self, std::size_t i) -> bool {
      if (i == ids.size()) return !blocks.empty() && violated();
      const Mask v = bit(ids[i]);
      if (self(self, i + 1)) return true;
      for (auto& b : blocks) {
        b |= v;
        if (self(self, i + 1)) return true;
        b ^= v;
      }
      blocks.push_back(v);
      if (self(self, i + 1)) return true;
      blocks.pop_back();
      return false;
    };
    if (!search(search, 0)) throw InvariantViolation("family violation vanished during witness search");
    return blocks;
  }

  std::optional<SparsityViolation> check(Mask s) const {
    if (Mask x = set_violation(s, true)) {
      SparsityViolation v;
      v.kind = SparsityViolation::Kind::set;
      v.S = from_mask(s);
      v.set_witness = from_mask(x);
      v.lhs = cnt_[x];
      v.rhs = (x & ~s) == 0 ? 0 : 2 * popcount(x) - 3;
      return v;
    }
    if (!family_violation_exists(s)) return std::nullopt;
    SparsityViolation v;
    v.kind = SparsityViolation::Kind::family;
    v.S = from_mask(s);
    v.family_witness.S = v.S;
    int lhs = cnt_[s];
    for (Mask b : family_witness(s)) {
      v.family_witness.sets.push_back(from_mask(s | b));
      lhs += cnt_[s | b] - cnt_[s];
    }
    std::sort(v.family_witness.sets.begin(), v.family_witness.sets.end());
    v.lhs = lhs;
    v.rhs = val_family(v.family_witness);
    return v;
  }

  bool sparse(Mask s) const {
    return set_violation(s, false) == 0 && !family_violation_exists(s);
  }

 private:
  Mask full_mask() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }

  int n_;
  const std::vector<int>& cnt_;
};

// Nonempty subsets of t ordered by size, then lexicographically.
std::vector<Mask> ordered_subsets(Mask t) {
  std::vector<Mask> out;
  for (Mask sub = t; sub; sub = (sub - 1) & t) out.push_back(sub);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    if (popcount(a) != popcount(b)) return popcount(a) < popcount(b);
    return detail::lex_less(a, b);
  });
  return out;
}

}  // namespace

std::optional<SparsityViolation> is_S_sparse(const Graph& g, const VertexSet& s, int cap) {
  check_cap(g, cap);
  if (s.empty()) throw PreconditionError("S must be nonempty");
  require_vertices(g, s, "S");
  const MaskGraph mg(g);
  const auto cnt = mg.induced_table();
  return SparsityKernel(g.num_vertices(), cnt).check(to_mask(s));
}

std::optional<SparsityViolation> is_strongly_T_sparse(const Graph& g, const VertexSet& t, int cap) {
  check_cap(g, cap);
  if (t.empty()) throw PreconditionError("T must be nonempty");
  require_vertices(g, t, "T");
  const MaskGraph mg(g);
  const auto cnt = mg.induced_table();
  const SparsityKernel kernel(g.num_vertices(), cnt);
  for (Mask s : ordered_subsets(to_mask(t))) {
    if (auto v = kernel.check(s)) return v;
  }
  return std::nullopt;
}

bool strongly_T_sparse(const Graph& g, const VertexSet& t, int cap) {
  check_cap(g, cap);
  if (t.empty()) throw PreconditionError("T must be nonempty");
  require_vertices(g, t, "T");
  const MaskGraph mg(g);
  const auto cnt = mg.induced_table();
  const SparsityKernel kernel(g.num_vertices(), cnt);
  for (Mask s : ordered_subsets(to_mask(t))) {
    if (!kernel.sparse(s)) return false;
  }
  return true;
}

CompatibleFamily merge_overlapping(const CompatibleFamily& h) {
  validate(h);
  const auto& sets = h.sets;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (set_intersection(sets[i], sets[j]).size() < h.S.size() + 1) continue;
      CompatibleFamily out = h;
      out.sets[i] = set_union(sets[i], sets[j]);
      out.sets.erase(out.sets.begin() + static_cast<std::ptrdiff_t>(j));
      if (val_family(out) > val_family(h) - 1) {
        throw InvariantViolation("merging overlapping members did not decrease val");
      }
      if (!coverage_contained(h.sets, out.sets)) {
        throw InvariantViolation("merging overlapping members lost coverage");
      }
      return out;
    }
  }
  throw PreconditionError("no pair of members meets in more than S");
}

CompatibleFamily absorb_set(const CompatibleFamily& h, const VertexSet& y) {
  validate(h);
  if (y.size() < 2) throw PreconditionError("Y must have at least two vertices");
  for (std::size_t i = 0; i < h.sets.size(); ++i) {
    for (std::size_t j = i + 1; j < h.sets.size(); ++j) {
      if (set_intersection(h.sets[i], h.sets[j]) != h.S) {
        throw PreconditionError("members must pairwise intersect exactly in S");
      }
    }
  }
  const std::size_t ys = set_intersection(y, h.S).size();
  std::vector<std::size_t> hits(h.sets.size());
  for (std::size_t i = 0; i < h.sets.size(); ++i) hits[i] = set_intersection(y, h.sets[i]).size();
  const bool heavy = std::any_of(hits.begin(), hits.end(), [](std::size_t c) { return c >= 2; });

  CompatibleFamily out{h.S, {}};
  const int val_y = val_set(y, h.S);
  if (ys <= 1 && heavy) {
    VertexSet merged = y;
    for (std::size_t i = 0; i < h.sets.size(); ++i) {
      if (hits[i] >= 2) {
        merged = set_union(merged, h.sets[i]);
      } else {
        out.sets.push_back(h.sets[i]);
      }
    }
    out.sets.push_back(merged);
  } else if (ys == 0 && !heavy &&
             std::count(hits.begin(), hits.end(), std::size_t{1}) >= 2) {
    const auto a = static_cast<std::size_t>(std::find(hits.begin(), hits.end(), 1) - hits.begin());
    const auto b = static_cast<std::size_t>(
        std::find(hits.begin() + static_cast<std::ptrdiff_t>(a) + 1, hits.end(), 1) - hits.begin());
    for (std::size_t i = 0; i < h.sets.size(); ++i) {
      if (i == a) {
        out.sets.push_back(set_union(set_union(h.sets[a], h.sets[b]), y));
      } else if (i != b) {
        out.sets.push_back(h.sets[i]);
      }
    }
    if (val_family(out) != val_family(h) + val_y) {
      throw InvariantViolation("absorbing Y through two singleton hits changed the value");
    }
  } else {
    throw PreconditionError("Y matches neither absorption case");
  }

  if (val_family(out) > val_family(h) + val_y) {
    throw InvariantViolation("absorbed family exceeds val(H) + val(Y)");
  }
  auto before = h.sets;
  before.push_back(y);
  if (!coverage_contained(before, out.sets)) {
    throw InvariantViolation("absorbed family does not cover H and Y");
  }
  return out;
}

CompatibleFamily combine_families(const CompatibleFamily& h1, const CompatibleFamily& h2) {
  validate(h1);
  validate(h2);
  if (set_intersection(h1.S, h2.S).empty()) throw PreconditionError("S1 and S2 are disjoint");

  const std::size_t k = h1.sets.size();
  const std::size_t l = h2.sets.size();
  std::vector<std::size_t> parent(k + l);
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (std::size_t i = 0; i < k; ++i) {
    const auto outside1 = set_difference(h1.sets[i], h1.S);
    for (std::size_t j = 0; j < l; ++j) {
      if (!set_intersection(outside1, set_difference(h2.sets[j], h2.S)).empty()) {
        parent[root(i)] = root(k + j);
      }
    }
  }

  const VertexSet s12 = set_union(h1.S, h2.S);
  std::vector<std::size_t> order;
  std::vector<VertexSet> members;
  for (std::size_t x = 0; x < k + l; ++x) {
    const std::size_t r = root(x);
    auto it = std::find(order.begin(), order.end(), r);
    const VertexSet& member = x < k ? h1.sets[x] : h2.sets[x - k];
    if (it == order.end()) {
      order.push_back(r);
      members.push_back(set_union(member, s12));
    } else {
      auto& slot = members[static_cast<std::size_t>(it - order.begin())];
      slot = set_union(slot, member);
    }
  }

  CompatibleFamily out{s12, {}};
  for (auto& m : members) {
    if (m.size() > s12.size()) out.sets.push_back(std::move(m));
  }
  if (out.sets.empty()) {
    throw PreconditionError("both families lie inside S1 u S2; no compatible family exists");
  }
  auto before = h1.sets;
  before.insert(before.end(), h2.sets.begin(), h2.sets.end());
  if (!coverage_contained(before, out.sets)) {
    throw InvariantViolation("combined family does not cover its inputs");
  }
  return out;
}

namespace {

// Memoised search over 1-thin covers. State: the set of vertex pairs already
// claimed by a chosen member. Members are restricted to sets in which every
// vertex has at least two required edges inside the set (any other member
// can be split into a cheaper cover).
class ThinCoverSearch {
 public:
  static constexpr int kInfeasible = 1 << 29;

  ThinCoverSearch(int n, std::span<const Edge> edges, Mask restricted)
      : n_(n), restricted_(restricted), required_adj_(n, 0), pair_(n, std::vector<int>(n, -1)) {
    int next = 0;
    for (int b = 0; b < n; ++b) {
      for (int a = 0; a < b; ++a) {
        pair_[a][b] = pair_[b][a] = next++;
        ends_.push_back({a, b});
      }
    }
    for (const auto& e : edges) {
      if (e.u == e.v || e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
        throw PreconditionError("cover search: invalid edge");
      }
      required_ |= bit(pair_[e.u][e.v]);
      required_adj_[e.u] |= bit(e.v);
      required_adj_[e.v] |= bit(e.u);
    }
  }

  int solve(Mask used) {
    const Mask remaining = required_ & ~used;
    if (remaining == 0) return 0;
    if (auto it = memo_.find(used); it != memo_.end()) return it->second.first;

    const auto [a, b] = ends_[lowest(remaining)];
    const Mask base = bit(a) | bit(b);
    int best = kInfeasible;
    Mask choice = 0;
    if (popcount(base & restricted_) <= 1) {
      Mask candidates = 0;
      for (int c = 0; c < n_; ++c) {
        if (base & bit(c)) continue;
        if (used & (bit(pair_[a][c]) | bit(pair_[b][c]))) continue;
        if ((bit(c) & restricted_) && (base & restricted_)) continue;
        if (popcount(required_adj_[c]) < 2) continue;
        candidates |= bit(c);
      }
      for (Mask extra = candidates;; extra = (extra - 1) & candidates) {
        const Mask x = base | extra;
        if (admissible(x, used)) {
          const int value = 2 * popcount(x) - 3 + solve(used | pairs_of(x));
          if (value < best) {
            best = value;
            choice = x;
          }
        }
        if (extra == 0) break;
      }
    }
    memo_.emplace(used, std::make_pair(best, choice));
    return best;
  }

  std::vector<VertexSet> members(Mask used) {
    std::vector<VertexSet> out;
    while ((required_ & ~used) != 0) {
      solve(used);
      const Mask x = memo_.at(used).second;
      out.push_back(from_mask(x));
      used |= pairs_of(x);
    }
    return out;
  }

 private:
  bool admissible(Mask x, Mask used) const {
    if (popcount(x & restricted_) > 1) return false;
    if (pairs_of(x) & used) return false;
    if (popcount(x) >= 3) {
      for (Mask r = x; r; r &= r - 1) {
        if (popcount(required_adj_[lowest(r)] & x) < 2) return false;
      }
    }
    return true;
  }

  Mask pairs_of(Mask x) const {
    Mask out = 0;
    for (Mask r = x; r; r &= r - 1) {
      const int v = lowest(r);
      for (Mask s = r & (r - 1); s; s &= s - 1) out |= bit(pair_[v][lowest(s)]);
    }
    return out;
  }

  int n_;
  Mask restricted_;
  Mask required_ = 0;
  std::vector<Mask> required_adj_;
  std::vector<std::vector<int>> pair_;
  std::vector<std::pair<int, int>> ends_;
  std::unordered_map<Mask, std::pair<int, Mask>> memo_;
};

}  // namespace

std::optional<ThinCover> min_thin_cover(int n, std::span<const Edge> edges,
                                        const VertexSet& restricted) {
  if (n > 11) throw CapExceeded("1-thin cover search supports at most 11 vertices");
  ThinCoverSearch search(n, edges, to_mask(restricted));
  const int value = search.solve(0);
  if (value >= ThinCoverSearch::kInfeasible) return std::nullopt;
  return ThinCover{value, search.members(0)};
}

int ly_rank_bruteforce(const Graph& g, std::span<const Edge> eprime, int cap) {
  if (g.num_vertices() > cap) {
    throw CapExceeded("Lovasz-Yemini brute force: " + std::to_string(g.num_vertices()) +
                      " vertices exceeds cap " + std::to_string(cap));
  }
  for (const auto& e : eprime) {
    if (!g.has_edge(e.u, e.v)) throw PreconditionError("E' contains an edge outside G");
  }
  auto cover = min_thin_cover(g.num_vertices(), eprime);
  return cover->value;
}

}  // namespace coinrig
