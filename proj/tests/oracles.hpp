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

// Reference implementations used only by tests. Each one is deliberately
// naive and shares no code with the library beyond the Graph type.

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <functional>
#include <vector>

#include "coinrig/graph.hpp"

namespace oracle {

using coinrig::Edge;

inline int popcnt(std::uint32_t x) { return __builtin_popcount(x); }

/// Gaussian elimination over the rationals with partial search for a pivot.
inline int gauss_rank(std::vector<std::vector<mpq_class>> m) {
  int rank = 0;
  const int rows = static_cast<int>(m.size());
  const int cols = rows ? static_cast<int>(m[0].size()) : 0;
  for (int c = 0; c < cols && rank < rows; ++c) {
    int piv = -1;
    for (int r = rank; r < rows; ++r) {
      if (m[r][c] != 0) {
        piv = r;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(m[piv], m[rank]);
    for (int r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const mpq_class f = m[r][c] / m[rank][c];
      for (int k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

/// Rigidity matrix written out entry by entry.
inline std::vector<std::vector<mpq_class>> rigidity_rows(
    int n, const std::vector<Edge>& edges, const std::vector<std::vector<mpq_class>>& p) {
  const int d = p.empty() ? 0 : static_cast<int>(p[0].size());
  std::vector<std::vector<mpq_class>> m;
  for (const auto& e : edges) {
    std::vector<mpq_class> row(static_cast<std::size_t>(d * n), 0);
    for (int k = 0; k < d; ++k) {
      row[e.u * d + k] = p[e.u][k] - p[e.v][k];
      row[e.v * d + k] = p[e.v][k] - p[e.u][k];
    }
    m.push_back(std::move(row));
  }
  return m;
}

inline int induced(const std::vector<Edge>& edges, std::uint32_t x) {
  int c = 0;
  for (const auto& e : edges) {
    if ((x >> e.u & 1) && (x >> e.v & 1)) ++c;
  }
  return c;
}

/// (2,3)-sparsity by scanning every vertex subset.
inline bool laman_independent(int n, const std::vector<Edge>& edges) {
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    if (popcnt(x) >= 2 && induced(edges, x) > 2 * popcnt(x) - 3) return false;
  }
  return true;
}

/// Rank of the (2,3)-sparsity matroid: size of the largest sparse subset.
inline int laman_rank(int n, const std::vector<Edge>& edges) {
  int best = 0;
  const int m = static_cast<int>(edges.size());
  for (std::uint32_t pick = 0; pick < (1u << m); ++pick) {
    if (popcnt(pick) <= best) continue;
    std::vector<Edge> sub;
    for (int i = 0; i < m; ++i) {
      if (pick >> i & 1) sub.push_back(edges[i]);
    }
    if (laman_independent(n, sub)) best = popcnt(pick);
  }
  return best;
}

inline int val_set(std::uint32_t x, std::uint32_t s) {
  return (x & ~s) == 0 ? 0 : 2 * popcnt(x) - 3;
}

/// Strong T-sparsity with families ranging over every collection of proper
/// supersets of S (no restriction to disjoint-outside-S shapes). Small n only.
inline bool strongly_sparse(int n, const std::vector<Edge>& edges, std::uint32_t t) {
  const std::uint32_t all = (1u << n) - 1;
  for (std::uint32_t x = 0; x <= all; ++x) {
    if (popcnt(x) < 2) continue;
    for (std::uint32_t s = t; s; s = (s - 1) & t) {
      if (induced(edges, x) > val_set(x, s)) return false;
    }
  }
  for (std::uint32_t s = t; s; s = (s - 1) & t) {
    std::vector<std::uint32_t> supers;
    for (std::uint32_t x = 0; x <= all; ++x) {
      if ((x & s) == s && x != s) supers.push_back(x);
    }
    const int k = static_cast<int>(supers.size());
    for (std::uint64_t fam = 1; fam < (std::uint64_t{1} << k); ++fam) {
      int value = 2 * (popcnt(s) - 1);
      int covered = 0;
      for (const auto& e : edges) {
        bool in = false;
        for (int i = 0; i < k && !in; ++i) {
          in = (fam >> i & 1) && (supers[i] >> e.u & 1) && (supers[i] >> e.v & 1);
        }
        covered += in;
      }
      for (int i = 0; i < k; ++i) {
        if (fam >> i & 1) value += 2 * popcnt(supers[i] & ~s) - 1;
      }
      if (covered > value) return false;
    }
  }
  return true;
}

/// Minimum of sum(2|X|-3) over collections of sets (|X| >= 2, pairwise
/// meeting in at most one vertex) covering `edges`. Plain backtracking.
inline int thin_cover_min(int n, const std::vector<Edge>& edges) {
  std::vector<std::uint32_t> cands;
  for (std::uint32_t x = 0; x < (1u << n); ++x) {
    if (popcnt(x) >= 2 && induced(edges, x) > 0) cands.push_back(x);
  }
  int best = 1 << 20;
  std::vector<std::uint32_t> chosen;
  std::function<void(std::size_t, int)> go = [&](std::size_t i, int value) {
    if (value >= best) return;
    bool all = true;
    for (const auto& e : edges) {
      bool in = false;
      for (auto x : chosen) in = in || ((x >> e.u & 1) && (x >> e.v & 1));
      all = all && in;
    }
    if (all) {
      best = value;
      return;
    }
    for (std::size_t j = i; j < cands.size(); ++j) {
      bool ok = true;
      for (auto x : chosen) ok = ok && popcnt(x & cands[j]) <= 1;
      if (!ok) continue;
      chosen.push_back(cands[j]);
      go(j + 1, value + 2 * popcnt(cands[j]) - 3);
      chosen.pop_back();
    }
  };
  go(0, 0);
  return best;
}

}  // namespace oracle
