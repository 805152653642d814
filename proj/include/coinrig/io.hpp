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
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "coinrig/graph.hpp"
#include "coinrig/matroid.hpp"
#include "coinrig/rigidity.hpp"
#include "coinrig/sparsity.hpp"
#include "coinrig/theorems.hpp"

namespace coinrig {

using Json = nlohmann::ordered_json;

struct GraphDocument {
  Graph graph;
  std::optional<VertexSet> T;
};

/// {"n": int, "edges": [[i, j], ...], "T": [ids], "labels": {"i": "name"}}
GraphDocument parse_graph_json(std::string_view text);
/// First line "n m", then m lines "i j".
GraphDocument parse_edge_list(std::string_view text);
/// JSON when the first non-blank character is '{', edge list otherwise.
GraphDocument parse_graph(std::string_view text);
GraphDocument read_graph_file(const std::string& path);

Json graph_to_json(const Graph& g, const std::optional<VertexSet>& t = std::nullopt);
std::string serialize_graph(const Graph& g, const std::optional<VertexSet>& t = std::nullopt);
std::string serialize_edge_list(const Graph& g);

/// {"d": int, "coords": {"vid": ["num/den", ...]}}; every vertex 0..n-1 required.
Realization parse_realization(std::string_view text, int num_vertices);
Json realization_to_json(const Realization& p);
std::string rational_text(const Rational& q);

Json set_to_json(const Graph& g, const VertexSet& s);
Json edges_to_json(const Graph& g, std::span<const Edge> edges);
Json to_json(const RankReport& r);
Json to_json(const Graph& g, const SparsityViolation& v);
Json to_json(const Graph& g, const AugmentedFamily& l);
Json to_json(const Graph& g, const MatroidRankCertificate& c);
Json to_json(const CoincidenceVerdict& v);
Json to_json(const XvalReport& r);
Json to_json(const ConjectureReport& r);
Json to_json(const Fixture& f);

}  // namespace coinrig
