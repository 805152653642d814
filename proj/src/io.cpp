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

#include "coinrig/io.hpp"

#include <algorithm>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>

#include "coinrig/error.hpp"

namespace coinrig {

namespace {

std::string pair_text(long a, long b) {
  return "[" + std::to_string(a) + "," + std::to_string(b) + "]";
}

long vertex_field(const Json& node, const std::string& where) {
  if (!node.is_number_integer()) throw ParseError(where + ": expected an integer vertex id");
  return node.get<long>();
}

std::vector<Edge> checked_edges(const std::vector<std::pair<long, long>>& raw, long n,
                                const std::function<std::string(std::size_t)>& where) {
  std::set<Edge> seen;
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < raw.size(); ++i) {
    auto [a, b] = raw[i];
    for (long x : {a, b}) {
      if (x < 0 || x >= n) {
        throw ParseError(where(i) + ": vertex " + std::to_string(x) + " outside 0.." +
                         std::to_string(n - 1));
      }
    }
    if (a == b) throw ParseError(where(i) + ": loop at vertex " + std::to_string(a));
    const Edge e = make_edge(static_cast<VertexId>(a), static_cast<VertexId>(b));
    if (!seen.insert(e).second) throw ParseError(where(i) + ": duplicate edge " + pair_text(e.u, e.v));
    edges.push_back(e);
  }
  return edges;
}

Rational parse_rational(const Json& node, const std::string& where) {
  if (node.is_number_integer()) return Rational(node.get<long>());
  if (!node.is_string()) throw ParseError(where + ": expected a \"num/den\" string");
  const auto text = node.get<std::string>();
  Rational q;
  if (text.empty() || q.set_str(text, 10) != 0) {
    throw ParseError(where + ": malformed rational '" + text + "'");
  }
  if (q.get_den() == 0) throw ParseError(where + ": zero denominator");
  q.canonicalize();
  return q;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

GraphDocument parse_graph_json(std::string_view text) {
  const Json doc = parse_json_text(text);
  if (!doc.is_object()) throw ParseError("graph document must be a JSON object");
  if (!doc.contains("n")) throw ParseError("missing field 'n'");
  if (!doc["n"].is_number_integer() || doc["n"].get<long>() < 0) {
    throw ParseError("'n' must be a non-negative integer");
  }
  const long n = doc["n"].get<long>();
  if (n > 1'000'000) throw ParseError("'n' exceeds 10^6 vertices");
  if (!doc.contains("edges") || !doc["edges"].is_array()) {
    throw ParseError("missing array field 'edges'");
  }
  std::vector<std::pair<long, long>> raw;
  const auto& edges = doc["edges"];
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const std::string where = "edges[" + std::to_string(i) + "]";
    if (!edges[i].is_array() || edges[i].size() != 2) {
      throw ParseError(where + ": expected a pair [i, j]");
    }
    raw.emplace_back(vertex_field(edges[i][0], where), vertex_field(edges[i][1], where));
  }

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const auto& lab = doc["labels"];
    if (!lab.is_object()) throw ParseError("'labels' must be an object");
    labels.resize(static_cast<std::size_t>(n));
    for (long v = 0; v < n; ++v) labels[v] = std::to_string(v);
    for (const auto& [key, value] : lab.items()) {
      const std::string where = "labels[\"" + key + "\"]";
      std::size_t used = 0;
      long v = -1;
      try {
        v = std::stol(key, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != key.size()) throw ParseError(where + ": key is not a vertex id");
      if (v < 0 || v >= n) throw ParseError(where + ": vertex outside 0.." + std::to_string(n - 1));
      if (!value.is_string()) throw ParseError(where + ": label must be a string");
      labels[v] = value.get<std::string>();
    }
    std::set<std::string> names(labels.begin(), labels.end());
    if (names.size() != labels.size()) throw ParseError("labels: vertex names must be unique");
  }

  GraphDocument out;
  out.graph = Graph(static_cast<int>(n),
                    checked_edges(raw, n, [](std::size_t i) {
                      return "edges[" + std::to_string(i) + "]";
                    }),
                    std::move(labels));
  if (doc.contains("T")) {
    if (!doc["T"].is_array()) throw ParseError("'T' must be an array of vertex ids");
    std::vector<VertexId> t;
    for (std::size_t i = 0; i < doc["T"].size(); ++i) {
      const std::string where = "T[" + std::to_string(i) + "]";
      const long v = vertex_field(doc["T"][i], where);
      if (v < 0 || v >= n) throw ParseError(where + ": vertex outside 0.." + std::to_string(n - 1));
      t.push_back(static_cast<VertexId>(v));
    }
    out.T = VertexSet(std::move(t));
  }
  return out;
}

GraphDocument parse_edge_list(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  int line_no = 0;
  auto next_line = [&]() -> bool {
    while (std::getline(in, line)) {
      ++line_no;
      if (line.find_first_not_of(" \t\r") != std::string::npos) return true;
    }
    return false;
  };
  if (!next_line()) throw ParseError("edge list is empty");
  long n = -1;
  long m = -1;
  {
    std::istringstream head(line);
    std::string extra;
    if (!(head >> n >> m) || (head >> extra) || n < 0 || m < 0) {
      throw ParseError("line " + std::to_string(line_no) + ": expected header \"n m\"");
    }
  }
  std::vector<std::pair<long, long>> raw;
  std::vector<int> lines;
  while (static_cast<long>(raw.size()) < m) {
    if (!next_line()) {
      throw ParseError("edge list ends after " + std::to_string(raw.size()) + " of " +
                       std::to_string(m) + " edges");
    }
    std::istringstream row(line);
    long a = 0;
    long b = 0;
    std::string extra;
    if (!(row >> a >> b) || (row >> extra)) {
      throw ParseError("line " + std::to_string(line_no) + ": expected \"i j\"");
    }
    raw.emplace_back(a, b);
    lines.push_back(line_no);
  }
  if (next_line()) throw ParseError("line " + std::to_string(line_no) + ": text after the last edge");
  GraphDocument out;
  out.graph = Graph(static_cast<int>(n), checked_edges(raw, n, [&](std::size_t i) {
                      return "line " + std::to_string(lines[i]);
                    }));
  return out;
}

GraphDocument parse_graph(std::string_view text) {
  const auto pos = text.find_first_not_of(" \t\r\n");
  if (pos != std::string_view::npos && text[pos] == '{') return parse_graph_json(text);
  return parse_edge_list(text);
}

GraphDocument read_graph_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open graph file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_graph(buf.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

Json graph_to_json(const Graph& g, const std::optional<VertexSet>& t) {
  Json out;
  out["n"] = g.num_vertices();
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v});
  out["edges"] = std::move(edges);
  if (t) out["T"] = t->members();
  if (g.has_labels()) {
    Json labels = Json::object();
    for (VertexId v = 0; v < g.num_vertices(); ++v) labels[std::to_string(v)] = g.label(v);
    out["labels"] = std::move(labels);
  }
  return out;
}

std::string serialize_graph(const Graph& g, const std::optional<VertexSet>& t) {
  return graph_to_json(g, t).dump();
}

std::string serialize_edge_list(const Graph& g) {
  std::ostringstream out;
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << '\n';
  return out.str();
}

Realization parse_realization(std::string_view text, int num_vertices) {
  const Json doc = parse_json_text(text);
  if (!doc.is_object()) throw ParseError("realization must be a JSON object");
  if (!doc.contains("d") || !doc["d"].is_number_integer() || doc["d"].get<int>() < 1) {
    throw ParseError("'d' must be a positive integer");
  }
  if (!doc.contains("coords") || !doc["coords"].is_object()) {
    throw ParseError("missing object field 'coords'");
  }
  Realization p;
  p.dim = doc["d"].get<int>();
  p.coords.resize(static_cast<std::size_t>(num_vertices));
  std::vector<bool> seen(static_cast<std::size_t>(num_vertices), false);
  for (const auto& [key, value] : doc["coords"].items()) {
    const std::string where = "coords[\"" + key + "\"]";
    std::size_t used = 0;
    long v = -1;
    try {
      v = std::stol(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size()) throw ParseError(where + ": key is not a vertex id");
    if (v < 0 || v >= num_vertices) {
      throw ParseError(where + ": vertex outside 0.." + std::to_string(num_vertices - 1));
    }
    if (!value.is_array() || static_cast<int>(value.size()) != p.dim) {
      throw ParseError(where + ": expected " + std::to_string(p.dim) + " coordinates");
    }
    for (std::size_t k = 0; k < value.size(); ++k) {
      p.coords[v].push_back(parse_rational(value[k], where + "[" + std::to_string(k) + "]"));
    }
    seen[v] = true;
  }
  for (int v = 0; v < num_vertices; ++v) {
    if (!seen[v]) throw ParseError("coords: vertex " + std::to_string(v) + " has no point");
  }
  return p;
}

std::string rational_text(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Json realization_to_json(const Realization& p) {
  Json coords = Json::object();
  for (int v = 0; v < p.num_vertices(); ++v) {
    Json pt = Json::array();
    for (const auto& c : p.point(v)) pt.push_back(rational_text(c));
    coords[std::to_string(v)] = std::move(pt);
  }
  return Json{{"d", p.dim}, {"coords", std::move(coords)}};
}

Json set_to_json(const Graph& g, const VertexSet& s) {
  Json out = Json::array();
  for (VertexId v : s) out.push_back(g.label(v));
  return out;
}

Json edges_to_json(const Graph& g, std::span<const Edge> edges) {
  Json out = Json::array();
  for (const auto& e : edges) out.push_back({g.label(e.u), g.label(e.v)});
  return out;
}

Json to_json(const RankReport& r) {
  return Json{{"rank", r.rank},
              {"target", r.target},
              {"edges", r.edges},
              {"rigid", r.rigid},
              {"independent", r.independent},
              {"method", to_string(r.method)},
              {"trials", r.trials},
              {"seed", r.seed},
              {"failure_bound", r.failure_bound}};
}

Json to_json(const Graph& g, const SparsityViolation& v) {
  Json out;
  out["kind"] = v.kind == SparsityViolation::Kind::set ? "set" : "family";
  out["S"] = set_to_json(g, v.S);
  if (v.kind == SparsityViolation::Kind::set) {
    out["witness"] = set_to_json(g, v.set_witness);
  } else {
    Json sets = Json::array();
    for (const auto& h : v.family_witness.sets) sets.push_back(set_to_json(g, h));
    out["witness"] = std::move(sets);
  }
  out["lhs"] = v.lhs;
  out["rhs"] = v.rhs;
  return out;
}

Json to_json(const Graph& g, const AugmentedFamily& l) {
  Json h = Json::array();
  for (const auto& s : l.H) h.push_back(set_to_json(g, s));
  Json x = Json::array();
  for (const auto& s : l.X) x.push_back(set_to_json(g, s));
  return Json{{"S", set_to_json(g, l.S)}, {"H", std::move(h)}, {"X", std::move(x)}};
}

Json to_json(const Graph& g, const MatroidRankCertificate& c) {
  Json out{{"rank", c.rank}, {"base", edges_to_json(g, c.base)}};
  if (c.dual) {
    out["dual"] = to_json(g, *c.dual);
    out["dual"]["value"] = val_augmented(*c.dual);
  }
  return out;
}

Json to_json(const CoincidenceVerdict& v) {
  Json out;
  out["T"] = set_to_json(v.graph, v.T);
  out["combinatorial"] = v.combinatorial ? Json(*v.combinatorial) : Json(nullptr);
  out["algebraic"] = v.algebraic ? Json(*v.algebraic) : Json(nullptr);
  out["consistent"] = v.consistent();
  out["failing_S"] = v.failing_S ? set_to_json(v.graph, *v.failing_S) : Json(nullptr);
  Json checks = Json::array();
  for (const auto& c : v.checks) {
    checks.push_back(Json{{"graph", c.S.empty() ? "G'" : "G'/S"},
                          {"S", set_to_json(v.graph, c.S)},
                          {"vertices", c.vertices},
                          {"edges", c.edges},
                          {"rank", c.rank},
                          {"target", c.target},
                          {"rigid", c.rigid}});
  }
  out["checks"] = std::move(checks);
  Json reports = Json::array();
  for (const auto& r : v.reports) reports.push_back(to_json(r));
  out["reports"] = std::move(reports);
  return out;
}

Json to_json(const XvalReport& r) {
  Json per_t = Json::object();
  for (std::size_t i = 0; i < r.options.t_sizes.size(); ++i) {
    const auto key = std::to_string(r.options.t_sizes[i]);
    per_t[key] = (per_t.contains(key) ? per_t[key].get<int>() : 0) + r.samples_per_t[i];
  }
  Json cases = Json::array();
  for (const auto& c : r.mismatched) {
    cases.push_back(Json{{"index", c.index},
                         {"graph", graph_to_json(c.graph, c.T)},
                         {"mt_independent", c.mt_independent},
                         {"rt_independent", c.rt_independent},
                         {"mt_rank", c.mt_rank},
                         {"rt_rank", c.rt_rank},
                         {"query_disagreements", c.query_disagreements},
                         {"conjectural", c.conjectural}});
  }
  const bool conjectural = std::any_of(r.options.t_sizes.begin(), r.options.t_sizes.end(),
                                       [](int t) { return t >= 4; });
  return Json{{"n_max", r.options.n_max},
              {"seed", r.options.seed},
              {"trials", r.options.trials},
              {"execution", r.options.exec == Execution::parallel ? "parallel" : "serial"},
              {"samples", r.samples},
              {"samples_per_T_size", std::move(per_t)},
              {"independent_cases", r.independent_cases},
              {"queries", r.queries},
              {"mismatches", r.mismatches},
              {"conjectural_mismatches", r.conjectural_mismatches},
              {"status", conjectural ? "conjectural" : "proven"},
              {"mismatched", std::move(cases)},
              {"seconds", r.seconds}};
}

Json to_json(const ConjectureReport& r) {
  Json cands = Json::array();
  for (const auto& c : r.candidates) {
    Json reports = Json::array();
    for (const auto& rep : c.reports) reports.push_back(to_json(rep));
    cands.push_back(Json{{"graph", graph_to_json(c.graph, c.T)},
                         {"strongly_T_sparse", c.mt_independent},
                         {"violation", c.violation ? to_json(c.graph, *c.violation) : Json(nullptr)},
                         {"reports", std::move(reports)},
                         {"confirmed", c.confirmed}});
  }
  return Json{{"n_max", r.n_max},          {"T_size", r.t_size},
              {"budget", r.budget},        {"seed", r.seed},
              {"tested", r.tested},        {"quarantined", r.quarantined},
              {"candidates", std::move(cands)}, {"seconds", r.seconds}};
}

Json to_json(const Fixture& f) {
  Json out{{"name", f.name}, {"graph", graph_to_json(f.graph, f.T)}};
  if (f.realization) out["realization"] = realization_to_json(*f.realization);
  return out;
}

}  // namespace coinrig
