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

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "coinrig/constructions.hpp"
#include "coinrig/error.hpp"
#include "coinrig/io.hpp"
#include "coinrig/matroid.hpp"
#include "coinrig/theorems.hpp"

namespace {

using namespace coinrig;

constexpr int kConsistent = 0;
constexpr int kViolation = 1;
constexpr int kUsage = 2;

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) out.push_back(item);
  if (!text.empty() && text.back() == sep) out.emplace_back();
  return out;
}

VertexId parse_vertex(const Graph& g, const std::string& token) {
  if (!token.empty() && token.find_first_not_of("0123456789") == std::string::npos) {
    const long v = std::stol(token);
    if (!g.has_vertex(static_cast<VertexId>(v))) {
      throw ParseError("vertex " + token + " is not in the graph");
    }
    return static_cast<VertexId>(v);
  }
  if (auto v = g.find(token)) return *v;
  throw ParseError("unknown vertex '" + token + "'");
}

VertexSet parse_vertices(const Graph& g, const std::string& text) {
  std::vector<VertexId> ids;
  for (const auto& tok : split(text, ',')) {
    if (!tok.empty()) ids.push_back(parse_vertex(g, tok));
  }
  return VertexSet(std::move(ids));
}

struct Common {
  std::string graph_path;
  std::string t_text;
  std::string out_path;
  bool serial = false;

  GraphDocument load() const { return read_graph_file(graph_path); }

  std::optional<VertexSet> T(const GraphDocument& doc) const {
    if (!t_text.empty()) return parse_vertices(doc.graph, t_text);
    return doc.T;
  }

  VertexSet require_T(const GraphDocument& doc) const {
    auto t = T(doc);
    if (!t || t->empty()) throw ParseError("this command needs a nonempty T (--T or a \"T\" field)");
    return *t;
  }

  Execution exec() const { return serial ? Execution::serial : Execution::parallel; }

  void emit(const Json& j) const {
    if (out_path.empty()) {
      std::cout << j.dump(2) << '\n';
      return;
    }
    std::ofstream out(out_path);
    if (!out) throw ParseError("cannot write '" + out_path + "'");
    out << j.dump(2) << '\n';
  }
};

void add_graph_options(CLI::App* cmd, Common& c, bool graph_required = true) {
  auto* opt = cmd->add_option("--graph", c.graph_path, "graph file (JSON or edge list)");
  if (graph_required) opt->required();
  cmd->add_option("--T", c.t_text, "comma-separated vertex ids or labels");
}

int run_rank(const Common& c, int dim, int trials, std::uint64_t seed, bool mod_p,
             const std::string& realization_path) {
  const auto doc = c.load();
  const auto& g = doc.graph;
  Json out;
  if (!realization_path.empty()) {
    std::ifstream in(realization_path);
    if (!in) throw ParseError("cannot open realization file '" + realization_path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    const auto p = parse_realization(buf.str(), g.num_vertices());
    const auto m = rigidity_matrix(g, p);
    const int rank = mod_p ? rank_modp(m) : rank_exact(m);
    out = Json{{"rank", rank},
               {"target", rigidity_target(g.num_vertices(), p.dim)},
               {"edges", g.num_edges()},
               {"rigid", rank == rigidity_target(g.num_vertices(), p.dim)},
               {"independent", rank == static_cast<int>(g.num_edges())},
               {"method", mod_p ? "prime-field" : "exact-rational"}};
  } else {
    const auto t = c.T(doc);
    const CoincidenceSpec spec = t && !t->empty() ? CoincidenceSpec::of(*t) : CoincidenceSpec{};
    const auto method = mod_p ? RankMethod::prime_field : RankMethod::automatic;
    out = to_json(generic_rank(g, spec, dim, trials, seed, method, c.exec()));
    out["T"] = set_to_json(g, spec.T);
  }
  c.emit(out);
  return kConsistent;
}

int run_sparse(const Common& c, bool strong, int cap) {
  const auto doc = c.load();
  const auto t = c.require_T(doc);
  const auto v = strong ? is_strongly_T_sparse(doc.graph, t, cap) : is_S_sparse(doc.graph, t, cap);
  c.emit(Json{{"sparse", !v.has_value()},
              {"strong", strong},
              {"T", set_to_json(doc.graph, t)},
              {"violation", v ? to_json(doc.graph, *v) : Json(nullptr)}});
  return kConsistent;
}

int run_mrank(const Common& c, const std::string& oracle, bool witness, std::uint64_t seed) {
  const auto doc = c.load();
  const auto& g = doc.graph;
  const auto t = c.require_T(doc);
  Json out{{"T", set_to_json(g, t)}};
  std::optional<int> mt_rank;
  std::optional<int> rt_rank;
  if (oracle == "mt" || oracle == "both") {
    SparsityOracle mt(g, t);
    auto cert = greedy_rank(mt, g.edges());
    if (witness) {
      auto cover = mt_rank_cover_min(g, g.edges(), t);
      cert.dual = cover.witness;
      out["cover_min"] = Json{{"rank", cover.rank}, {"proven_range", cover.proven_range}};
    }
    mt_rank = cert.rank;
    out["mt"] = to_json(g, cert);
    out["mt"]["conjectural"] = mt.conjectural();
  }
  if (oracle == "rt" || oracle == "both") {
    RigidityOracle rt(g, t, 2, seed);
    const auto cert = greedy_rank(rt, g.edges());
    rt_rank = cert.rank;
    out["rt"] = to_json(g, cert);
    out["rt"]["samples"] = rt.samples_drawn();
  }
  int code = kConsistent;
  if (mt_rank && rt_rank) {
    out["agree"] = *mt_rank == *rt_rank;
    if (*mt_rank != *rt_rank && t.size() <= 3) code = kViolation;
  }
  c.emit(out);
  return code;
}

int run_transform(const Common& c, const std::string& op, const std::string& args) {
  const auto doc = c.load();
  const auto& g = doc.graph;
  auto t = c.T(doc);
  Graph result;
  if (op == "0ext") {
    const auto ids = split(args, ',');
    if (ids.size() != 2) throw ParseError("0ext takes --args a,b");
    result = zero_extension(g, parse_vertex(g, ids[0]), parse_vertex(g, ids[1]));
  } else if (op == "1ext") {
    const auto ids = split(args, ',');
    if (ids.size() != 3) throw ParseError("1ext takes --args u,v,x");
    result = one_extension(g, make_edge(parse_vertex(g, ids[0]), parse_vertex(g, ids[1])),
                           parse_vertex(g, ids[2]));
  } else if (op == "split") {
    const auto parts = split(args, '/');
    if (parts.size() != 4) throw ParseError("split takes --args z/U1/U2/U3");
    result = vertex_split(g, SplitSpec{parse_vertex(g, parts[0]), parse_vertices(g, parts[1]),
                                       parse_vertices(g, parts[2]), parse_vertices(g, parts[3])});
  } else if (op == "replace") {
    std::vector<VertexSet> partition;
    VertexSet y;
    for (const auto& part : split(args, '/')) {
      partition.push_back(parse_vertices(g, part));
      y = set_union(y, partition.back());
    }
    auto r = replace_rigid_subgraph(g, y, partition);
    if (t) {
      std::vector<VertexId> mapped;
      for (VertexId v : *t) mapped.push_back(r.image[v]);
      t = VertexSet(std::move(mapped));
    }
    result = std::move(r.graph);
  } else if (op == "reduce") {
    if (!t) throw ParseError("reduce needs T");
    auto r = reduce_low_degree(g, *t, parse_vertex(g, args));
    t = r.T;
    result = std::move(r.graph);
  } else {
    throw ParseError("unknown --op '" + op + "'");
  }
  c.emit(graph_to_json(result, t));
  return kConsistent;
}

int run_check(const Common& c, int dim, int trials, std::uint64_t seed) {
  const auto doc = c.load();
  const auto t = c.require_T(doc);
  const auto verdict = coincident_rigid(doc.graph, t, dim, trials, seed, c.exec());
  c.emit(to_json(verdict));
  return verdict.consistent() ? kConsistent : kViolation;
}

int run_fixtures(const Common& c, const std::string& name, const std::string& dir) {
  std::vector<Fixture> list;
  if (name.empty()) {
    list = fixtures();
  } else {
    list.push_back(fixture(name));
  }
  if (!dir.empty()) {
    std::filesystem::create_directories(dir);
    for (const auto& f : list) {
      std::ofstream out(std::filesystem::path(dir) / (f.name + ".json"));
      out << graph_to_json(f.graph, f.T).dump(2) << '\n';
      if (f.realization) {
        std::ofstream rout(std::filesystem::path(dir) / (f.name + ".realization.json"));
        rout << realization_to_json(*f.realization).dump(2) << '\n';
      }
    }
    return kConsistent;
  }
  Json out = Json::array();
  for (const auto& f : list) out.push_back(to_json(f));
  c.emit(out);
  return kConsistent;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"coinrig: rigidity of frameworks with coincident points"};
  app.require_subcommand(1);
  app.fallthrough();
  Common c;
  app.add_option("--out", c.out_path, "write the JSON result to this file");
  app.add_flag("--serial", c.serial, "run harness loops on one thread");

  int dim = 2;
  int trials = 3;
  std::uint64_t seed = 42;
  bool mod_p = false;
  std::string realization;
  auto* rank = app.add_subcommand("rank", "generic or explicit rigidity-matrix rank");
  add_graph_options(rank, c);
  rank->add_option("--d", dim, "dimension")->check(CLI::Range(1, 16));
  rank->add_option("--trials", trials, "sampled realizations")->check(CLI::Range(1, 1000));
  rank->add_option("--seed", seed, "root seed");
  rank->add_flag("--mod-p", mod_p, "rank over GF(2^61-1)");
  rank->add_option("--realization", realization, "explicit realization JSON");

  bool strong = false;
  int cap = kDefaultEnumerationCap;
  auto* sparse = app.add_subcommand("sparse", "S-sparsity or strong T-sparsity");
  add_graph_options(sparse, c);
  sparse->add_flag("--strong", strong, "check every nonempty S inside T");
  sparse->add_option("--cap", cap, "enumeration vertex cap")->check(CLI::Range(1, kMaxEnumerationCap));

  std::string oracle = "mt";
  bool witness = false;
  auto* mrank = app.add_subcommand("mrank", "greedy rank in the count or algebraic matroid");
  add_graph_options(mrank, c);
  mrank->add_option("--oracle", oracle, "mt, rt or both")->check(CLI::IsMember({"mt", "rt", "both"}));
  mrank->add_flag("--witness", witness, "attach the minimizing cover");
  mrank->add_option("--seed", seed, "seed of the rt oracle");

  int henneberg = 0;
  auto* gen = app.add_subcommand("gen", "random Henneberg graph");
  gen->add_option("--henneberg", henneberg, "vertex count")->required()->check(CLI::Range(2, 1'000'000));
  gen->add_option("--seed", seed, "seed");

  std::string op;
  std::string args;
  auto* transform = app.add_subcommand("transform", "apply a construction move");
  add_graph_options(transform, c);
  transform->add_option("--op", op, "0ext, 1ext, split, replace or reduce")->required();
  transform->add_option("--args", args, "0ext a,b | 1ext u,v,x | split z/U1/U2/U3 | "
                                        "replace Y1/Y2/Y3... | reduce z")->required();

  auto* check = app.add_subcommand("check", "T-coincident rigidity verdict");
  add_graph_options(check, c);
  check->add_option("--d", dim, "dimension")->check(CLI::Range(1, 16));
  check->add_option("--trials", trials, "sampled realizations")->check(CLI::Range(1, 1000));
  check->add_option("--seed", seed, "root seed");

  XvalOptions xo;
  std::string t_sizes = "1,2,3";
  auto* xval = app.add_subcommand("xval", "cross-validate the count and algebraic matroids");
  xval->add_option("--n-max", xo.n_max, "largest vertex count")->check(CLI::Range(2, kDefaultEnumerationCap));
  xval->add_option("--t-sizes", t_sizes, "comma-separated |T| values");
  xval->add_option("--samples", xo.samples, "random instances")->check(CLI::NonNegativeNumber);
  xval->add_option("--seed", xo.seed, "root seed");
  xval->add_option("--trials", xo.trials, "sampled realizations per instance")->check(CLI::Range(1, 100));

  int n_max = 7;
  int t_size = 4;
  int budget = 1000;
  std::uint64_t search_seed = 1;
  auto* conj = app.add_subcommand("conjecture", "search for count/algebra disagreements, |T| >= 4");
  conj->add_option("--n-max", n_max, "largest vertex count")->check(CLI::Range(2, kDefaultEnumerationCap));
  conj->add_option("--t-size", t_size, "|T|")->check(CLI::Range(1, kDefaultEnumerationCap));
  conj->add_option("--budget", budget, "random instances")->check(CLI::NonNegativeNumber);
  conj->add_option("--seed", search_seed, "root seed");

  std::string name;
  std::string dir;
  auto* fix = app.add_subcommand("fixtures", "bundled graphs");
  fix->add_option("--name", name, "one fixture");
  fix->add_option("--dir", dir, "write <name>.json files here");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*rank) return run_rank(c, dim, trials, seed, mod_p, realization);
    if (*sparse) return run_sparse(c, strong, cap);
    if (*mrank) return run_mrank(c, oracle, witness, seed);
    if (*gen) {
      c.emit(graph_to_json(henneberg_random(henneberg, seed)));
      return kConsistent;
    }
    if (*transform) return run_transform(c, op, args);
    if (*check) return run_check(c, dim, trials, seed);
    if (*xval) {
      xo.exec = c.exec();
      xo.t_sizes.clear();
      for (const auto& tok : split(t_sizes, ',')) xo.t_sizes.push_back(std::stoi(tok));
      const auto report = cross_validate(xo);
      c.emit(to_json(report));
      return report.mismatches == 0 ? kConsistent : kViolation;
    }
    if (*conj) {
      c.emit(to_json(conjecture_search(n_max, t_size, budget, search_seed, c.exec())));
      return kConsistent;
    }
    if (*fix) return run_fixtures(c, name, dir);
  } catch (const InvariantViolation& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kViolation;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::logic_error&) {
    std::cerr << "error: malformed number in arguments\n";
    return kUsage;
  }
  return kUsage;
}
