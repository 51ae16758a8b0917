// Copyright 2026 The Transor Authors
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

#include "transor/cli.h"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "transor/decomposition.h"
#include "transor/edge_list.h"
#include "transor/errors.h"
#include "transor/forcing.h"
#include "transor/multiplex.h"
#include "transor/oracle.h"
#include "transor/orientation.h"
#include "transor/serialize.h"

namespace transor::cli {
namespace {

struct Options {
  std::string verb;
  std::string input;
  std::string orientation_file;
  bool dot = false;
  bool json = false;
  bool oracle = false;
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> seed;
};

std::string read_all(std::istream& in) {
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_file(const std::string& path) {
  std::ifstream file(path, std::ios::binary);
  if (!file) throw DomainError("cannot read " + path);
  return read_all(file);
}

std::string brace_list(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](VertexId v) {
    out += (first ? "" : ",") + g.name(v);
    first = false;
  });
  return out + "}";
}

int cmd_colors(const Graph& g, const Options& opt, std::ostream& out) {
  const ColorMap colors = color_classes(g);
  if (opt.json) {
    out << colors_to_json(g, colors).dump(2) << "\n";
    return kOk;
  }
  for (const ColorClass& c : colors.colors()) {
    out << "color " << c.id << " span=" << brace_list(g, c.span)
        << " self_inverse=" << (c.self_inverse ? "true" : "false") << " A=";
    for (std::size_t i = 0; i < c.class_a.size(); ++i)
      out << (i ? " " : "") << "(" << g.name(c.class_a[i].tail) << "," << g.name(c.class_a[i].head) << ")";
    out << "\n";
  }
  return kOk;
}

int cmd_check(const Graph& g, const Options& opt, std::ostream& out) {
  const bool verdict = opt.oracle ? !oracle::brute_force_orientations(g).empty() : is_comparability(g);
  out << "comparability: " << (verdict ? "true" : "false") << "\n";
  return verdict ? kOk : kFalse;
}

int cmd_count(const Graph& g, const Options& opt, std::ostream& out) {
  if (opt.oracle) {
    out << oracle::brute_force_orientations(g).size() << "\n";
  } else {
    out << count_orientations(g) << "\n";
  }
  return kOk;
}

int cmd_enumerate(const Graph& g, const Options& opt, std::ostream& out) {
  if (opt.oracle) {
    std::uint64_t emitted = 0;
    for (const Orientation& o : oracle::brute_force_orientations(g)) {
      if (opt.limit && emitted >= *opt.limit) break;
      out << orientation_to_json(g, o).dump() << "\n";
      ++emitted;
    }
    return kOk;
  }
  OrientationStream stream = enumerate_orientations(g, opt.limit);
  while (auto o = stream.next()) out << orientation_to_json(g, *o).dump() << "\n";
  return kOk;
}

int cmd_verify(const Graph& g, const Options& opt, std::ostream& out) {
  if (opt.orientation_file.empty()) throw DomainError("verify needs --orientation FILE");
  const Orientation o = parse_orientation(g, read_file(opt.orientation_file));
  const bool ok = is_transitive(g, o);
  out << "transitive: " << (ok ? "true" : "false") << "\n";
  return ok ? kOk : kFalse;
}

int cmd_oracle_compare(const Graph& g, std::ostream& out) {
  const std::string problem = oracle_disagreement(g);
  if (problem.empty()) {
    out << "oracle agreement: ok (" << oracle::brute_force_orientations(g).size() << " orientations, "
        << oracle::brute_force_strong_modules(g).size() << " strong modules)\n";
    return kOk;
  }
  const Graph small = shrink_counterexample(g, [](const Graph& h) { return !oracle_disagreement(h).empty(); });
  out << "oracle disagreement: " << problem << "\n";
  out << "minimal counterexample (" << oracle_disagreement(small) << "):\n" << format_edge_list(small);
  return kDisagreement;
}

int dispatch(const Graph& g, const Options& opt, std::ostream& out) {
  DecompositionOptions decomposition;
  decomposition.shuffle_seed = opt.seed;

  if (opt.verb == "colors") return cmd_colors(g, opt, out);
  if (opt.verb == "decompose") {
    const DecompositionNode tree = decomposition_tree(g, decomposition);
    if (opt.dot) {
      out << tree_to_dot(g, tree);
    } else {
      out << tree_to_json(g, tree).dump(2) << "\n";
    }
    return kOk;
  }
  if (opt.verb == "multiplexes") {
    const DecompositionNode tree = decomposition_tree(g, decomposition);
    Json all = Json::array();
    for (const Multiplex& m : multiplex_partition(g, tree)) all.push_back(multiplex_to_json(g, m));
    out << all.dump(2) << "\n";
    return kOk;
  }
  if (opt.verb == "check") return cmd_check(g, opt, out);
  if (opt.verb == "count") return cmd_count(g, opt, out);
  if (opt.verb == "enumerate") return cmd_enumerate(g, opt, out);
  if (opt.verb == "verify") return cmd_verify(g, opt, out);
  if (opt.verb == "oracle-compare") return cmd_oracle_compare(g, out);
  throw DomainError("unknown verb " + opt.verb);
}

std::string compare_sets(const char* what, const std::vector<VertexSet>& fast, const std::vector<VertexSet>& slow) {
  if (fast == slow) return {};
  return std::string(what) + ": fast path found " + std::to_string(fast.size()) + ", oracle found " +
         std::to_string(slow.size());
}

}  // namespace

std::string oracle_disagreement(const Graph& g) {
  const auto brute = oracle::brute_force_orientations(g);
  if (is_comparability(g) != !brute.empty()) return "comparability verdict differs";
  if (count_orientations(g) != brute.size()) return "orientation count differs";

  std::set<std::vector<DirectedEdge>> fast;
  OrientationStream stream = enumerate_orientations(g);
  while (auto o = stream.next()) fast.insert(o->sorted_arcs());
  std::set<std::vector<DirectedEdge>> slow;
  for (const Orientation& o : brute) slow.insert(o.sorted_arcs());
  if (fast != slow) return "orientation sets differ";

  if (g.vertex_count() == 0) return {};
  const auto modules = oracle::brute_force_modules(g);
  std::vector<VertexSet> fast_modules;
  const std::size_t n = g.vertex_count();
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    VertexSet x = g.empty_set();
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1U) x.insert(static_cast<VertexId>(v));
    if (is_module(g, x)) fast_modules.push_back(x);
  }
  std::sort(fast_modules.begin(), fast_modules.end());
  if (auto d = compare_sets("modules", fast_modules, modules); !d.empty()) return d;

  const DecompositionNode tree = decomposition_tree(g);
  std::vector<VertexSet> tree_sets;
  for (const TreeVisit& visit : preorder(tree)) tree_sets.push_back(visit.node->vertices);
  std::sort(tree_sets.begin(), tree_sets.end());
  return compare_sets("strong modules", tree_sets, oracle::brute_force_strong_modules(g));
}

Graph shrink_counterexample(const Graph& g, const std::function<bool(const Graph&)>& fails) {
  Graph current = g;
  bool progress = true;
  while (progress) {
    progress = false;
    for (std::size_t v = 0; v < current.vertex_count() && current.vertex_count() > 1; ++v) {
      VertexSet keep = current.all_vertices();
      keep.erase(static_cast<VertexId>(v));
      Graph smaller = induced_subgraph(current, keep);
      if (fails(smaller)) {
        current = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  progress = true;
  while (progress) {
    progress = false;
    for (std::size_t e = 0; e < current.edge_count(); ++e) {
      std::vector<Edge> edges = current.edges();
      edges.erase(edges.begin() + static_cast<std::ptrdiff_t>(e));
      Graph smaller = Graph::from_indexed(current.names(), edges);
      if (fails(smaller)) {
        current = std::move(smaller);
        progress = true;
        break;
      }
    }
  }
  return current;
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Decomposition, comparability and transitive orientations of undirected graphs", "transor"};
  Options opt;
  std::uint64_t limit = 0, seed = 0;
  app.add_option("verb", opt.verb,
                 "colors | decompose | multiplexes | check | count | enumerate | verify | oracle-compare")
      ->required()
      ->check(CLI::IsMember({"colors", "decompose", "multiplexes", "check", "count", "enumerate", "verify",
                             "oracle-compare"}));
  app.add_option("input", opt.input, "graph file (edge list or DIMACS); stdin when absent or -");
  app.add_flag("--dot", opt.dot, "decompose: emit Graphviz DOT");
  app.add_flag("--json", opt.json, "colors: emit JSON");
  app.add_flag("--oracle", opt.oracle, "check/count/enumerate: use the brute-force oracle");
  auto* limit_opt = app.add_option("--limit", limit, "enumerate: stop after N orientations");
  auto* seed_opt = app.add_option("--seed", seed, "shuffle internal candidate order (output is unchanged)");
  app.add_option("--orientation", opt.orientation_file, "verify: orientation file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kInputError;
  }
  if (limit_opt->count() > 0) opt.limit = limit;
  if (seed_opt->count() > 0) opt.seed = seed;

  try {
    const std::string text = opt.input.empty() || opt.input == "-" ? read_all(in) : read_file(opt.input);
    const ParsedGraph parsed = parse_edge_list(text);
    if (parsed.duplicate_edges > 0)
      err << "warning: " << parsed.duplicate_edges << " duplicate edge line(s) ignored\n";
    if (parsed.graph.vertex_count() == 0) throw DomainError("graph has no vertices");
    return dispatch(parsed.graph, opt, out);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const OracleScaleError& e) {
    err << "error: " << e.what() << "\n";
    return kOracleScale;
  } catch (const InvariantViolation& e) {
    err << "internal error: " << e.what() << "\n";
    return kInternalError;
  }
}

}  // namespace transor::cli
