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

#include "transor/oracle.h"

#include <algorithm>
#include <bit>
#include <cmath>

#include "transor/errors.h"

namespace transor::oracle {
namespace {

using Mask = std::uint32_t;

std::vector<Mask> adjacency_masks(const Graph& g) {
  std::vector<Mask> adj(g.vertex_count(), 0);
  for (const Edge& e : g.edges()) {
    adj[static_cast<std::size_t>(e.u)] |= Mask{1} << e.v;
    adj[static_cast<std::size_t>(e.v)] |= Mask{1} << e.u;
  }
  return adj;
}

VertexSet to_set(std::size_t n, Mask mask) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v)
    if (mask >> v & 1U) s.insert(static_cast<VertexId>(v));
  return s;
}

std::vector<Mask> module_masks(const Graph& g) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxModuleVertices)
    throw OracleScaleError("module oracle is limited to " + std::to_string(kMaxModuleVertices) + " vertices");
  const auto adj = adjacency_masks(g);
  std::vector<Mask> out;
  const Mask all = n == 0 ? 0 : (Mask{1} << n) - 1;
  for (Mask x = 1; x <= all && all != 0; ++x) {
    bool module = true;
    for (std::size_t c = 0; c < n && module; ++c) {
      if (x >> c & 1U) continue;
      const Mask seen = adj[c] & x;
      module = seen == 0 || seen == x;
    }
    if (module) out.push_back(x);
  }
  return out;
}

std::vector<VertexSet> to_sorted_sets(std::size_t n, const std::vector<Mask>& masks) {
  std::vector<VertexSet> out;
  out.reserve(masks.size());
  for (Mask m : masks) out.push_back(to_set(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

std::string letter_name(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }

}  // namespace

std::vector<Orientation> brute_force_orientations(const Graph& g) {
  const std::size_t m = g.edge_count();
  if (m > kMaxOrientationEdges)
    throw OracleScaleError("orientation oracle is limited to " + std::to_string(kMaxOrientationEdges) + " edges");
  if (g.vertex_count() > 32) throw OracleScaleError("orientation oracle is limited to 32 vertices");

  const auto& edges = g.edges();
  std::vector<Mask> out(g.vertex_count());
  std::vector<Orientation> result;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits) {
    std::fill(out.begin(), out.end(), 0);
    for (std::size_t i = 0; i < m; ++i) {
      const bool flip = bits >> i & 1U;
      const VertexId tail = flip ? edges[i].v : edges[i].u;
      const VertexId head = flip ? edges[i].u : edges[i].v;
      out[static_cast<std::size_t>(tail)] |= Mask{1} << head;
    }
    // x -> y -> z must imply x -> z: every out-set contains the out-sets of
    // its members.
    bool transitive = true;
    for (std::size_t x = 0; x < out.size() && transitive; ++x) {
      for (Mask ys = out[x]; ys != 0 && transitive; ys &= ys - 1) {
        const auto y = static_cast<std::size_t>(std::countr_zero(ys));
        transitive = (out[y] & ~out[x]) == 0;
      }
    }
    if (!transitive) continue;
    Orientation o;
    o.arcs.reserve(m);
    for (std::size_t i = 0; i < m; ++i) {
      const bool flip = bits >> i & 1U;
      o.arcs.push_back(flip ? DirectedEdge{edges[i].v, edges[i].u} : DirectedEdge{edges[i].u, edges[i].v});
    }
    result.push_back(std::move(o));
  }
  std::sort(result.begin(), result.end(), [](const Orientation& a, const Orientation& b) {
    return a.sorted_arcs() < b.sorted_arcs();
  });
  return result;
}

std::vector<VertexSet> brute_force_modules(const Graph& g) {
  return to_sorted_sets(g.vertex_count(), module_masks(g));
}

std::vector<VertexSet> brute_force_strong_modules(const Graph& g) {
  const auto modules = module_masks(g);
  std::vector<Mask> strong;
  for (Mask x : modules) {
    const bool overlapped = std::any_of(modules.begin(), modules.end(), [x](Mask y) {
      return (x & y) != 0 && (x & ~y) != 0 && (y & ~x) != 0;
    });
    if (!overlapped) strong.push_back(x);
  }
  return to_sorted_sets(g.vertex_count(), strong);
}

std::uint64_t SplitMix64::next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

double SplitMix64::next_unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

Graph random_graph(std::size_t n, double p, std::uint64_t seed) {
  if (n == 0) throw DomainError("random graph needs at least one vertex");
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("edge probability must lie in [0, 1]");
  SplitMix64 rng(seed);
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.next_unit() < p) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
  return Graph::from_indexed(std::move(names), edges);
}

std::vector<std::pair<std::string, Graph>> fixtures() {
  using Pairs = std::vector<std::pair<std::string, std::string>>;
  auto make = [](Pairs edges) { return Graph({}, edges); };
  return {
      {"paw", make({{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}})},
      {"p4", make({{"a", "b"}, {"b", "c"}, {"c", "d"}})},
      {"c4", make({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}})},
      {"c5", make({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "e"}, {"e", "a"}})},
      {"k3", make({{"a", "b"}, {"a", "c"}, {"b", "c"}})},
      {"k4", make({{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}, {"b", "d"}, {"c", "d"}})},
      {"k13", make({{"a", "b"}, {"a", "c"}, {"a", "d"}})},
      {"join_k2_2k1", make({{"a1", "a2"}, {"a1", "b"}, {"a1", "c"}, {"a2", "b"}, {"a2", "c"}})},
      {"2k2", make({{"a", "b"}, {"c", "d"}})},
  };
}

Graph fixture(std::string_view name) {
  for (auto& [fixture_name, g] : fixtures())
    if (fixture_name == name) return g;
  throw DomainError("unknown fixture " + std::string(name));
}

Graph complete_graph(std::size_t n) {
  std::vector<std::string> names;
  for (std::size_t i = 1; i <= n; ++i) names.push_back(std::to_string(i));
  std::vector<Edge> edges;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) edges.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});
  return Graph::from_indexed(std::move(names), edges);
}

std::vector<Graph> labeled_graphs(std::size_t n) {
  if (n > 8) throw OracleScaleError("labeled graph enumeration is limited to 8 vertices");
  std::vector<std::string> names;
  for (std::size_t i = 0; i < n; ++i) names.push_back(letter_name(i));
  std::vector<Edge> pairs;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) pairs.push_back({static_cast<VertexId>(i), static_cast<VertexId>(j)});

  std::vector<Graph> out;
  out.reserve(std::size_t{1} << pairs.size());
  std::vector<Edge> edges;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << pairs.size()); ++bits) {
    edges.clear();
    for (std::size_t i = 0; i < pairs.size(); ++i)
      if (bits >> i & 1U) edges.push_back(pairs[i]);
    out.push_back(Graph::from_indexed(names, edges));
  }
  return out;
}

std::vector<Graph> exhaustive_family(std::size_t max_n) {
  std::vector<Graph> out;
  for (std::size_t n = 1; n <= max_n; ++n) {
    auto graphs = labeled_graphs(n);
    out.insert(out.end(), std::make_move_iterator(graphs.begin()), std::make_move_iterator(graphs.end()));
  }
  return out;
}

std::vector<Graph> random_family(const RandomFamilyOptions& options) {
  if (options.probabilities.empty() || options.max_vertices == 0)
    throw DomainError("random family needs probabilities and a positive vertex bound");
  SplitMix64 seeds(options.seed);
  std::vector<Graph> out;
  out.reserve(options.count);
  for (std::size_t i = 0; i < options.count; ++i) {
    const double p = options.probabilities[i % options.probabilities.size()];
    const std::size_t n = 1 + static_cast<std::size_t>(seeds.next() % options.max_vertices);
    Graph g = random_graph(n, p, seeds.next());
    while (g.edge_count() > options.max_edges) g = random_graph(n, p, seeds.next());
    out.push_back(std::move(g));
  }
  return out;
}

}  // namespace transor::oracle
