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

#include "transor/graph.h"

#include <algorithm>
#include <map>

#include "transor/errors.h"

namespace transor {
namespace {

bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

std::string_view strip_zeros(std::string_view s) {
  std::size_t i = 0;
  while (i + 1 < s.size() && s[i] == '0') ++i;
  return s.substr(i);
}

}  // namespace

bool vertex_less(std::string_view a, std::string_view b) {
  const bool da = all_digits(a);
  const bool db = all_digits(b);
  if (da != db) return da;
  if (da) {
    std::string_view sa = strip_zeros(a);
    std::string_view sb = strip_zeros(b);
    if (sa.size() != sb.size()) return sa.size() < sb.size();
    if (sa != sb) return sa < sb;
  }
  return a < b;
}

Graph::Graph(std::vector<std::string> vertices,
             const std::vector<std::pair<std::string, std::string>>& edges) {
  for (const auto& [a, b] : edges) {
    if (a == b) throw DomainError("self-loop at vertex " + a);
    vertices.push_back(a);
    vertices.push_back(b);
  }
  std::sort(vertices.begin(), vertices.end(),
            [](const std::string& a, const std::string& b) { return vertex_less(a, b); });
  vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());

  std::map<std::string_view, VertexId> index;
  for (std::size_t i = 0; i < vertices.size(); ++i)
    index.emplace(vertices[i], static_cast<VertexId>(i));
  std::vector<Edge> indexed;
  indexed.reserve(edges.size());
  for (const auto& [a, b] : edges) indexed.push_back({index.at(a), index.at(b)});
  *this = from_indexed(std::move(vertices), indexed);
}

Graph Graph::from_indexed(std::vector<std::string> names, std::span<const Edge> edges) {
  for (std::size_t i = 1; i < names.size(); ++i)
    if (!vertex_less(names[i - 1], names[i]))
      throw DomainError("vertex names not strictly increasing: " + names[i - 1] + ", " + names[i]);

  Graph g;
  const std::size_t n = names.size();
  g.names_ = std::move(names);
  g.adj_.assign(n, VertexSet(n));
  g.edge_ids_.assign(n * n, -1);
  for (Edge e : edges) {
    if (e.u < 0 || e.v < 0 || static_cast<std::size_t>(e.u) >= n ||
        static_cast<std::size_t>(e.v) >= n)
      throw DomainError("edge endpoint out of range");
    if (e.u == e.v) throw DomainError("self-loop at vertex " + g.names_[static_cast<std::size_t>(e.u)]);
    if (e.u > e.v) std::swap(e.u, e.v);
    g.edges_.push_back(e);
  }
  std::sort(g.edges_.begin(), g.edges_.end());
  g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
  for (std::size_t id = 0; id < g.edges_.size(); ++id) {
    const Edge e = g.edges_[id];
    g.adj_[static_cast<std::size_t>(e.u)].insert(e.v);
    g.adj_[static_cast<std::size_t>(e.v)].insert(e.u);
    g.edge_ids_[static_cast<std::size_t>(e.u) * n + static_cast<std::size_t>(e.v)] = static_cast<int>(id);
    g.edge_ids_[static_cast<std::size_t>(e.v) * n + static_cast<std::size_t>(e.u)] = static_cast<int>(id);
  }
  return g;
}

std::optional<VertexId> Graph::find(std::string_view name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name,
                             [](const std::string& a, std::string_view b) { return vertex_less(a, b); });
  if (it == names_.end() || *it != name) return std::nullopt;
  return static_cast<VertexId>(it - names_.begin());
}

VertexId Graph::index_of(std::string_view name) const {
  auto v = find(name);
  if (!v) throw DomainError("unknown vertex " + std::string(name));
  return *v;
}

VertexSet Graph::make_set(std::span<const std::string> names) const {
  VertexSet s = empty_set();
  for (const auto& name : names) s.insert(index_of(name));
  return s;
}

std::vector<std::string> Graph::names_of(const VertexSet& set) const {
  std::vector<std::string> out;
  set.for_each([&](VertexId v) { out.push_back(name(v)); });
  return out;
}

Graph induced_subgraph(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.vertex_count())
    throw DomainError("vertex set is not a subset of the graph's vertices");
  std::vector<VertexId> old_to_new(g.vertex_count(), -1);
  std::vector<std::string> names;
  x.for_each([&](VertexId v) {
    old_to_new[static_cast<std::size_t>(v)] = static_cast<VertexId>(names.size());
    names.push_back(g.name(v));
  });
  std::vector<Edge> edges;
  for (Edge e : g.edges())
    if (x.contains(e.u) && x.contains(e.v))
      edges.push_back({old_to_new[static_cast<std::size_t>(e.u)], old_to_new[static_cast<std::size_t>(e.v)]});
  return Graph::from_indexed(std::move(names), edges);
}

Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  const auto n = static_cast<VertexId>(g.vertex_count());
  for (VertexId u = 0; u < n; ++u)
    for (VertexId v = u + 1; v < n; ++v)
      if (!g.adjacent(u, v)) edges.push_back({u, v});
  return Graph::from_indexed(g.names(), edges);
}

namespace {

// Flood fill over `within`, stepping along edges (complemented = false) or
// non-edges (complemented = true).
std::vector<VertexSet> components(const Graph& g, const VertexSet& within, bool complemented) {
  std::vector<VertexSet> out;
  VertexSet unseen = within;
  while (!unseen.empty()) {
    VertexSet comp = g.empty_set();
    std::vector<VertexId> stack{unseen.first()};
    unseen.erase(stack.back());
    comp.insert(stack.back());
    while (!stack.empty()) {
      const VertexId v = stack.back();
      stack.pop_back();
      VertexSet next = complemented ? unseen - g.neighbors(v) : unseen & g.neighbors(v);
      next.for_each([&](VertexId w) {
        unseen.erase(w);
        comp.insert(w);
        stack.push_back(w);
      });
    }
    out.push_back(std::move(comp));
  }
  // Seeds are taken in increasing order, so components already come out
  // sorted by smallest member.
  return out;
}

}  // namespace

std::vector<VertexSet> connected_components(const Graph& g) {
  return components(g, g.all_vertices(), false);
}

std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within) {
  return components(g, within, false);
}

std::vector<VertexSet> co_components(const Graph& g, const VertexSet& within) {
  return components(g, within, true);
}

VertexSet spanned_vertices(const Graph& g, std::span<const Edge> edges) {
  VertexSet s = g.empty_set();
  for (Edge e : edges) {
    s.insert(e.u);
    s.insert(e.v);
  }
  return s;
}

VertexSet spanned_vertices(const Graph& g, std::span<const DirectedEdge> edges) {
  VertexSet s = g.empty_set();
  for (DirectedEdge e : edges) {
    s.insert(e.tail);
    s.insert(e.head);
  }
  return s;
}

}  // namespace transor
