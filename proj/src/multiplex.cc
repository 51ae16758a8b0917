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

#include "transor/multiplex.h"

#include <algorithm>
#include <set>

#include "transor/errors.h"

namespace transor {
namespace {

void fill_from_edges(const Graph& g, const ColorMap& colors, Multiplex& m) {
  std::sort(m.edges.begin(), m.edges.end());
  std::set<int> ids;
  std::vector<Edge> edges;
  for (int e : m.edges) {
    ids.insert(colors.color_of(e));
    edges.push_back(g.edges()[static_cast<std::size_t>(e)]);
  }
  m.colors.assign(ids.begin(), ids.end());
  m.span = spanned_vertices(g, edges);
}

}  // namespace

Multiplex make_multiplex(const Graph& g, const ColorMap& colors, std::vector<int> color_ids) {
  std::sort(color_ids.begin(), color_ids.end());
  color_ids.erase(std::unique(color_ids.begin(), color_ids.end()), color_ids.end());
  if (color_ids.empty()) throw DomainError("a multiplex needs at least one color");

  int r = 1;
  while (static_cast<std::size_t>(r * (r + 1) / 2) < color_ids.size()) ++r;
  if (static_cast<std::size_t>(r * (r + 1) / 2) != color_ids.size())
    throw DomainError("color count is not that of a simplex");

  Multiplex m;
  m.rank = r;
  for (int id : color_ids) {
    if (id < 0 || static_cast<std::size_t>(id) >= colors.size()) throw DomainError("unknown color id");
    const auto& undirected = colors[static_cast<std::size_t>(id)].undirected;
    m.edges.insert(m.edges.end(), undirected.begin(), undirected.end());
  }
  fill_from_edges(g, colors, m);
  return m;
}

std::vector<Multiplex> multiplex_partition(const Graph& g, const DecompositionNode& tree) {
  return multiplex_partition(g, tree, color_classes(g));
}

std::vector<Multiplex> multiplex_partition(const Graph& g, const DecompositionNode& tree,
                                           const ColorMap& colors) {
  std::vector<Multiplex> out;
  std::vector<int> child_of(g.vertex_count(), -1);
  for (const TreeVisit& visit : preorder(tree)) {
    const DecompositionNode& node = *visit.node;
    if (node.kind != NodeKind::kSeries && node.kind != NodeKind::kPrime) continue;

    for (std::size_t i = 0; i < node.children.size(); ++i)
      node.children[i].vertices.for_each([&](VertexId v) { child_of[static_cast<std::size_t>(v)] = static_cast<int>(i); });

    Multiplex m;
    m.node_path = visit.path;
    m.kind = node.kind;
    m.rank = node.kind == NodeKind::kSeries ? static_cast<int>(node.children.size()) - 1 : 1;
    for (std::size_t e = 0; e < g.edge_count(); ++e) {
      const Edge edge = g.edges()[e];
      if (!node.vertices.contains(edge.u) || !node.vertices.contains(edge.v)) continue;
      if (child_of[static_cast<std::size_t>(edge.u)] != child_of[static_cast<std::size_t>(edge.v)])
        m.edges.push_back(static_cast<int>(e));
    }
    fill_from_edges(g, colors, m);
    out.push_back(std::move(m));
  }
  return out;
}

int rank(const Multiplex& m) { return m.rank; }

bool is_maximal_multiplex(const Graph& g, const Multiplex& m) {
  return is_strong_module(g, m.span);
}

bool simplex_extension_exists(const Graph& g, const ColorMap& colors, const Multiplex& m, VertexId a) {
  if (m.span.contains(a)) throw DomainError("vertex lies in the span of the multiplex");
  std::set<int> fresh;
  (g.neighbors(a) & m.span).for_each([&](VertexId b) {
    const int c = colors.color_of(g, a, b);
    if (!std::binary_search(m.colors.begin(), m.colors.end(), c)) fresh.insert(c);
  });
  return fresh.size() >= 2;
}

}  // namespace transor
