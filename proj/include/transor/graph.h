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

#ifndef TRANSOR_GRAPH_H_
#define TRANSOR_GRAPH_H_

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "transor/vertex_set.h"

namespace transor {

// Vertex token order: tokens made only of decimal digits come first, ordered
// by numeric value; all other tokens follow in byte-wise order.
bool vertex_less(std::string_view a, std::string_view b);

// Undirected edge between dense indices, normalized so that u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;
  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct DirectedEdge {
  VertexId tail = 0;
  VertexId head = 0;
  DirectedEdge reversed() const { return {head, tail}; }
  friend auto operator<=>(const DirectedEdge&, const DirectedEdge&) = default;
};

// Immutable undirected simple graph over named vertices.
//
// Vertices are stored sorted by vertex_less and addressed by their rank in
// that order; edges are sorted and addressed by an edge id.
class Graph {
 public:
  Graph() = default;

  // Builds a graph from vertex names and named edges. Vertices mentioned
  // only in `edges` are added. Duplicate edges collapse. Throws DomainError
  // on a self-loop.
  Graph(std::vector<std::string> vertices,
        const std::vector<std::pair<std::string, std::string>>& edges);

  // Index-based construction; `names` must already be strictly increasing
  // under vertex_less. Throws DomainError on self-loops, out-of-range
  // endpoints or unsorted names.
  static Graph from_indexed(std::vector<std::string> names,
                            std::span<const Edge> edges);

  std::size_t vertex_count() const { return names_.size(); }
  std::size_t edge_count() const { return edges_.size(); }

  const std::vector<std::string>& names() const { return names_; }
  const std::string& name(VertexId v) const { return names_[static_cast<std::size_t>(v)]; }
  std::optional<VertexId> find(std::string_view name) const;
  VertexId index_of(std::string_view name) const;  // throws DomainError

  const std::vector<Edge>& edges() const { return edges_; }
  const VertexSet& neighbors(VertexId v) const { return adj_[static_cast<std::size_t>(v)]; }
  bool adjacent(VertexId a, VertexId b) const { return adj_[static_cast<std::size_t>(a)].contains(b); }
  // Edge id of {a, b}, or -1.
  int edge_id(VertexId a, VertexId b) const {
    return edge_ids_[static_cast<std::size_t>(a) * names_.size() + static_cast<std::size_t>(b)];
  }

  VertexSet all_vertices() const { return VertexSet::full(names_.size()); }
  VertexSet empty_set() const { return VertexSet(names_.size()); }
  VertexSet make_set(std::span<const std::string> names) const;
  std::vector<std::string> names_of(const VertexSet& set) const;

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.names_ == b.names_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<std::string> names_;
  std::vector<Edge> edges_;
  std::vector<VertexSet> adj_;
  std::vector<int> edge_ids_;
};

// G(X) = (X, E(X)). Throws DomainError if X has a different universe.
Graph induced_subgraph(const Graph& g, const VertexSet& x);

Graph complement(const Graph& g);

// Maximal connected vertex sets, ordered by smallest member.
std::vector<VertexSet> connected_components(const Graph& g);

// Components of G(within); helper for recursive decomposition.
std::vector<VertexSet> connected_components(const Graph& g, const VertexSet& within);
// Components of the complement of G(within), without building it.
std::vector<VertexSet> co_components(const Graph& g, const VertexSet& within);

// Endpoints of a set of edges.
VertexSet spanned_vertices(const Graph& g, std::span<const Edge> edges);
VertexSet spanned_vertices(const Graph& g, std::span<const DirectedEdge> edges);

}  // namespace transor

#endif  // TRANSOR_GRAPH_H_
