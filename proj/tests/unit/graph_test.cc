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

#include <gtest/gtest.h>

#include "transor/errors.h"
#include "transor/oracle.h"

namespace transor {
namespace {

std::vector<std::vector<std::string>> named(const Graph& g, const std::vector<VertexSet>& sets) {
  std::vector<std::vector<std::string>> out;
  for (const VertexSet& s : sets) out.push_back(g.names_of(s));
  return out;
}

using Names = std::vector<std::string>;

TEST(VertexOrder, DigitsFirstThenBytewise) {
  EXPECT_TRUE(vertex_less("2", "10"));
  EXPECT_FALSE(vertex_less("10", "2"));
  EXPECT_TRUE(vertex_less("99", "a"));
  EXPECT_TRUE(vertex_less("B", "a"));
  EXPECT_TRUE(vertex_less("a1", "a2"));
  EXPECT_TRUE(vertex_less("a10", "a2"));
  EXPECT_FALSE(vertex_less("a", "a"));
}

TEST(Graph, BuildsFromNamedEdges) {
  const Graph g({}, {{"b", "a"}, {"b", "c"}});
  EXPECT_EQ(g.names(), (Names{"a", "b", "c"}));
  ASSERT_EQ(g.edge_count(), 2u);
  EXPECT_EQ(g.edges()[0], (Edge{0, 1}));
  EXPECT_EQ(g.edges()[1], (Edge{1, 2}));
  EXPECT_TRUE(g.adjacent(1, 0));
  EXPECT_FALSE(g.adjacent(0, 2));
  EXPECT_EQ(g.edge_id(2, 1), 1);
  EXPECT_EQ(g.edge_id(0, 2), -1);
}

TEST(Graph, DeclaredVerticesAndDuplicates) {
  const Graph g({"z", "10", "2"}, {{"2", "10"}, {"10", "2"}});
  EXPECT_EQ(g.names(), (Names{"2", "10", "z"}));
  EXPECT_EQ(g.edge_count(), 1u);
  EXPECT_EQ(g.neighbors(2).size(), 0u);
}

TEST(Graph, RejectsSelfLoop) { EXPECT_THROW(Graph({}, {{"a", "a"}}), DomainError); }

TEST(Graph, FromIndexedValidates) {
  const std::vector<Edge> ok{{0, 1}};
  EXPECT_EQ(Graph::from_indexed({"a", "b"}, ok).edge_count(), 1u);
  const std::vector<Edge> loop{{1, 1}};
  EXPECT_THROW(Graph::from_indexed({"a", "b"}, loop), DomainError);
  const std::vector<Edge> out_of_range{{0, 5}};
  EXPECT_THROW(Graph::from_indexed({"a", "b"}, out_of_range), DomainError);
  EXPECT_THROW(Graph::from_indexed({"b", "a"}, ok), DomainError);
}

TEST(Graph, LookupByName) {
  const Graph g = oracle::fixture("paw");
  EXPECT_EQ(g.index_of("c"), 2);
  EXPECT_FALSE(g.find("x").has_value());
  EXPECT_THROW(g.index_of("x"), DomainError);
  EXPECT_EQ(g.names_of(g.make_set(Names{"d", "b"})), (Names{"b", "d"}));
  EXPECT_THROW(g.make_set(Names{"q"}), DomainError);
}

TEST(InducedSubgraph, PawTriangle) {
  const Graph g = oracle::fixture("paw");
  const Graph h = induced_subgraph(g, g.make_set(Names{"a", "b", "c"}));
  EXPECT_EQ(h, Graph({}, {{"a", "b"}, {"a", "c"}, {"b", "c"}}));
}

TEST(InducedSubgraph, WholeAndEmpty) {
  const Graph g = oracle::fixture("c5");
  EXPECT_EQ(induced_subgraph(g, g.all_vertices()), g);
  const Graph empty = induced_subgraph(g, g.empty_set());
  EXPECT_EQ(empty.vertex_count(), 0u);
  EXPECT_EQ(empty.edge_count(), 0u);
}

TEST(InducedSubgraph, RejectsForeignSet) {
  const Graph g = oracle::fixture("paw");
  EXPECT_THROW(induced_subgraph(g, VertexSet(7, {0, 6})), DomainError);
}

TEST(InducedSubgraph, EdgeCountMatchesInsideEdges) {
  for (const Graph& g : oracle::labeled_graphs(4)) {
    for (unsigned mask = 0; mask < 16; ++mask) {
      VertexSet x = g.empty_set();
      for (int v = 0; v < 4; ++v)
        if (mask >> v & 1U) x.insert(v);
      std::size_t inside = 0;
      for (const Edge& e : g.edges()) inside += x.contains(e.u) && x.contains(e.v);
      EXPECT_EQ(induced_subgraph(g, x).edge_count(), inside);
    }
  }
}

TEST(Complement, Examples) {
  EXPECT_EQ(complement(oracle::fixture("k3")).edge_count(), 0u);
  EXPECT_EQ(complement(oracle::fixture("k3")).vertex_count(), 3u);
  EXPECT_EQ(complement(oracle::fixture("c4")), Graph({}, {{"a", "c"}, {"b", "d"}}));
  EXPECT_EQ(complement(Graph({"x", "y"}, {})), Graph({}, {{"x", "y"}}));
}

TEST(Complement, IsAnInvolution) {
  for (const Graph& g : oracle::exhaustive_family(4)) EXPECT_EQ(complement(complement(g)), g);
}

TEST(Components, Examples) {
  const Graph c4 = oracle::fixture("c4");
  EXPECT_EQ(named(c4, connected_components(c4)), (std::vector<Names>{{"a", "b", "c", "d"}}));
  const Graph two = oracle::fixture("2k2");
  EXPECT_EQ(named(two, connected_components(two)), (std::vector<Names>{{"a", "b"}, {"c", "d"}}));
  const Graph one({"v"}, {});
  EXPECT_EQ(named(one, connected_components(one)), (std::vector<Names>{{"v"}}));
}

TEST(Components, PartitionWithoutCrossingEdges) {
  for (const Graph& g : oracle::exhaustive_family(5)) {
    const auto parts = connected_components(g);
    VertexSet seen = g.empty_set();
    for (const VertexSet& p : parts) {
      EXPECT_FALSE(p.intersects(seen));
      seen |= p;
      EXPECT_EQ(connected_components(induced_subgraph(g, p)).size(), 1u);
    }
    EXPECT_EQ(seen, g.all_vertices());
    for (const Edge& e : g.edges())
      for (const VertexSet& p : parts) EXPECT_EQ(p.contains(e.u), p.contains(e.v));
  }
}

TEST(Components, WithinSubsetAndCoComponents) {
  const Graph paw = oracle::fixture("paw");
  const VertexSet bcd = paw.make_set(Names{"b", "c", "d"});
  EXPECT_EQ(named(paw, connected_components(paw, bcd)), (std::vector<Names>{{"b", "c"}, {"d"}}));
  EXPECT_EQ(named(paw, co_components(paw, paw.all_vertices())), (std::vector<Names>{{"a"}, {"b", "c", "d"}}));
  for (const Graph& g : oracle::exhaustive_family(4))
    EXPECT_EQ(co_components(g, g.all_vertices()), connected_components(complement(g)));
}

TEST(SpannedVertices, Examples) {
  const Graph paw = oracle::fixture("paw");
  const std::vector<DirectedEdge> a{{0, 1}, {0, 2}};
  EXPECT_EQ(paw.names_of(spanned_vertices(paw, a)), (Names{"a", "b", "c"}));
  EXPECT_TRUE(spanned_vertices(paw, std::vector<DirectedEdge>{}).empty());
  const std::vector<Edge> color{{0, 1}, {0, 2}, {0, 3}};
  EXPECT_EQ(spanned_vertices(paw, color), paw.all_vertices());
}

TEST(VertexSet, Operations) {
  VertexSet s(130, {1, 64, 129});
  EXPECT_EQ(s.size(), 3u);
  EXPECT_EQ(s.first(), 1);
  EXPECT_TRUE(s.contains(129));
  s.erase(1);
  EXPECT_EQ(s.first(), 64);
  const VertexSet t(130, {64, 2});
  EXPECT_TRUE(s.overlaps(t));
  EXPECT_EQ((s & t).members(), (std::vector<VertexId>{64}));
  EXPECT_EQ((s | t).size(), 3u);
  EXPECT_EQ((s - t).members(), (std::vector<VertexId>{129}));
  EXPECT_TRUE((s & t).is_subset_of(s));
  EXPECT_EQ(VertexSet(5).first(), -1);
  EXPECT_TRUE(VertexSet(130, {1, 2}) < VertexSet(130, {1, 3}));
}

}  // namespace
}  // namespace transor
