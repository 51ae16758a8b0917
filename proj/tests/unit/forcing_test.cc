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

#include "transor/forcing.h"

#include <gtest/gtest.h>

#include "transor/errors.h"
#include "transor/oracle.h"

namespace transor {
namespace {

DirectedEdge arc(const Graph& g, std::string_view t, std::string_view h) { return {g.index_of(t), g.index_of(h)}; }

std::vector<std::string> edge_names(const Graph& g, const std::vector<int>& ids) {
  std::vector<std::string> out;
  for (int id : ids) out.push_back(g.name(g.edges()[static_cast<std::size_t>(id)].u) + g.name(g.edges()[static_cast<std::size_t>(id)].v));
  return out;
}

TEST(GammaForces, PawExamples) {
  const Graph g = oracle::fixture("paw");
  EXPECT_TRUE(gamma_forces(arc(g, "a", "d"), arc(g, "a", "b"), g));
  EXPECT_TRUE(gamma_forces(arc(g, "a", "d"), arc(g, "a", "c"), g));
  for (const Edge& e : g.edges()) {
    for (DirectedEdge other : {DirectedEdge{e.u, e.v}, DirectedEdge{e.v, e.u}}) {
      if (g.edge_id(other.tail, other.head) == g.edge_id(g.index_of("b"), g.index_of("c"))) continue;
      EXPECT_FALSE(gamma_forces(other, arc(g, "b", "c"), g));
      EXPECT_FALSE(gamma_forces(other, arc(g, "c", "b"), g));
    }
  }
}

TEST(GammaForces, SharedHead) {
  const Graph g = oracle::fixture("p4");
  EXPECT_TRUE(gamma_forces(arc(g, "a", "b"), arc(g, "c", "b"), g));
  EXPECT_FALSE(gamma_forces(arc(g, "a", "b"), arc(g, "b", "c"), g));
}

TEST(GammaForces, ReflexiveAndRejectsMissingEdges) {
  const Graph g = oracle::fixture("p4");
  EXPECT_TRUE(gamma_forces(arc(g, "a", "b"), arc(g, "a", "b"), g));
  EXPECT_THROW(gamma_forces(arc(g, "a", "c"), arc(g, "a", "b"), g), DomainError);
  EXPECT_THROW(gamma_forces(arc(g, "a", "b"), arc(g, "a", "d"), g), DomainError);
}

TEST(ColorClasses, Paw) {
  const Graph g = oracle::fixture("paw");
  const ColorMap colors = color_classes(g);
  ASSERT_EQ(colors.size(), 2u);
  EXPECT_EQ(edge_names(g, colors[0].undirected), (std::vector<std::string>{"ab", "ac", "ad"}));
  EXPECT_EQ(colors[0].class_a,
            (std::vector<DirectedEdge>{arc(g, "a", "b"), arc(g, "a", "c"), arc(g, "a", "d")}));
  EXPECT_EQ(colors[0].span, g.all_vertices());
  EXPECT_FALSE(colors[0].self_inverse);
  EXPECT_EQ(edge_names(g, colors[1].undirected), (std::vector<std::string>{"bc"}));
  EXPECT_EQ(colors[1].class_a, (std::vector<DirectedEdge>{arc(g, "b", "c")}));
  EXPECT_EQ(colors[1].class_a_inv, (std::vector<DirectedEdge>{arc(g, "c", "b")}));
  EXPECT_TRUE(colors.in_class_a(g, arc(g, "a", "d")));
  EXPECT_FALSE(colors.in_class_a(g, arc(g, "d", "a")));
  EXPECT_EQ(colors.color_of(g, g.index_of("c"), g.index_of("b")), 1);
}

TEST(ColorClasses, K3HasThreeSingletonColors) {
  const ColorMap colors = color_classes(oracle::fixture("k3"));
  ASSERT_EQ(colors.size(), 3u);
  for (const ColorClass& c : colors.colors()) EXPECT_EQ(c.undirected.size(), 1u);
}

TEST(ColorClasses, C5IsOneSelfInverseColor) {
  const Graph g = oracle::fixture("c5");
  const ColorMap colors = color_classes(g);
  ASSERT_EQ(colors.size(), 1u);
  EXPECT_TRUE(colors[0].self_inverse);
  EXPECT_EQ(colors[0].class_a, colors[0].class_a_inv);
  EXPECT_EQ(colors[0].class_a.size(), 10u);
  EXPECT_TRUE(colors.in_class_a(g, arc(g, "b", "a")));
}

TEST(ColorClasses, EdgelessGraph) { EXPECT_EQ(color_classes(Graph({"a", "b"}, {})).size(), 0u); }

TEST(ColorClasses, IdsFollowSmallestDirectedEdge) {
  for (const Graph& g : oracle::exhaustive_family(5)) {
    const ColorMap colors = color_classes(g);
    for (std::size_t i = 0; i < colors.size(); ++i) {
      EXPECT_EQ(colors[i].id, static_cast<int>(i));
      const DirectedEdge smallest = std::min(colors[i].class_a.front(), colors[i].class_a_inv.front());
      EXPECT_EQ(smallest, colors[i].class_a.front());
      if (i > 0) EXPECT_LT(colors[i - 1].class_a.front(), colors[i].class_a.front());
    }
  }
}

TEST(Comparability, Examples) {
  EXPECT_TRUE(is_comparability(oracle::fixture("paw")));
  EXPECT_FALSE(is_comparability(oracle::fixture("c5")));
  EXPECT_TRUE(is_comparability(oracle::fixture("k4")));
  EXPECT_TRUE(is_comparability(Graph({"x"}, {})));
}

TEST(Comparability, AgreesWithBruteForce) {
  for (const Graph& g : oracle::exhaustive_family(5))
    EXPECT_EQ(is_comparability(g), !oracle::brute_force_orientations(g).empty());
}

TEST(TriangleLemma, Examples) {
  EXPECT_TRUE(check_triangle_lemma(oracle::fixture("k3")).empty());
  EXPECT_TRUE(check_triangle_lemma(oracle::fixture("paw")).empty());
  EXPECT_TRUE(check_triangle_lemma(oracle::fixture("c4")).empty());
}

}  // namespace
}  // namespace transor
