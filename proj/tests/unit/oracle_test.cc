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

#include <gtest/gtest.h>

#include "transor/errors.h"

namespace transor {
namespace {

using Names = std::vector<std::string>;

std::vector<Names> named(const Graph& g, const std::vector<VertexSet>& sets) {
  std::vector<Names> out;
  for (const VertexSet& s : sets) out.push_back(g.names_of(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Names> trivial_plus(const Graph& g, std::vector<Names> extra) {
  std::vector<Names> out = std::move(extra);
  for (const std::string& v : g.names()) out.push_back({v});
  out.push_back(g.names());
  std::sort(out.begin(), out.end());
  return out;
}

TEST(BruteForceOrientations, Examples) {
  EXPECT_EQ(oracle::brute_force_orientations(oracle::fixture("paw")).size(), 4u);
  EXPECT_TRUE(oracle::brute_force_orientations(oracle::fixture("c5")).empty());
  EXPECT_EQ(oracle::brute_force_orientations(oracle::fixture("k3")).size(), 6u);
  EXPECT_EQ(oracle::brute_force_orientations(Graph({"a"}, {})).size(), 1u);
}

TEST(BruteForceOrientations, SortedAndScaleGuarded) {
  const auto all = oracle::brute_force_orientations(oracle::fixture("k4"));
  ASSERT_EQ(all.size(), 24u);
  for (std::size_t i = 1; i < all.size(); ++i) EXPECT_LT(all[i - 1].sorted_arcs(), all[i].sorted_arcs());
  EXPECT_NO_THROW(oracle::brute_force_orientations(oracle::complete_graph(6)));
  EXPECT_THROW(oracle::brute_force_orientations(oracle::complete_graph(7)), OracleScaleError);
}

TEST(BruteForceModules, Examples) {
  const Graph paw = oracle::fixture("paw");
  EXPECT_EQ(named(paw, oracle::brute_force_modules(paw)), trivial_plus(paw, {{"b", "c"}, {"b", "c", "d"}}));
  const Graph p4 = oracle::fixture("p4");
  EXPECT_EQ(named(p4, oracle::brute_force_modules(p4)), trivial_plus(p4, {}));
  const Graph k3 = oracle::fixture("k3");
  EXPECT_EQ(oracle::brute_force_modules(k3).size(), 7u);
}

TEST(BruteForceStrongModules, Examples) {
  const Graph paw = oracle::fixture("paw");
  EXPECT_EQ(named(paw, oracle::brute_force_strong_modules(paw)), trivial_plus(paw, {{"b", "c"}, {"b", "c", "d"}}));
  const Graph k3 = oracle::fixture("k3");
  EXPECT_EQ(named(k3, oracle::brute_force_strong_modules(k3)), trivial_plus(k3, {}));
  const Graph join = oracle::fixture("join_k2_2k1");
  EXPECT_EQ(named(join, oracle::brute_force_strong_modules(join)), trivial_plus(join, {{"b", "c"}}));
}

TEST(BruteForceModules, ScaleGuard) {
  EXPECT_NO_THROW(oracle::brute_force_modules(Graph(Names{"1", "2", "3", "4", "5", "6", "7", "8", "9", "10", "11", "12"}, {})));
  EXPECT_THROW(oracle::brute_force_modules(oracle::complete_graph(13)), OracleScaleError);
  EXPECT_THROW(oracle::brute_force_strong_modules(oracle::complete_graph(13)), OracleScaleError);
}

TEST(SplitMix64, ReferenceOutputs) {
  oracle::SplitMix64 rng(1234567);
  EXPECT_EQ(rng.next(), 6457827717110365317ULL);
  EXPECT_EQ(rng.next(), 3203168211198807973ULL);
  EXPECT_EQ(rng.next(), 9817491932198370423ULL);
  EXPECT_EQ(rng.next(), 4593380528125082431ULL);
  EXPECT_EQ(rng.next(), 16408922859458223821ULL);
  oracle::SplitMix64 zero(0);
  EXPECT_EQ(zero.next(), 0xE220A8397B1DCDAFULL);
}

TEST(SplitMix64, UnitInterval) {
  oracle::SplitMix64 a(7), b(7);
  for (int i = 0; i < 1000; ++i) {
    const double u = a.next_unit();
    EXPECT_GE(u, 0.0);
    EXPECT_LT(u, 1.0);
    EXPECT_EQ(static_cast<double>(b.next() >> 11) * 0x1.0p-53, u);
  }
}

TEST(RandomGraph, Examples) {
  const Graph one = oracle::random_graph(1, 0.5, 3);
  EXPECT_EQ(one.vertex_count(), 1u);
  EXPECT_EQ(oracle::random_graph(4, 1.0, 9), Graph({}, {{"0", "1"}, {"0", "2"}, {"0", "3"}, {"1", "2"}, {"1", "3"}, {"2", "3"}}));
  const Graph none = oracle::random_graph(4, 0.0, 9);
  EXPECT_EQ(none.vertex_count(), 4u);
  EXPECT_EQ(none.edge_count(), 0u);
}

TEST(RandomGraph, DeterministicPerSeed) {
  EXPECT_EQ(oracle::random_graph(12, 0.4, 5), oracle::random_graph(12, 0.4, 5));
  EXPECT_NE(oracle::random_graph(12, 0.4, 5), oracle::random_graph(12, 0.4, 6));
  // First kept pair follows directly from the generator.
  oracle::SplitMix64 rng(5);
  const bool first = rng.next_unit() < 0.4;
  EXPECT_EQ(oracle::random_graph(12, 0.4, 5).adjacent(0, 1), first);
}

TEST(RandomGraph, RejectsBadArguments) {
  EXPECT_THROW(oracle::random_graph(0, 0.5, 1), DomainError);
  EXPECT_THROW(oracle::random_graph(3, -0.1, 1), DomainError);
  EXPECT_THROW(oracle::random_graph(3, 1.5, 1), DomainError);
}

TEST(Fixtures, NamesAndShapes) {
  const auto all = oracle::fixtures();
  Names names;
  for (const auto& [name, g] : all) names.push_back(name);
  EXPECT_EQ(names, (Names{"paw", "p4", "c4", "c5", "k3", "k4", "k13", "join_k2_2k1", "2k2"}));
  EXPECT_EQ(oracle::fixture("paw"), Graph({}, {{"a", "b"}, {"a", "c"}, {"a", "d"}, {"b", "c"}}));
  EXPECT_EQ(oracle::fixture("k13").edge_count(), 3u);
  EXPECT_THROW(oracle::fixture("petersen"), DomainError);
}

TEST(Families, Sizes) {
  EXPECT_EQ(oracle::labeled_graphs(4).size(), 64u);
  EXPECT_EQ(oracle::labeled_graphs(1).size(), 1u);
  EXPECT_EQ(oracle::exhaustive_family(5).size(), 1099u);
  EXPECT_THROW(oracle::labeled_graphs(9), OracleScaleError);
  const auto random = oracle::random_family();
  ASSERT_EQ(random.size(), 200u);
  for (const Graph& g : random) {
    EXPECT_GE(g.vertex_count(), 1u);
    EXPECT_LE(g.vertex_count(), 8u);
    EXPECT_LE(g.edge_count(), oracle::kMaxOrientationEdges);
  }
  EXPECT_EQ(random, oracle::random_family());
}

}  // namespace
}  // namespace transor
