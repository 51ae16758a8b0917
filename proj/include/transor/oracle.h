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

#ifndef TRANSOR_ORACLE_H_
#define TRANSOR_ORACLE_H_

// Brute-force ground truth for the fast paths, plus the graph corpus the
// property suites run on. Nothing here calls the decomposition, forcing or
// orientation code.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "transor/graph.h"
#include "transor/orientation.h"

namespace transor::oracle {

inline constexpr std::size_t kMaxOrientationEdges = 20;
inline constexpr std::size_t kMaxModuleVertices = 12;

// All 2^|E| direction assignments that are transitive, sorted by their
// sorted arc lists. Throws OracleScaleError when |E| > 20.
std::vector<Orientation> brute_force_orientations(const Graph& g);

// Every non-empty module, by subset scan. Throws OracleScaleError when
// |V| > 12.
std::vector<VertexSet> brute_force_modules(const Graph& g);

// Modules overlapped by no other module.
std::vector<VertexSet> brute_force_strong_modules(const Graph& g);

// SplitMix64 (Steele, Lea, Flood 2014). Bit-exact on every platform:
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}
  std::uint64_t next();
  // (next() >> 11) * 2^-53, uniform in [0, 1).
  double next_unit();

 private:
  std::uint64_t state_;
};

// Vertices "0".."n-1". Pairs {i, j}, i < j, are visited in lexicographic
// order and each is kept when next_unit() < p. Throws DomainError for
// n == 0 or p outside [0, 1].
Graph random_graph(std::size_t n, double p, std::uint64_t seed);

// Frozen fixtures: paw, p4, c4, c5, k3, k4, k13, join_k2_2k1, 2k2.
std::vector<std::pair<std::string, Graph>> fixtures();
Graph fixture(std::string_view name);  // throws DomainError if unknown

// K_n on vertices "1".."n".
Graph complete_graph(std::size_t n);

// All 2^(n(n-1)/2) graphs on the labeled vertices a, b, c, ... (n <= 8).
std::vector<Graph> labeled_graphs(std::size_t n);

// labeled_graphs(1) .. labeled_graphs(max_n), concatenated.
std::vector<Graph> exhaustive_family(std::size_t max_n);

struct RandomFamilyOptions {
  std::size_t count = 200;
  std::size_t max_vertices = 8;
  std::vector<double> probabilities{0.2, 0.5, 0.8};
  std::uint64_t seed = 0x7472616e736f72ULL;
  // Redraw (same n and p, next seed) while the graph has more edges than
  // this, so every member stays within brute-force reach.
  std::size_t max_edges = kMaxOrientationEdges;
};

// Graph i uses probabilities[i % size] and n uniform in [1, max_vertices].
std::vector<Graph> random_family(const RandomFamilyOptions& options = {});

}  // namespace transor::oracle

#endif  // TRANSOR_ORACLE_H_
