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

#ifndef TRANSOR_ORIENTATION_H_
#define TRANSOR_ORIENTATION_H_

#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "transor/decomposition.h"
#include "transor/graph.h"

namespace transor {

using BigCount = boost::multiprecision::cpp_int;

// arcs[i] is the chosen direction of g.edges()[i].
struct Orientation {
  std::vector<DirectedEdge> arcs;

  // Arcs sorted by (tail, head).
  std::vector<DirectedEdge> sorted_arcs() const;
  friend bool operator==(const Orientation&, const Orientation&) = default;
};

// Choice at one series or prime node. Series: `order` is a permutation of
// child indices, earlier children point to later ones. Prime: `order` is
// empty and `inverse` selects A^-1 over the canonical class A.
struct NodeChoice {
  std::vector<int> order;
  bool inverse = false;
  friend bool operator==(const NodeChoice&, const NodeChoice&) = default;
};

// Series and prime nodes in pre-order; choices are indexed the same way.
std::vector<const DecompositionNode*> choice_nodes(const DecompositionNode& tree);

// Identity permutations and canonical classes.
std::vector<NodeChoice> first_choices(const DecompositionNode& tree);

// Precomputed crossing edges of every choice node, so that materializing
// one set of choices is linear in |E|.
class LiftPlan {
 public:
  LiftPlan(const Graph& g, const DecompositionNode& tree);

  std::size_t node_count() const { return nodes_.size(); }
  std::size_t child_count(std::size_t node) const { return nodes_[node].child_count; }
  bool is_prime(std::size_t node) const { return nodes_[node].prime; }
  // Throws DomainError on a missing or malformed choice.
  Orientation materialize(std::span<const NodeChoice> choices) const;

 private:
  struct Crossing {
    int edge;
    int child_u;  // child holding the smaller endpoint
    int child_v;
    bool a_forward;  // prime only: child_u -> child_v lies in class A
  };
  struct Node {
    bool prime = false;
    bool orientable = true;
    std::size_t child_count = 0;
    std::vector<Crossing> crossings;
  };
  std::vector<Edge> edges_;
  std::vector<Node> nodes_;
};

Orientation materialize(const Graph& g, const DecompositionNode& tree, std::span<const NodeChoice> choices);

// Exact number of transitive orientations.
BigCount count_orientations(const Graph& g);

// Lazy, deterministic stream of every transitive orientation. Choices vary
// like an odometer over choice_nodes(): the first node changes slowest,
// series permutations advance lexicographically, prime nodes take A before
// A^-1. Empty for non-comparability graphs.
class OrientationStream {
 public:
  OrientationStream(const Graph& g, std::optional<std::uint64_t> limit = std::nullopt);

  std::optional<Orientation> next();

 private:
  bool advance();

  std::optional<LiftPlan> plan_;
  std::vector<NodeChoice> choices_;
  std::optional<std::uint64_t> limit_;
  std::uint64_t emitted_ = 0;
  bool done_ = false;
};

OrientationStream enumerate_orientations(const Graph& g, std::optional<std::uint64_t> limit = std::nullopt);

// Every x->y, y->z has x->z. Throws DomainError unless O orients exactly
// the edges of g.
bool is_transitive(const Graph& g, const Orientation& o);

// Brute-force modules of the digraph O (|V| <= 10, else OracleScaleError).
std::vector<VertexSet> directed_modules(const Graph& g, const Orientation& o);

// Directed modules overlapped by no other directed module. Throws
// DomainError if O is not transitive.
std::vector<VertexSet> strong_modules_of_order(const Graph& g, const Orientation& o);

}  // namespace transor

#endif  // TRANSOR_ORIENTATION_H_
