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

#ifndef TRANSOR_DECOMPOSITION_H_
#define TRANSOR_DECOMPOSITION_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "transor/graph.h"

namespace transor {

enum class NodeKind { kLeaf, kParallel, kSeries, kPrime };

std::string_view to_string(NodeKind kind);

// Node of the strong-module tree. Children are ordered by smallest vertex
// and `representatives[i]` is the smallest vertex of child i, so the i-th
// quotient vertex stands for the i-th child.
struct DecompositionNode {
  VertexSet vertices;
  NodeKind kind = NodeKind::kLeaf;
  std::vector<DecompositionNode> children;
  std::vector<VertexId> representatives;
  Graph quotient;
};

struct DecompositionOptions {
  // Visit candidate vertex pairs in an order shuffled with this seed. The
  // result must not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

// Every vertex outside X sees all of X or none of X.
bool is_module(const Graph& g, const VertexSet& x);

// Inclusion-minimal module containing `seed` (non-empty).
VertexSet smallest_module(const Graph& g, const VertexSet& seed);

// X is a module that no other module overlaps.
bool is_strong_module(const Graph& g, const VertexSet& x);
bool is_strong_module(const DecompositionNode& tree, const Graph& g, const VertexSet& x);

// The maximal strong modules other than V. Requires |V| >= 2.
std::vector<VertexSet> maximal_strong_partition(const Graph& g,
                                                const DecompositionOptions& options = {});

// Requires |V| >= 1.
DecompositionNode decomposition_tree(const Graph& g, const DecompositionOptions& options = {});

// Graph on the smallest vertex of each part. Throws DomainError unless the
// parts partition V into modules.
Graph quotient(const Graph& g, const std::vector<VertexSet>& partition);

// Node reached by following child indices from the root.
const DecompositionNode& node_at(const DecompositionNode& root, const std::vector<int>& path);

// Nodes in pre-order, with their paths.
struct TreeVisit {
  const DecompositionNode* node;
  std::vector<int> path;
};
std::vector<TreeVisit> preorder(const DecompositionNode& root);

}  // namespace transor

#endif  // TRANSOR_DECOMPOSITION_H_
