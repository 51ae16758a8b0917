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

#include "transor/decomposition.h"

#include <algorithm>
#include <numeric>
#include <random>

#include "transor/errors.h"

namespace transor {
namespace {

bool splits(const Graph& g, VertexId c, const VertexSet& x) {
  const VertexSet& nbrs = g.neighbors(c);
  return nbrs.intersects(x) && !x.is_subset_of(nbrs);
}

bool is_module_within(const Graph& g, const VertexSet& within, const VertexSet& x) {
  bool ok = true;
  (within - x).for_each([&](VertexId c) { ok = ok && !splits(g, c, x); });
  return ok;
}

VertexSet smallest_module_within(const Graph& g, const VertexSet& within, VertexSet module) {
  bool changed = true;
  while (changed && module != within) {
    changed = false;
    (within - module).for_each([&](VertexId c) {
      if (splits(g, c, module)) {
        module.insert(c);
        changed = true;
      }
    });
  }
  return module;
}

std::vector<VertexSet> strong_partition_within(const Graph& g, const VertexSet& within,
                                               const DecompositionOptions& options) {
  if (within.size() < 2) throw DomainError("maximal strong partition needs at least two vertices");

  if (auto comps = connected_components(g, within); comps.size() > 1) return comps;
  if (auto co = co_components(g, within); co.size() > 1) return co;

  // G(within) and its complement are both connected: the maximal proper
  // modules are disjoint. Merge the closures of all vertex pairs that stay
  // proper; chains of intersecting modules union to a module.
  std::vector<VertexId> order = within.members();
  if (options.shuffle_seed) {
    std::mt19937_64 rng(*options.shuffle_seed);
    std::shuffle(order.begin(), order.end(), rng);
  }

  std::vector<VertexId> parent(g.vertex_count());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](VertexId x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  };
  auto unite = [&](VertexId a, VertexId b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  };

  for (std::size_t i = 0; i < order.size(); ++i) {
    for (std::size_t j = i + 1; j < order.size(); ++j) {
      const VertexId u = order[i], v = order[j];
      // Already inside one module that contains both, hence their closure.
      if (find(u) == find(v)) continue;
      const VertexSet m = smallest_module_within(g, within, VertexSet(g.vertex_count(), {u, v}));
      if (m == within) continue;
      const VertexId anchor = m.first();
      m.for_each([&](VertexId w) { unite(anchor, w); });
    }
  }

  std::vector<VertexSet> parts;
  std::vector<int> slot(g.vertex_count(), -1);
  within.for_each([&](VertexId v) {
    const VertexId root = find(v);
    if (slot[static_cast<std::size_t>(root)] < 0) {
      slot[static_cast<std::size_t>(root)] = static_cast<int>(parts.size());
      parts.push_back(g.empty_set());
    }
    parts[static_cast<std::size_t>(slot[static_cast<std::size_t>(root)])].insert(v);
  });
  for (const VertexSet& p : parts)
    if (p == within) throw InvariantViolation("overlap closure of proper modules reached the whole set");
  std::sort(parts.begin(), parts.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
  return parts;
}

DecompositionNode build(const Graph& g, const VertexSet& within, const DecompositionOptions& options) {
  DecompositionNode node;
  node.vertices = within;
  if (within.size() == 1) return node;

  VertexSet reps = g.empty_set();
  for (const VertexSet& part : strong_partition_within(g, within, options)) {
    node.children.push_back(build(g, part, options));
    node.representatives.push_back(part.first());
    reps.insert(part.first());
  }
  node.quotient = induced_subgraph(g, reps);

  const std::size_t k = node.children.size();
  const std::size_t m = node.quotient.edge_count();
  if (m == 0) {
    node.kind = NodeKind::kParallel;
  } else if (m == k * (k - 1) / 2) {
    node.kind = NodeKind::kSeries;
  } else {
    node.kind = NodeKind::kPrime;
    if (k < 4) throw InvariantViolation("prime node with fewer than four children");
  }
  return node;
}

bool find_node(const DecompositionNode& node, const VertexSet& x) {
  if (node.vertices == x) return true;
  if (!x.is_subset_of(node.vertices)) return false;
  for (const DecompositionNode& child : node.children)
    if (x.intersects(child.vertices)) return find_node(child, x);
  return false;
}

void collect(const DecompositionNode& node, std::vector<int>& path, std::vector<TreeVisit>& out) {
  out.push_back({&node, path});
  for (std::size_t i = 0; i < node.children.size(); ++i) {
    path.push_back(static_cast<int>(i));
    collect(node.children[i], path, out);
    path.pop_back();
  }
}

void require_universe(const Graph& g, const VertexSet& x) {
  if (x.universe() != g.vertex_count()) throw DomainError("vertex set is not a subset of the graph's vertices");
}

}  // namespace

std::string_view to_string(NodeKind kind) {
  switch (kind) {
    case NodeKind::kLeaf: return "leaf";
    case NodeKind::kParallel: return "parallel";
    case NodeKind::kSeries: return "series";
    case NodeKind::kPrime: return "prime";
  }
  return "unknown";
}

bool is_module(const Graph& g, const VertexSet& x) {
  require_universe(g, x);
  return is_module_within(g, g.all_vertices(), x);
}

VertexSet smallest_module(const Graph& g, const VertexSet& seed) {
  require_universe(g, seed);
  if (seed.empty()) throw DomainError("smallest_module needs a non-empty seed");
  return smallest_module_within(g, g.all_vertices(), seed);
}

bool is_strong_module(const Graph& g, const VertexSet& x) {
  require_universe(g, x);
  if (x.empty() || !is_module(g, x)) return false;
  if (x.size() == 1 || x.size() == g.vertex_count()) return true;
  return find_node(decomposition_tree(g), x);
}

bool is_strong_module(const DecompositionNode& tree, const Graph& g, const VertexSet& x) {
  require_universe(g, x);
  if (x.empty()) return false;
  return find_node(tree, x);
}

std::vector<VertexSet> maximal_strong_partition(const Graph& g, const DecompositionOptions& options) {
  return strong_partition_within(g, g.all_vertices(), options);
}

DecompositionNode decomposition_tree(const Graph& g, const DecompositionOptions& options) {
  if (g.vertex_count() == 0) throw DomainError("decomposition of a graph without vertices");
  return build(g, g.all_vertices(), options);
}

Graph quotient(const Graph& g, const std::vector<VertexSet>& partition) {
  VertexSet covered = g.empty_set();
  VertexSet reps = g.empty_set();
  for (const VertexSet& part : partition) {
    require_universe(g, part);
    if (part.empty()) throw DomainError("partition has an empty part");
    if (part.intersects(covered)) throw DomainError("partition parts intersect");
    if (!is_module(g, part)) throw DomainError("partition part is not a module");
    covered |= part;
    reps.insert(part.first());
  }
  if (covered != g.all_vertices()) throw DomainError("partition does not cover the vertex set");
  return induced_subgraph(g, reps);
}

const DecompositionNode& node_at(const DecompositionNode& root, const std::vector<int>& path) {
  const DecompositionNode* node = &root;
  for (int i : path) {
    if (i < 0 || static_cast<std::size_t>(i) >= node->children.size()) throw DomainError("invalid node path");
    node = &node->children[static_cast<std::size_t>(i)];
  }
  return *node;
}

std::vector<TreeVisit> preorder(const DecompositionNode& root) {
  std::vector<TreeVisit> out;
  std::vector<int> path;
  collect(root, path, out);
  return out;
}

}  // namespace transor
