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

#include "transor/orientation.h"

#include <algorithm>
#include <cstdint>
#include <numeric>

#include "transor/errors.h"
#include "transor/forcing.h"

namespace transor {

std::vector<DirectedEdge> Orientation::sorted_arcs() const {
  std::vector<DirectedEdge> out = arcs;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<const DecompositionNode*> choice_nodes(const DecompositionNode& tree) {
  std::vector<const DecompositionNode*> out;
  for (const TreeVisit& visit : preorder(tree))
    if (visit.node->kind == NodeKind::kSeries || visit.node->kind == NodeKind::kPrime) out.push_back(visit.node);
  return out;
}

std::vector<NodeChoice> first_choices(const DecompositionNode& tree) {
  std::vector<NodeChoice> out;
  for (const DecompositionNode* node : choice_nodes(tree)) {
    NodeChoice c;
    if (node->kind == NodeKind::kSeries) {
      c.order.resize(node->children.size());
      std::iota(c.order.begin(), c.order.end(), 0);
    }
    out.push_back(std::move(c));
  }
  return out;
}

LiftPlan::LiftPlan(const Graph& g, const DecompositionNode& tree) : edges_(g.edges()) {
  std::vector<int> child_of(g.vertex_count(), -1);
  for (const DecompositionNode* node : choice_nodes(tree)) {
    Node plan;
    plan.prime = node->kind == NodeKind::kPrime;
    plan.child_count = node->children.size();
    for (std::size_t i = 0; i < node->children.size(); ++i)
      node->children[i].vertices.for_each([&](VertexId v) { child_of[static_cast<std::size_t>(v)] = static_cast<int>(i); });

    // Quotient vertex i stands for child i.
    ColorMap quotient_colors;
    if (plan.prime) {
      quotient_colors = color_classes(node->quotient);
      if (quotient_colors.size() != 1)
        throw InvariantViolation("prime quotient does not form a single color");
      plan.orientable = !quotient_colors[0].self_inverse;
    }

    for (std::size_t e = 0; e < edges_.size(); ++e) {
      const Edge edge = edges_[e];
      if (!node->vertices.contains(edge.u) || !node->vertices.contains(edge.v)) continue;
      const int cu = child_of[static_cast<std::size_t>(edge.u)];
      const int cv = child_of[static_cast<std::size_t>(edge.v)];
      if (cu == cv) continue;
      Crossing c{static_cast<int>(e), cu, cv, false};
      if (plan.prime) c.a_forward = quotient_colors.in_class_a(node->quotient, {cu, cv});
      plan.crossings.push_back(c);
    }
    nodes_.push_back(std::move(plan));
  }
}

Orientation LiftPlan::materialize(std::span<const NodeChoice> choices) const {
  if (choices.size() != nodes_.size())
    throw DomainError("expected " + std::to_string(nodes_.size()) + " node choices, got " +
                      std::to_string(choices.size()));
  Orientation o;
  o.arcs.resize(edges_.size());
  std::vector<char> assigned(edges_.size(), 0);
  std::vector<int> position;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const Node& node = nodes_[i];
    const NodeChoice& choice = choices[i];
    if (node.prime) {
      if (!choice.order.empty()) throw DomainError("prime node choice carries a permutation");
      if (!node.orientable) throw DomainError("prime node has a self-inverse class");
    } else {
      std::vector<int> sorted = choice.order;
      std::sort(sorted.begin(), sorted.end());
      std::vector<int> expected(node.child_count);
      std::iota(expected.begin(), expected.end(), 0);
      if (sorted != expected) throw DomainError("series node choice is not a permutation of its children");
      position.assign(node.child_count, 0);
      for (std::size_t p = 0; p < choice.order.size(); ++p) position[static_cast<std::size_t>(choice.order[p])] = static_cast<int>(p);
    }
    for (const Crossing& c : node.crossings) {
      const bool forward = node.prime ? (c.a_forward != choice.inverse)
                                      : position[static_cast<std::size_t>(c.child_u)] < position[static_cast<std::size_t>(c.child_v)];
      const Edge e = edges_[static_cast<std::size_t>(c.edge)];
      o.arcs[static_cast<std::size_t>(c.edge)] = forward ? DirectedEdge{e.u, e.v} : DirectedEdge{e.v, e.u};
      assigned[static_cast<std::size_t>(c.edge)] = 1;
    }
  }
  if (std::find(assigned.begin(), assigned.end(), 0) != assigned.end())
    throw InvariantViolation("an edge crosses no decomposition node");
  return o;
}

Orientation materialize(const Graph& g, const DecompositionNode& tree, std::span<const NodeChoice> choices) {
  return LiftPlan(g, tree).materialize(choices);
}

BigCount count_orientations(const Graph& g) {
  if (g.vertex_count() == 0) return 1;
  if (!is_comparability(g)) return 0;
  const DecompositionNode tree = decomposition_tree(g);
  BigCount total = 1;
  for (const DecompositionNode* node : choice_nodes(tree)) {
    if (node->kind == NodeKind::kPrime) {
      total *= 2;
    } else {
      for (std::size_t k = 2; k <= node->children.size(); ++k) total *= k;
    }
  }
  return total;
}

OrientationStream::OrientationStream(const Graph& g, std::optional<std::uint64_t> limit) : limit_(limit) {
  if (g.vertex_count() == 0) {
    plan_.emplace(g, DecompositionNode{});
    return;
  }
  if (!is_comparability(g)) {
    done_ = true;
    return;
  }
  const DecompositionNode tree = decomposition_tree(g);
  plan_.emplace(g, tree);
  choices_ = first_choices(tree);
}

std::optional<Orientation> OrientationStream::next() {
  if (done_ || (limit_ && emitted_ >= *limit_)) return std::nullopt;
  Orientation o = plan_->materialize(choices_);
  ++emitted_;
  done_ = !advance();
  return o;
}

bool OrientationStream::advance() {
  for (std::size_t i = choices_.size(); i-- > 0;) {
    NodeChoice& c = choices_[i];
    if (plan_->is_prime(i)) {
      if (!c.inverse) {
        c.inverse = true;
        return true;
      }
      c.inverse = false;
    } else if (std::next_permutation(c.order.begin(), c.order.end())) {
      return true;
    }
    // Wrapped around; carry into the previous node.
  }
  return false;
}

OrientationStream enumerate_orientations(const Graph& g, std::optional<std::uint64_t> limit) {
  return OrientationStream(g, limit);
}

namespace {

void require_orients(const Graph& g, const Orientation& o) {
  if (o.arcs.size() != g.edge_count()) throw DomainError("orientation does not cover the edges of the graph");
  for (std::size_t i = 0; i < o.arcs.size(); ++i) {
    const Edge e = g.edges()[i];
    const DirectedEdge a = o.arcs[i];
    if (!((a.tail == e.u && a.head == e.v) || (a.tail == e.v && a.head == e.u)))
      throw DomainError("orientation arc does not match its edge");
  }
}

}  // namespace

bool is_transitive(const Graph& g, const Orientation& o) {
  require_orients(g, o);
  std::vector<VertexSet> out(g.vertex_count(), g.empty_set());
  for (DirectedEdge a : o.arcs) out[static_cast<std::size_t>(a.tail)].insert(a.head);
  for (DirectedEdge a : o.arcs)
    if (!out[static_cast<std::size_t>(a.head)].is_subset_of(out[static_cast<std::size_t>(a.tail)])) return false;
  return true;
}

namespace {

constexpr std::size_t kMaxOrderVertices = 10;

std::vector<std::uint32_t> directed_module_masks(const Graph& g, const Orientation& o) {
  const std::size_t n = g.vertex_count();
  if (n > kMaxOrderVertices)
    throw OracleScaleError("directed module enumeration is limited to " + std::to_string(kMaxOrderVertices) + " vertices");
  require_orients(g, o);
  std::vector<std::uint32_t> out(n, 0), in(n, 0);
  for (DirectedEdge a : o.arcs) {
    out[static_cast<std::size_t>(a.tail)] |= std::uint32_t{1} << a.head;
    in[static_cast<std::size_t>(a.head)] |= std::uint32_t{1} << a.tail;
  }
  std::vector<std::uint32_t> modules;
  const std::uint32_t all = (std::uint32_t{1} << n) - 1;
  for (std::uint32_t x = 1; x <= all; ++x) {
    bool ok = true;
    for (std::size_t c = 0; c < n && ok; ++c) {
      if (x >> c & 1U) continue;
      const std::uint32_t to = out[c] & x, from = in[c] & x;
      ok = (to == 0 || to == x) && (from == 0 || from == x);
    }
    if (ok) modules.push_back(x);
  }
  return modules;
}

VertexSet to_set(std::size_t n, std::uint32_t mask) {
  VertexSet s(n);
  for (std::size_t v = 0; v < n; ++v)
    if (mask >> v & 1U) s.insert(static_cast<VertexId>(v));
  return s;
}

std::vector<VertexSet> sorted_sets(std::size_t n, const std::vector<std::uint32_t>& masks) {
  std::vector<VertexSet> out;
  for (std::uint32_t m : masks) out.push_back(to_set(n, m));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<VertexSet> directed_modules(const Graph& g, const Orientation& o) {
  return sorted_sets(g.vertex_count(), directed_module_masks(g, o));
}

std::vector<VertexSet> strong_modules_of_order(const Graph& g, const Orientation& o) {
  if (!is_transitive(g, o)) throw DomainError("orientation is not transitive");
  const auto modules = directed_module_masks(g, o);
  std::vector<std::uint32_t> strong;
  for (std::uint32_t x : modules) {
    bool overlapped = false;
    for (std::uint32_t y : modules) {
      if ((x & y) != 0 && (x & ~y) != 0 && (y & ~x) != 0) {
        overlapped = true;
        break;
      }
    }
    if (!overlapped) strong.push_back(x);
  }
  return sorted_sets(g.vertex_count(), strong);
}

}  // namespace transor
