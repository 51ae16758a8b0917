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

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "transor/decomposition.h"
#include "transor/errors.h"
#include "transor/orientation.h"

namespace transor {
namespace {

class UnionFind {
 public:
  explicit UnionFind(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

// 2 * id for the (u,v) direction with u < v, 2 * id + 1 for (v,u).
std::size_t directed_index(const Graph& g, DirectedEdge e) {
  const int id = g.edge_id(e.tail, e.head);
  return 2 * static_cast<std::size_t>(id) + (e.tail < e.head ? 0 : 1);
}

DirectedEdge directed_from_index(const Graph& g, std::size_t index) {
  const Edge e = g.edges()[index / 2];
  return index % 2 == 0 ? DirectedEdge{e.u, e.v} : DirectedEdge{e.v, e.u};
}

void require_edge(const Graph& g, DirectedEdge e) {
  auto in_range = [&](VertexId v) { return v >= 0 && static_cast<std::size_t>(v) < g.vertex_count(); };
  if (!in_range(e.tail) || !in_range(e.head) || e.tail == e.head || !g.adjacent(e.tail, e.head))
    throw DomainError("directed edge is not an edge of the graph");
}

}  // namespace

ColorMap::ColorMap(std::vector<ColorClass> colors, std::vector<int> edge_to_color,
                   std::vector<char> in_class_a)
    : colors_(std::move(colors)),
      edge_to_color_(std::move(edge_to_color)),
      in_class_a_(std::move(in_class_a)) {}

bool ColorMap::in_class_a(const Graph& g, DirectedEdge e) const {
  return in_class_a_[directed_index(g, e)] != 0;
}

bool gamma_forces(DirectedEdge e1, DirectedEdge e2, const Graph& g) {
  require_edge(g, e1);
  require_edge(g, e2);
  if (e1.tail == e2.tail) return e1.head == e2.head || !g.adjacent(e1.head, e2.head);
  if (e1.head == e2.head) return !g.adjacent(e1.tail, e2.tail);
  return false;
}

ColorMap color_classes(const Graph& g) {
  const std::size_t m = g.edge_count();
  UnionFind classes(2 * m);

  const auto n = static_cast<VertexId>(g.vertex_count());
  std::vector<VertexId> nbrs;
  for (VertexId x = 0; x < n; ++x) {
    nbrs = g.neighbors(x).members();
    for (std::size_t i = 0; i < nbrs.size(); ++i) {
      for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
        const VertexId y = nbrs[i], z = nbrs[j];
        if (g.adjacent(y, z)) continue;
        classes.unite(directed_index(g, {x, y}), directed_index(g, {x, z}));
        classes.unite(directed_index(g, {y, x}), directed_index(g, {z, x}));
      }
    }
  }

  // Classes come in reverse pairs, so the smaller of the two roots of an
  // edge identifies its color.
  std::map<std::size_t, std::vector<int>> by_color;
  for (std::size_t e = 0; e < m; ++e) {
    const std::size_t key = std::min(classes.find(2 * e), classes.find(2 * e + 1));
    by_color[key].push_back(static_cast<int>(e));
  }

  std::vector<ColorClass> colors;
  colors.reserve(by_color.size());
  for (auto& [key, edge_ids] : by_color) {
    ColorClass c;
    c.undirected = std::move(edge_ids);
    std::vector<std::size_t> directed;
    for (int e : c.undirected) {
      directed.push_back(2 * static_cast<std::size_t>(e));
      directed.push_back(2 * static_cast<std::size_t>(e) + 1);
    }
    const std::size_t smallest = *std::min_element(
        directed.begin(), directed.end(), [&](std::size_t a, std::size_t b) {
          return directed_from_index(g, a) < directed_from_index(g, b);
        });
    const std::size_t a_root = classes.find(smallest);
    std::size_t self_inverse_edges = 0;
    for (int e : c.undirected)
      if (classes.find(2 * static_cast<std::size_t>(e)) == classes.find(2 * static_cast<std::size_t>(e) + 1))
        ++self_inverse_edges;
    if (self_inverse_edges != 0 && self_inverse_edges != c.undirected.size())
      throw InvariantViolation("implication class is neither self-inverse nor disjoint from its inverse");
    c.self_inverse = self_inverse_edges != 0;

    for (std::size_t d : directed) {
      const DirectedEdge de = directed_from_index(g, d);
      if (classes.find(d) == a_root) c.class_a.push_back(de);
      if (c.self_inverse || classes.find(d) != a_root) c.class_a_inv.push_back(de);
    }
    std::sort(c.class_a.begin(), c.class_a.end());
    std::sort(c.class_a_inv.begin(), c.class_a_inv.end());

    std::vector<DirectedEdge> reversed;
    for (DirectedEdge d : c.class_a) reversed.push_back(d.reversed());
    std::sort(reversed.begin(), reversed.end());
    if (reversed != c.class_a_inv) throw InvariantViolation("A^-1 is not the reverse of A");

    std::vector<Edge> undirected;
    for (int e : c.undirected) undirected.push_back(g.edges()[static_cast<std::size_t>(e)]);
    c.span = spanned_vertices(g, undirected);
    colors.push_back(std::move(c));
  }

  std::sort(colors.begin(), colors.end(), [](const ColorClass& a, const ColorClass& b) {
    return a.class_a.front() < b.class_a.front();
  });

  std::vector<int> edge_to_color(m, -1);
  std::vector<char> in_a(2 * m, 0);
  for (std::size_t id = 0; id < colors.size(); ++id) {
    colors[id].id = static_cast<int>(id);
    for (int e : colors[id].undirected) edge_to_color[static_cast<std::size_t>(e)] = static_cast<int>(id);
    for (DirectedEdge d : colors[id].class_a) in_a[directed_index(g, d)] = 1;
  }
  return ColorMap(std::move(colors), std::move(edge_to_color), std::move(in_a));
}

bool is_comparability(const Graph& g) { return is_comparability(g, color_classes(g)); }

bool is_comparability(const Graph& g, const ColorMap& colors) {
  for (const ColorClass& c : colors.colors())
    if (c.self_inverse) return false;
  if (g.vertex_count() == 0) return true;

  const DecompositionNode tree = decomposition_tree(g);
  const Orientation first = materialize(g, tree, first_choices(tree));
  if (!is_transitive(g, first))
    throw InvariantViolation("no self-inverse class, yet the constructed orientation is not transitive");
  return true;
}

namespace {

// An implication class: a color plus a side. Self-inverse colors have a
// single side.
struct ClassRef {
  int color = -1;
  bool side_a = true;
  friend bool operator==(const ClassRef&, const ClassRef&) = default;
};

class ClassLookup {
 public:
  ClassLookup(const Graph& g, const ColorMap& colors) : g_(g), colors_(colors) {}

  ClassRef of(DirectedEdge d) const {
    const int color = colors_.color_of(g_, d.tail, d.head);
    if (colors_[static_cast<std::size_t>(color)].self_inverse) return {color, true};
    return {color, colors_.in_class_a(g_, d)};
  }
  ClassRef inverse(ClassRef r) const {
    if (colors_[static_cast<std::size_t>(r.color)].self_inverse) return r;
    return {r.color, !r.side_a};
  }
  bool contains(ClassRef r, VertexId tail, VertexId head) const {
    return tail != head && g_.adjacent(tail, head) && of({tail, head}) == r;
  }
  const std::vector<DirectedEdge>& members(ClassRef r) const {
    const ColorClass& c = colors_[static_cast<std::size_t>(r.color)];
    return r.side_a ? c.class_a : c.class_a_inv;
  }

 private:
  const Graph& g_;
  const ColorMap& colors_;
};

std::string describe(const Graph& g, DirectedEdge d) {
  return "(" + g.name(d.tail) + "," + g.name(d.head) + ")";
}

}  // namespace

std::vector<TriangleViolation> check_triangle_lemma(const Graph& g) {
  return check_triangle_lemma(g, color_classes(g));
}

std::vector<TriangleViolation> check_triangle_lemma(const Graph& g, const ColorMap& colors) {
  std::vector<TriangleViolation> out;
  const ClassLookup lookup(g, colors);
  const auto n = static_cast<VertexId>(g.vertex_count());

  for (VertexId a = 0; a < n; ++a) {
    g.neighbors(a).for_each([&](VertexId b) {
      (g.neighbors(a) & g.neighbors(b)).for_each([&](VertexId c) {
        const ClassRef class_c = lookup.of({a, b});
        const ClassRef class_b = lookup.of({a, c});
        const ClassRef class_a = lookup.of({b, c});
        if (class_a == class_b || class_a == lookup.inverse(class_c)) return;

        auto report = [&](std::string what) {
          out.push_back({{a, b}, {a, c}, {b, c}, std::move(what)});
        };
        for (DirectedEdge bc : lookup.members(class_a)) {
          const VertexId b2 = bc.tail, c2 = bc.head;
          if (!lookup.contains(class_c, a, b2) || !lookup.contains(class_b, a, c2))
            report("(i) fails for " + describe(g, bc));
          g.neighbors(b2).for_each([&](VertexId a2) {
            if (lookup.contains(class_c, a2, b2) && !lookup.contains(class_b, a2, c2))
              report("(ii) fails for " + describe(g, bc) + " and " + describe(g, {a2, b2}));
          });
        }
        if (colors[static_cast<std::size_t>(class_a.color)].span.contains(a))
          report("(iii) fails: " + g.name(a) + " lies in the span of A");
      });
    });
  }
  return out;
}

}  // namespace transor
