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

#ifndef TRANSOR_FORCING_H_
#define TRANSOR_FORCING_H_

#include <cstddef>
#include <string>
#include <vector>

#include "transor/graph.h"

namespace transor {

// One implication class A together with A^-1, the undirected color and its
// span. When A is self-inverse, class_a == class_a_inv.
struct ColorClass {
  int id = 0;
  std::vector<DirectedEdge> class_a;      // sorted by (tail, head)
  std::vector<DirectedEdge> class_a_inv;  // sorted by (tail, head)
  std::vector<int> undirected;            // edge ids, ascending
  VertexSet span;
  bool self_inverse = false;
};

// Partition of E into colors. Colors are numbered by their smallest directed
// edge; A is always the implication class holding that edge.
class ColorMap {
 public:
  ColorMap() = default;
  ColorMap(std::vector<ColorClass> colors, std::vector<int> edge_to_color,
           std::vector<char> in_class_a);

  const std::vector<ColorClass>& colors() const { return colors_; }
  std::size_t size() const { return colors_.size(); }
  const ColorClass& operator[](std::size_t id) const { return colors_[id]; }

  int color_of(int edge_id) const { return edge_to_color_[static_cast<std::size_t>(edge_id)]; }
  int color_of(const Graph& g, VertexId a, VertexId b) const { return color_of(g.edge_id(a, b)); }
  // Whether the directed edge belongs to the A side of its color. Both
  // directions answer true for a self-inverse color.
  bool in_class_a(const Graph& g, DirectedEdge e) const;

 private:
  std::vector<ColorClass> colors_;
  std::vector<int> edge_to_color_;
  // Indexed by 2 * edge id + (0 for (u,v) with u < v, 1 for (v,u)).
  std::vector<char> in_class_a_;
};

// Direct forcing: (a,b) forces (a',b') iff a = a' and bb' is not an edge, or
// b = b' and aa' is not an edge. Throws DomainError if either edge is absent
// from g.
bool gamma_forces(DirectedEdge e1, DirectedEdge e2, const Graph& g);

// Implication classes as classes of the reflexive-transitive closure of
// direct forcing, paired into colors.
ColorMap color_classes(const Graph& g);

// True iff no implication class is self-inverse. A positive answer is
// cross-checked by building one orientation and testing it for
// transitivity; disagreement throws InvariantViolation.
bool is_comparability(const Graph& g);
bool is_comparability(const Graph& g, const ColorMap& colors);

struct TriangleViolation {
  DirectedEdge ab;  // in C
  DirectedEdge ac;  // in B
  DirectedEdge bc;  // in A
  std::string what;
};

// Checks the three conclusions of the triangle lemma on every oriented
// triangle whose classes satisfy A != B and A != C^-1. Returns the
// violations found; an empty list is expected.
std::vector<TriangleViolation> check_triangle_lemma(const Graph& g);
std::vector<TriangleViolation> check_triangle_lemma(const Graph& g, const ColorMap& colors);

}  // namespace transor

#endif  // TRANSOR_FORCING_H_
