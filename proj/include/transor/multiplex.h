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

#ifndef TRANSOR_MULTIPLEX_H_
#define TRANSOR_MULTIPLEX_H_

#include <vector>

#include "transor/decomposition.h"
#include "transor/forcing.h"
#include "transor/graph.h"

namespace transor {

// Union of a set of colors. Multiplices produced by multiplex_partition
// also record the tree node they live at; others have an empty node_path
// and kind kLeaf.
struct Multiplex {
  std::vector<int> node_path;
  NodeKind kind = NodeKind::kLeaf;
  int rank = 1;
  std::vector<int> colors;  // ascending color ids
  std::vector<int> edges;   // ascending edge ids
  VertexSet span;
};

// Builds the multiplex made of the given colors. Its rank r is the one with
// r(r+1)/2 == colors.size(); throws DomainError when there is none.
Multiplex make_multiplex(const Graph& g, const ColorMap& colors, std::vector<int> color_ids);

// One multiplex per series or prime node: the edges joining different
// children of that node. Their edge sets partition E.
std::vector<Multiplex> multiplex_partition(const Graph& g, const DecompositionNode& tree);
std::vector<Multiplex> multiplex_partition(const Graph& g, const DecompositionNode& tree,
                                           const ColorMap& colors);

int rank(const Multiplex& m);

// Maximal iff its span is a strong module.
bool is_maximal_multiplex(const Graph& g, const Multiplex& m);

// Some b, c in the span and two distinct colors outside the multiplex with
// ab and ac in them. Throws DomainError if `a` lies in the span.
bool simplex_extension_exists(const Graph& g, const ColorMap& colors, const Multiplex& m, VertexId a);

}  // namespace transor

#endif  // TRANSOR_MULTIPLEX_H_
