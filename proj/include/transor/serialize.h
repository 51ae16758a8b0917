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

#ifndef TRANSOR_SERIALIZE_H_
#define TRANSOR_SERIALIZE_H_

#include <string>
#include <string_view>
#include <vector>

#include "json.hpp"
#include "transor/decomposition.h"
#include "transor/forcing.h"
#include "transor/graph.h"
#include "transor/multiplex.h"
#include "transor/orientation.h"

namespace transor {

using Json = nlohmann::ordered_json;

// {"vertices":[...], "kind":"parallel|series|prime|leaf", "children":[...]}
Json tree_to_json(const Graph& g, const DecompositionNode& node);

// {"node_path":[...], "rank":r, "colors":[...], "edges":[["u","v"],...]}
Json multiplex_to_json(const Graph& g, const Multiplex& m);

// [["tail","head"],...] sorted by (tail, head).
Json orientation_to_json(const Graph& g, const Orientation& o);

Json colors_to_json(const Graph& g, const ColorMap& colors);

// Decomposition tree as a Graphviz digraph; series and prime nodes carry
// the rank of their multiplex.
std::string tree_to_dot(const Graph& g, const DecompositionNode& tree);

// Reads an orientation of g, either as the JSON pair list produced by
// orientation_to_json or as "tail head" lines. Throws ParseError on bad
// syntax and DomainError if it does not orient exactly the edges of g.
Orientation parse_orientation(const Graph& g, std::string_view text);

// Edge-list text that parse_edge_list reads back to the same graph.
std::string format_edge_list(const Graph& g);

}  // namespace transor

#endif  // TRANSOR_SERIALIZE_H_
