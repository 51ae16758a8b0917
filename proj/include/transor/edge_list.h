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

#ifndef TRANSOR_EDGE_LIST_H_
#define TRANSOR_EDGE_LIST_H_

#include <cstddef>
#include <string_view>

#include "transor/graph.h"

namespace transor {

struct ParsedGraph {
  Graph graph;
  std::size_t duplicate_edges = 0;
};

// Parses either of two text formats.
//
// Edge list: one "u v" pair per line, "vertex u" declares an isolated
// vertex, '#' starts a comment, blank lines are ignored.
//
// DIMACS: selected when the first line that is not blank or a "c" line is
// "p edge N M". Vertices are 1..N, edges are "e u v", lines starting with "c" are comments.
//
// Throws ParseError naming the offending line.
ParsedGraph parse_edge_list(std::string_view text);

}  // namespace transor

#endif  // TRANSOR_EDGE_LIST_H_
