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

#include "transor/serialize.h"

#include <algorithm>
#include <sstream>

#include "transor/errors.h"

namespace transor {
namespace {

Json names(const Graph& g, const VertexSet& s) {
  Json out = Json::array();
  s.for_each([&](VertexId v) { out.push_back(g.name(v)); });
  return out;
}

Json pair(const Graph& g, VertexId a, VertexId b) { return Json::array({g.name(a), g.name(b)}); }

Json arcs(const Graph& g, const std::vector<DirectedEdge>& arcs) {
  Json out = Json::array();
  for (DirectedEdge d : arcs) out.push_back(pair(g, d.tail, d.head));
  return out;
}

std::string brace_list(const Graph& g, const VertexSet& s) {
  std::string out = "{";
  bool first = true;
  s.for_each([&](VertexId v) {
    if (!first) out += ",";
    out += g.name(v);
    first = false;
  });
  return out + "}";
}

std::string escape_dot(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

}  // namespace

Json tree_to_json(const Graph& g, const DecompositionNode& node) {
  Json out;
  out["vertices"] = names(g, node.vertices);
  out["kind"] = std::string(to_string(node.kind));
  Json children = Json::array();
  for (const DecompositionNode& child : node.children) children.push_back(tree_to_json(g, child));
  out["children"] = std::move(children);
  return out;
}

Json multiplex_to_json(const Graph& g, const Multiplex& m) {
  Json out;
  out["node_path"] = m.node_path;
  out["rank"] = m.rank;
  out["colors"] = m.colors;
  Json edges = Json::array();
  for (int e : m.edges) {
    const Edge edge = g.edges()[static_cast<std::size_t>(e)];
    edges.push_back(pair(g, edge.u, edge.v));
  }
  out["edges"] = std::move(edges);
  return out;
}

Json orientation_to_json(const Graph& g, const Orientation& o) { return arcs(g, o.sorted_arcs()); }

Json colors_to_json(const Graph& g, const ColorMap& colors) {
  Json out = Json::array();
  for (const ColorClass& c : colors.colors()) {
    Json j;
    j["id"] = c.id;
    j["span"] = names(g, c.span);
    Json edges = Json::array();
    for (int e : c.undirected) {
      const Edge edge = g.edges()[static_cast<std::size_t>(e)];
      edges.push_back(pair(g, edge.u, edge.v));
    }
    j["edges"] = std::move(edges);
    j["class_a"] = arcs(g, c.class_a);
    j["self_inverse"] = c.self_inverse;
    out.push_back(std::move(j));
  }
  return out;
}

std::string tree_to_dot(const Graph& g, const DecompositionNode& tree) {
  std::ostringstream out;
  out << "digraph decomposition {\n  node [shape=box];\n";
  const auto nodes = preorder(tree);
  std::vector<std::string> ids;
  for (std::size_t i = 0; i < nodes.size(); ++i) {
    const DecompositionNode& node = *nodes[i].node;
    std::string label = std::string(to_string(node.kind)) + " " + escape_dot(brace_list(g, node.vertices));
    if (node.kind == NodeKind::kSeries) label += "\\nrank " + std::to_string(node.children.size() - 1);
    if (node.kind == NodeKind::kPrime) label += "\\nrank 1";
    out << "  n" << i << " [label=\"" << label << "\"];\n";
  }
  // Pre-order: a node's parent is the nearest earlier node whose path is a
  // prefix of its own.
  for (std::size_t i = 1; i < nodes.size(); ++i) {
    const auto& path = nodes[i].path;
    for (std::size_t j = i; j-- > 0;) {
      const auto& parent = nodes[j].path;
      if (parent.size() + 1 == path.size() && std::equal(parent.begin(), parent.end(), path.begin())) {
        out << "  n" << j << " -> n" << i << ";\n";
        break;
      }
    }
  }
  out << "}\n";
  return out.str();
}

Orientation parse_orientation(const Graph& g, std::string_view text) {
  std::vector<std::pair<std::string, std::string>> pairs;
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string_view::npos && text[start] == '[') {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::exception& e) {
      throw ParseError(0, std::string("malformed orientation JSON: ") + e.what());
    }
    if (!j.is_array()) throw ParseError(0, "orientation JSON must be a list of pairs");
    for (const auto& item : j) {
      if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
        throw ParseError(0, "orientation JSON must be a list of [\"tail\",\"head\"] pairs");
      pairs.emplace_back(item[0].get<std::string>(), item[1].get<std::string>());
    }
  } else {
    // Same line syntax as an edge list, read as tail -> head.
    std::istringstream in{std::string(text)};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
      ++line_no;
      if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
      std::istringstream tokens(line);
      std::vector<std::string> parts;
      for (std::string t; tokens >> t;) parts.push_back(t);
      if (parts.empty()) continue;
      if (parts.size() != 2) throw ParseError(line_no, "malformed line at line " + std::to_string(line_no));
      pairs.emplace_back(parts[0], parts[1]);
    }
  }

  Orientation o;
  o.arcs.assign(g.edge_count(), DirectedEdge{-1, -1});
  for (const auto& [tail_name, head_name] : pairs) {
    const VertexId tail = g.index_of(tail_name);
    const VertexId head = g.index_of(head_name);
    const int id = tail == head ? -1 : g.edge_id(tail, head);
    if (id < 0) throw DomainError("(" + tail_name + "," + head_name + ") is not an edge of the graph");
    if (o.arcs[static_cast<std::size_t>(id)].tail >= 0) throw DomainError("edge " + tail_name + head_name + " oriented twice");
    o.arcs[static_cast<std::size_t>(id)] = {tail, head};
  }
  for (std::size_t i = 0; i < o.arcs.size(); ++i) {
    if (o.arcs[i].tail < 0) {
      const Edge e = g.edges()[i];
      throw DomainError("edge " + g.name(e.u) + " " + g.name(e.v) + " is not oriented");
    }
  }
  return o;
}

std::string format_edge_list(const Graph& g) {
  std::ostringstream out;
  for (std::size_t v = 0; v < g.vertex_count(); ++v)
    if (g.neighbors(static_cast<VertexId>(v)).empty()) out << "vertex " << g.name(static_cast<VertexId>(v)) << "\n";
  for (const Edge& e : g.edges()) out << g.name(e.u) << " " << g.name(e.v) << "\n";
  return out.str();
}

}  // namespace transor
