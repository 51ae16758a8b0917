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

#include "transor/edge_list.h"

#include <charconv>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "transor/errors.h"

namespace transor {
namespace {

std::vector<std::string_view> tokenize(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    lines.push_back(text.substr(start, end - start));
    start = end + 1;
  }
  return lines;
}

std::string at_line(std::size_t line) { return " at line " + std::to_string(line); }

class Collector {
 public:
  void vertex(std::string_view v) { vertices_.emplace_back(v); }

  void edge(std::string_view a, std::string_view b, std::size_t line) {
    if (a == b) throw ParseError(line, "self-loop" + at_line(line));
    std::string x(a), y(b);
    if (vertex_less(y, x)) std::swap(x, y);
    if (!seen_.emplace(x, y).second) {
      ++duplicates_;
      return;
    }
    edges_.emplace_back(std::move(x), std::move(y));
  }

  ParsedGraph finish() {
    return {Graph(std::move(vertices_), edges_), duplicates_};
  }

 private:
  std::vector<std::string> vertices_;
  std::vector<std::pair<std::string, std::string>> edges_;
  std::set<std::pair<std::string, std::string>> seen_;
  std::size_t duplicates_ = 0;
};

std::size_t parse_count(std::string_view token, std::size_t line) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size())
    throw ParseError(line, "malformed line" + at_line(line) + ": expected a number, got '" + std::string(token) + "'");
  return value;
}

ParsedGraph parse_dimacs(const std::vector<std::string_view>& lines) {
  Collector out;
  std::size_t vertex_count = 0;
  bool have_header = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    auto tokens = tokenize(lines[i]);
    if (tokens.empty() || tokens[0] == "c" || tokens[0].front() == '#') continue;
    if (tokens[0] == "p") {
      if (have_header) throw ParseError(line_no, "duplicate header" + at_line(line_no));
      if (tokens.size() != 4 || tokens[1] != "edge")
        throw ParseError(line_no, "malformed line" + at_line(line_no));
      vertex_count = parse_count(tokens[2], line_no);
      parse_count(tokens[3], line_no);
      for (std::size_t v = 1; v <= vertex_count; ++v) out.vertex(std::to_string(v));
      have_header = true;
      continue;
    }
    if (tokens[0] == "e" && tokens.size() == 3) {
      const std::size_t a = parse_count(tokens[1], line_no);
      const std::size_t b = parse_count(tokens[2], line_no);
      if (a < 1 || b < 1 || a > vertex_count || b > vertex_count)
        throw ParseError(line_no, "vertex out of range" + at_line(line_no));
      out.edge(std::to_string(a), std::to_string(b), line_no);
      continue;
    }
    throw ParseError(line_no, "malformed line" + at_line(line_no));
  }
  return out.finish();
}

}  // namespace

ParsedGraph parse_edge_list(std::string_view text) {
  // DIMACS when the first line that is neither blank nor a "c" line is the
  // "p edge" header.
  const auto lines = split_lines(text);

  for (std::string_view line : lines) {
    auto hash = line.find('#');
    auto tokens = tokenize(line.substr(0, hash));
    if (tokens.empty()) continue;
    if (tokens[0] == "p" && tokens.size() >= 2 && tokens[1] == "edge") return parse_dimacs(lines);
    if (tokens[0] != "c") break;
  }

  Collector out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::size_t line_no = i + 1;
    std::string_view line = lines[i];
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    auto tokens = tokenize(line);
    if (tokens.empty()) continue;
    if (tokens.size() == 2 && tokens[0] == "vertex") {
      out.vertex(tokens[1]);
      continue;
    }
    if (tokens.size() != 2) throw ParseError(line_no, "malformed line" + at_line(line_no));
    out.edge(tokens[0], tokens[1], line_no);
  }
  return out.finish();
}

}  // namespace transor
