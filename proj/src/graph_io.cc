// Copyright 2026 The Authors.
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

#include "sliders/graph_io.h"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <iterator>
#include <sstream>
#include <vector>

namespace sliders {
namespace {

std::string_view Trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Splits on spaces/tabs and parses exactly two nonnegative integers.
bool ParseTwoInts(std::string_view line, long long& a, long long& b) {
  long long vals[2];
  int count = 0;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    if (i == line.size()) break;
    if (count == 2) return false;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    auto [ptr, ec] = std::from_chars(line.data() + i, line.data() + j,
                                     vals[count]);
    if (ec != std::errc() || ptr != line.data() + j || vals[count] < 0) {
      return false;
    }
    ++count;
    i = j;
  }
  if (count != 2) return false;
  a = vals[0];
  b = vals[1];
  return true;
}

}  // namespace

TypedGraph ParseGraph(std::string_view text) {
  std::vector<std::pair<int, std::string_view>> lines;
  int line_no = 0;
  while (!text.empty()) {
    ++line_no;
    auto nl = text.find('\n');
    std::string_view raw = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{}
                                        : text.substr(nl + 1);
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    lines.emplace_back(line_no, line);
  }

  if (lines.empty()) throw ParseError(line_no + 1, "missing header \"n m\"");
  long long n = 0;
  long long m = 0;
  if (!ParseTwoInts(lines[0].second, n, m) || n > (1LL << 30) ||
      m > (1LL << 40)) {
    throw ParseError(lines[0].first, "malformed header, expected \"n m\"");
  }

  std::size_t next = 1;
  std::vector<VertexType> types(n);
  if (n > 0) {
    if (next >= lines.size()) {
      throw ParseError(line_no + 1, "missing vertex type line");
    }
    auto [ln, type_line] = lines[next++];
    if (static_cast<long long>(type_line.size()) != n) {
      throw ParseError(ln, "type string has length " +
                               std::to_string(type_line.size()) +
                               ", expected " + std::to_string(n));
    }
    for (long long i = 0; i < n; ++i) {
      if (type_line[i] == '1') {
        types[i] = VertexType::kSlider;
      } else if (type_line[i] == '2') {
        types[i] = VertexType::kFree;
      } else {
        throw ParseError(ln, "vertex type must be '1' or '2'");
      }
    }
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(m));
  std::vector<int> edge_lines;
  for (; next < lines.size(); ++next) {
    auto [ln, line] = lines[next];
    if (static_cast<long long>(edges.size()) == m) {
      throw ParseError(ln, "more than " + std::to_string(m) + " edge lines");
    }
    long long u = 0;
    long long v = 0;
    if (!ParseTwoInts(line, u, v)) {
      throw ParseError(ln, "malformed edge line, expected \"u v\"");
    }
    if (u >= n || v >= n) {
      throw ParseError(ln, "vertex id out of range");
    }
    if (u == v) throw ParseError(ln, "loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges.push_back({static_cast<VertexId>(u), static_cast<VertexId>(v)});
    edge_lines.push_back(ln);
  }
  if (static_cast<long long>(edges.size()) != m) {
    throw ParseError(line_no + 1, "expected " + std::to_string(m) +
                                      " edge lines, found " +
                                      std::to_string(edges.size()));
  }

  // Duplicate detection with the line number of the second occurrence.
  std::vector<std::size_t> order(edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a,
                                                   std::size_t b) {
    return edges[a] < edges[b];
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (edges[order[i]] == edges[order[i - 1]]) {
      const auto& e = edges[order[i]];
      throw ParseError(edge_lines[order[i]],
                       "duplicate edge " + std::to_string(e.u) + " " +
                           std::to_string(e.v));
    }
  }
  return TypedGraph(std::move(types), std::move(edges));
}

TypedGraph ReadGraph(std::istream& in) {
  std::string text((std::istreambuf_iterator<char>(in)),
                   std::istreambuf_iterator<char>());
  return ParseGraph(text);
}

TypedGraph ReadGraphFile(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  return ReadGraph(in);
}

void WriteGraph(std::ostream& out, const TypedGraph& g) {
  out << g.num_vertices() << ' ' << g.num_edges() << '\n';
  if (g.num_vertices() > 0) {
    std::string types(g.num_vertices(), '1');
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if (g.type(v) == VertexType::kFree) types[v] = '2';
    }
    out << types << '\n';
  }
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

std::string FormatGraph(const TypedGraph& g) {
  std::ostringstream out;
  WriteGraph(out, g);
  return out.str();
}

void WriteGraphFile(const std::filesystem::path& path, const TypedGraph& g) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  WriteGraph(out, g);
  if (!out) throw std::runtime_error("write failed for " + path.string());
}

}  // namespace sliders
