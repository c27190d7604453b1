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

#include "sliders/typed_graph.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace sliders {

TypedGraph::TypedGraph(std::vector<VertexType> types, std::vector<Edge> edges)
    : types_(std::move(types)), edges_(std::move(edges)) {
  const auto n = static_cast<VertexId>(types_.size());
  for (Edge& e : edges_) {
    if (e.u < 0 || e.v < 0 || e.u >= n || e.v >= n) {
      throw std::invalid_argument("edge endpoint out of range: " +
                                  std::to_string(e.u) + " " +
                                  std::to_string(e.v));
    }
    if (e.u == e.v) {
      throw std::invalid_argument("loop at vertex " + std::to_string(e.u));
    }
    if (e.u > e.v) std::swap(e.u, e.v);
  }
  std::sort(edges_.begin(), edges_.end());
  auto dup = std::adjacent_find(edges_.begin(), edges_.end());
  if (dup != edges_.end()) {
    throw std::invalid_argument("duplicate edge " + std::to_string(dup->u) +
                                " " + std::to_string(dup->v));
  }

  num_type1_ = static_cast<int>(
      std::count(types_.begin(), types_.end(), VertexType::kSlider));

  offsets_.assign(n + 1, 0);
  for (const Edge& e : edges_) {
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (VertexId v = 0; v < n; ++v) offsets_[v + 1] += offsets_[v];
  adjacency_.resize(2 * edges_.size());
  std::vector<std::int64_t> fill(offsets_.begin(), offsets_.end() - 1);
  // With edges in canonical order, writing the smaller-neighbor entries first
  // leaves every adjacency list sorted by neighbor id.
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.v]++] = {e.u, id};
  }
  for (EdgeId id = 0; id < num_edges(); ++id) {
    const Edge& e = edges_[id];
    adjacency_[fill[e.u]++] = {e.v, id};
  }
}

EdgeId TypedGraph::find_edge(VertexId u, VertexId v) const {
  if (u < 0 || v < 0 || u >= num_vertices() || v >= num_vertices()) return -1;
  if (degree(u) > degree(v)) std::swap(u, v);
  auto adj = incident(u);
  auto it = std::lower_bound(
      adj.begin(), adj.end(), v,
      [](const Incidence& a, VertexId x) { return a.neighbor < x; });
  if (it != adj.end() && it->neighbor == v) return it->edge;
  return -1;
}

int FreedomCount(const TypedGraph& g, std::span<const VertexId> vertices) {
  int total = 0;
  for (VertexId v : vertices) total += DegreesOfFreedom(g.type(v));
  return total;
}

int InducedEdgeCount(const TypedGraph& g, std::span<const VertexId> vertices) {
  std::vector<char> in(g.num_vertices(), 0);
  for (VertexId v : vertices) in[v] = 1;
  int count = 0;
  for (VertexId v : vertices) {
    for (const Incidence& inc : g.incident(v)) {
      if (inc.neighbor > v && in[inc.neighbor]) ++count;
    }
  }
  return count;
}

InducedSubgraph Induce(const TypedGraph& g,
                       std::span<const VertexId> vertices) {
  InducedSubgraph out;
  out.from_original.assign(g.num_vertices(), -1);
  for (VertexId v : vertices) {
    if (v < 0 || v >= g.num_vertices()) {
      throw std::invalid_argument("vertex id out of range: " +
                                  std::to_string(v));
    }
    out.from_original[v] = 0;
  }
  std::vector<VertexType> types;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (out.from_original[v] < 0) continue;
    out.from_original[v] = static_cast<VertexId>(out.to_original.size());
    out.to_original.push_back(v);
    types.push_back(g.type(v));
  }
  std::vector<Edge> edges;
  for (const Edge& e : g.edges()) {
    VertexId a = out.from_original[e.u];
    VertexId b = out.from_original[e.v];
    if (a >= 0 && b >= 0) edges.push_back({a, b});
  }
  out.graph = TypedGraph(std::move(types), std::move(edges));
  return out;
}

TypedGraph WithType(const TypedGraph& g, VertexId v, VertexType t) {
  std::vector<VertexType> types(g.types().begin(), g.types().end());
  types.at(v) = t;
  return TypedGraph(std::move(types),
                    std::vector<Edge>(g.edges().begin(), g.edges().end()));
}

TypedGraph WithEdges(const TypedGraph& g, std::span<const Edge> extra) {
  std::vector<Edge> edges(g.edges().begin(), g.edges().end());
  edges.insert(edges.end(), extra.begin(), extra.end());
  return TypedGraph(std::vector<VertexType>(g.types().begin(), g.types().end()),
                    std::move(edges));
}

TypedGraph EdgeSubgraph(const TypedGraph& g, std::span<const EdgeId> keep) {
  std::vector<Edge> edges;
  edges.reserve(keep.size());
  for (EdgeId e : keep) edges.push_back(g.edge(e));
  return TypedGraph(std::vector<VertexType>(g.types().begin(), g.types().end()),
                    std::move(edges));
}

}  // namespace sliders
