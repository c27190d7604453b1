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

#ifndef SLIDERS_TYPED_GRAPH_H_
#define SLIDERS_TYPED_GRAPH_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

namespace sliders {

using VertexId = std::int32_t;
using EdgeId = std::int32_t;

// Type 1 vertices sit on a slider (one degree of freedom), type 2 vertices
// move freely in the plane (two degrees of freedom). The enumerator value is
// the number of degrees of freedom, which is also the in-degree cap used by
// 1.5-orientations.
enum class VertexType : std::uint8_t { kSlider = 1, kFree = 2 };

constexpr int DegreesOfFreedom(VertexType t) { return static_cast<int>(t); }

// Undirected edge stored with u < v.
struct Edge {
  VertexId u = 0;
  VertexId v = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct Incidence {
  VertexId neighbor;
  EdgeId edge;
};

// Simple undirected graph with a type per vertex. Immutable once built.
//
// Edges are kept in canonical (lexicographic) order and EdgeId is the index
// into that order. Adjacency lists are sorted by neighbor id.
class TypedGraph {
 public:
  TypedGraph() = default;

  // Throws std::invalid_argument on loops, duplicate edges or endpoints out
  // of range. Edges may be given in any order and orientation.
  TypedGraph(std::vector<VertexType> types, std::vector<Edge> edges);

  int num_vertices() const { return static_cast<int>(types_.size()); }
  int num_edges() const { return static_cast<int>(edges_.size()); }
  int num_type1() const { return num_type1_; }
  int num_type2() const { return num_vertices() - num_type1_; }

  VertexType type(VertexId v) const { return types_[v]; }
  std::span<const VertexType> types() const { return types_; }

  const Edge& edge(EdgeId e) const { return edges_[e]; }
  std::span<const Edge> edges() const { return edges_; }

  std::span<const Incidence> incident(VertexId v) const {
    return {adjacency_.data() + offsets_[v],
            adjacency_.data() + offsets_[v + 1]};
  }
  int degree(VertexId v) const { return offsets_[v + 1] - offsets_[v]; }

  // Returns the id of edge {u, v}, or -1 when absent.
  EdgeId find_edge(VertexId u, VertexId v) const;
  bool has_edge(VertexId u, VertexId v) const { return find_edge(u, v) >= 0; }

  friend bool operator==(const TypedGraph& a, const TypedGraph& b) {
    return a.types_ == b.types_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexType> types_;
  std::vector<Edge> edges_;
  std::vector<std::int64_t> offsets_{0};
  std::vector<Incidence> adjacency_;
  int num_type1_ = 0;
};

// n1 + 2 n2 over the given vertices.
int FreedomCount(const TypedGraph& g, std::span<const VertexId> vertices);

// Number of edges of g with both endpoints in `vertices`.
int InducedEdgeCount(const TypedGraph& g, std::span<const VertexId> vertices);

struct InducedSubgraph {
  TypedGraph graph;
  // to_original[i] is the id in the parent graph of vertex i of `graph`.
  std::vector<VertexId> to_original;
  // from_original[v] is the new id of parent vertex v, or -1.
  std::vector<VertexId> from_original;
};

// Keeps types and every edge with both endpoints in `vertices`. New ids
// follow the increasing order of the original ids. Duplicates in `vertices`
// are ignored; ids out of range throw std::invalid_argument.
InducedSubgraph Induce(const TypedGraph& g, std::span<const VertexId> vertices);

// Returns g with vertex v given type t.
TypedGraph WithType(const TypedGraph& g, VertexId v, VertexType t);

// Returns g plus the given extra edges.
TypedGraph WithEdges(const TypedGraph& g, std::span<const Edge> extra);

// Returns the edge-subgraph keeping only the listed edge ids.
TypedGraph EdgeSubgraph(const TypedGraph& g, std::span<const EdgeId> keep);

}  // namespace sliders

#endif  // SLIDERS_TYPED_GRAPH_H_
