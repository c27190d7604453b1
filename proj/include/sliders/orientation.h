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

// 1.5-orientations: every edge gets a head, a type 1 vertex receives at most
// one head and a type 2 vertex at most two. A graph has such an orientation
// iff every induced subgraph has m' <= n1' + 2 n2'; when none exists we return
// a subgraph violating that count.

#ifndef SLIDERS_ORIENTATION_H_
#define SLIDERS_ORIENTATION_H_

#include <array>
#include <cstdint>
#include <span>
#include <variant>
#include <vector>

#include "sliders/typed_graph.h"

namespace sliders {

inline constexpr VertexId kUnoriented = -1;

// Partial map edge -> head. Unoriented edges hold kUnoriented.
class Orientation {
 public:
  Orientation() = default;
  explicit Orientation(int num_edges) : head_(num_edges, kUnoriented) {}

  int num_edges() const { return static_cast<int>(head_.size()); }
  VertexId head(EdgeId e) const { return head_[e]; }
  void set_head(EdgeId e, VertexId v) { head_[e] = v; }
  bool oriented(EdgeId e) const { return head_[e] != kUnoriented; }
  int num_oriented() const;

 private:
  std::vector<VertexId> head_;
};

// Induced subgraph with more edges than in-degree capacity.
struct DenseWitness {
  std::vector<VertexId> vertices;  // sorted
  int num_edges = 0;
  int num_type1 = 0;
  int num_type2 = 0;

  int size() const { return static_cast<int>(vertices.size()); }
  int capacity() const { return num_type1 + 2 * num_type2; }
  int excess() const { return num_edges - capacity(); }
};

// Counts edges and types of the subgraph induced by `vertices` in g.
DenseWitness CountSubgraph(const TypedGraph& g,
                           std::vector<VertexId> vertices);

// Augmenting-path orientation engine. Edges are added one at a time; an edge
// whose endpoints are both saturated is accommodated by reversing a path of
// oriented edges that ends at a vertex with spare capacity. The orientation
// stays valid between calls.
class IncrementalOrientation {
 public:
  explicit IncrementalOrientation(const TypedGraph& g);

  // Frees capacity at an endpoint of e, reversing one path if needed, and
  // returns that endpoint (lower id preferred). Returns -1 if impossible, in
  // which case blocked_set() is the set of saturated vertices reached.
  // Does not orient e.
  VertexId MakeRoom(EdgeId e);

  // Orients e toward `head`, which must be an endpoint with spare capacity.
  void Orient(EdgeId e, VertexId head);

  // MakeRoom followed by Orient. False leaves e unoriented.
  bool Insert(EdgeId e);

  const Orientation& orientation() const { return orientation_; }
  int in_degree(VertexId v) const { return in_count_[v]; }
  bool saturated(VertexId v) const {
    return in_count_[v] >= DegreesOfFreedom(g_->type(v));
  }
  std::span<const EdgeId> in_edges(VertexId v) const {
    return {in_edges_[v].data(), static_cast<std::size_t>(in_count_[v])};
  }
  // Vertices reached by the last failed MakeRoom, in discovery order.
  std::span<const VertexId> blocked_set() const { return blocked_; }

 private:
  void Reorient(EdgeId e, VertexId new_head);

  const TypedGraph* g_;
  Orientation orientation_;
  std::vector<std::array<EdgeId, 2>> in_edges_;
  std::vector<std::uint8_t> in_count_;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<EdgeId> pred_;
  std::vector<VertexId> queue_;
  std::vector<VertexId> blocked_;
};

using OrientationOutcome = std::variant<Orientation, DenseWitness>;

// Inserts edges in canonical order. Returns a total orientation, or the
// saturated set reached when the first edge fails (not minimized).
OrientationOutcome FindOrientation(const TypedGraph& g);

bool IsOrientable(const TypedGraph& g);

struct MaxOrientation {
  int oriented_edges = 0;  // maximum admissible size M
  int gap = 0;             // m - M
  Orientation orientation;
};

MaxOrientation MaxOrientableEdges(const TypedGraph& g);

// True iff o covers g's edge set, every head is an endpoint of its edge and
// no vertex exceeds its in-degree cap. Unoriented edges are allowed.
bool VerifyOrientation(const TypedGraph& g, const Orientation& o);

}  // namespace sliders

#endif  // SLIDERS_ORIENTATION_H_
