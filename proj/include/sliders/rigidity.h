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

// Rigidity of frameworks whose joints are either on sliders (type 1) or free
// in the plane (type 2).
//
// A graph is sparse when every subgraph on n' >= 2 vertices has
//   m' <= n1' + 2 n2' + min(0, n1' - 3) = 2 n' - max(n1', 3).
// The right-hand side equals min(2 n' - 3, n1' + 2 n2'), so sparsity is the
// conjunction of Laman sparsity and 1.5-orientability; both are tested
// incrementally (pebble game, augmenting paths). Sparse edge sets are the
// independent sets of a matroid on the edges, so greedy insertion computes
// the rank.

#ifndef SLIDERS_RIGIDITY_H_
#define SLIDERS_RIGIDITY_H_

#include <span>
#include <vector>

#include "sliders/orientation.h"
#include "sliders/pebble_game.h"
#include "sliders/typed_graph.h"

namespace sliders {

// Edge count of a minimally rigid graph with these vertex counts.
constexpr int RigidityTarget(int n1, int n2) {
  return n1 + 2 * n2 + (n1 < 3 ? n1 - 3 : 0);
}

// Incremental independence test in the sparsity matroid of g.
class SparseEdgeSet {
 public:
  explicit SparseEdgeSet(const TypedGraph& g);

  // Keeps e iff the kept set plus e is sparse.
  bool TryAdd(EdgeId e);

  bool contains(EdgeId e) const { return kept_mask_[e] != 0; }
  const std::vector<EdgeId>& kept() const { return kept_; }

  LamanPebbleGame& laman() { return laman_; }
  const IncrementalOrientation& orientation() const { return orientation_; }

 private:
  const TypedGraph* g_;
  LamanPebbleGame laman_;
  IncrementalOrientation orientation_;
  std::vector<EdgeId> kept_;
  std::vector<char> kept_mask_;
};

bool IsLamanSparse(const TypedGraph& g);
bool IsSparse(const TypedGraph& g);
bool IsMinimallyRigid(const TypedGraph& g);

struct RankResult {
  int rank = 0;
  std::vector<EdgeId> basis;  // in scan order
};

// Greedy basis over the canonical edge order. Throws std::invalid_argument
// for graphs with fewer than two vertices.
RankResult Rank(const TypedGraph& g);

// Greedy basis over a caller-supplied scan order (a permutation of edge ids).
RankResult Rank(const TypedGraph& g, std::span<const EdgeId> order);

// n = 1, or n >= 2 and the rank reaches RigidityTarget(n1, n2).
bool IsRigid(const TypedGraph& g);

// Rigidity of the subgraph induced by `vertices`.
bool IsRigidBlock(const TypedGraph& g, std::span<const VertexId> vertices);

struct RigidComponent {
  std::vector<VertexId> vertices;  // sorted
  std::vector<EdgeId> edges;       // all edges of g induced by `vertices`
  int n1 = 0;
  int n2 = 0;
  bool connected = false;

  int size() const { return static_cast<int>(vertices.size()); }
};

struct RigidDecomposition {
  // Components with at least one edge, ordered by smallest edge id.
  std::vector<RigidComponent> components;
  // Degree-zero vertices; each is its own one-vertex component.
  std::vector<VertexId> isolated;
  // component_of_edge[e] indexes `components`.
  std::vector<int> component_of_edge;
  // Vertex count of the largest component (isolated vertices count as 1).
  int largest = 0;
  // Same, restricted to components whose induced graph is connected.
  int largest_connected = 0;
};

// Unique decomposition into inclusion-maximal rigid blocks.
//
// A greedy basis B gives the components: a vertex set is rigid in g iff its
// B-edges reach the target count, which happens either with m' = 2n' - 3 or
// with m' = n1' + 2n2'. All sets of the second kind are contained in one
// maximal set, read off a 1.5-orientation of B as the vertices not reachable
// from an unsaturated vertex; the rest are maximal Laman-tight sets of B,
// found with the pebble game.
RigidDecomposition RigidComponents(const TypedGraph& g);

// Vertex set of the rigid component containing edge e.
std::vector<VertexId> MaximalBlockOfEdge(const TypedGraph& g, EdgeId e);

// Returns g with type 2 vertex v turned into a slider. Throws
// std::invalid_argument when v is not type 2.
TypedGraph RetypeToSlider(const TypedGraph& g, VertexId v);

// A minimally rigid graph with vertices 0..n1-1 of type 1 and n1..n1+n2-1 of
// type 2: a cycle through each type, a star from vertex 0 to the type 2
// vertices and one edge from vertex 1, with small-count variants. Throws
// when n1 + n2 < 2.
TypedGraph ConstructMinimallyRigid(int n1, int n2);

// Number of pairwise disjoint cross edges that join two rigid components
// into a rigid block, given the slider counts i, j of the two components and
// t = 0 (disjoint) or the type of their shared vertex. Throws
// std::invalid_argument on impossible inputs.
int EdgesToMerge(int i, int j, int t);

}  // namespace sliders

#endif  // SLIDERS_RIGIDITY_H_
