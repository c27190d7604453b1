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

// Exponential-time reference implementations for small graphs. Everything
// here works straight from the definitions with vertex and edge bitmasks and
// shares no code with the library algorithms.

#ifndef SLIDERS_TESTS_SUPPORT_BRUTE_FORCE_H_
#define SLIDERS_TESTS_SUPPORT_BRUTE_FORCE_H_

#include <algorithm>
#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "sliders/typed_graph.h"

namespace sliders::brute {

using Mask = std::uint32_t;        // vertex subset, n <= 20
using EdgeMask = std::uint64_t;    // edge subset, m <= 63

inline Mask AllVertices(const TypedGraph& g) {
  return g.num_vertices() == 32 ? ~Mask{0} : (Mask{1} << g.num_vertices()) - 1;
}

inline EdgeMask AllEdges(const TypedGraph& g) {
  return g.num_edges() == 64 ? ~EdgeMask{0}
                             : (EdgeMask{1} << g.num_edges()) - 1;
}

inline Mask SliderMask(const TypedGraph& g) {
  Mask s = 0;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if (g.type(v) == VertexType::kSlider) s |= Mask{1} << v;
  }
  return s;
}

inline int EdgesInside(const TypedGraph& g, EdgeMask edges, Mask vertices) {
  int count = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!((edges >> e) & 1)) continue;
    const Edge& ed = g.edge(e);
    if (((vertices >> ed.u) & 1) && ((vertices >> ed.v) & 1)) ++count;
  }
  return count;
}

// Upper bound on edges among a vertex set with n' >= 2.
inline int SparseBound(int n1, int n2) {
  return 2 * (n1 + n2) - std::max(n1, 3);
}

inline int Target(int n1, int n2) {
  return n1 + 2 * n2 + std::min(0, n1 - 3);
}

// Induced edge mask and graded bound of every vertex subset, so that edge
// sets of one graph can be tested with popcounts.
class SparsityTable {
 public:
  explicit SparsityTable(const TypedGraph& g)
      : inside_(AllVertices(g) + std::size_t{1}, 0),
        bound_(AllVertices(g) + std::size_t{1}, 0) {
    const Mask sliders = SliderMask(g);
    for (Mask s = 1; s <= AllVertices(g); ++s) {
      const int size = std::popcount(s);
      const int n1 = std::popcount(s & sliders);
      bound_[s] = size < 2 ? 0 : SparseBound(n1, size - n1);
      for (EdgeId e = 0; e < g.num_edges(); ++e) {
        const Edge& ed = g.edge(e);
        if (((s >> ed.u) & 1) && ((s >> ed.v) & 1)) {
          inside_[s] |= EdgeMask{1} << e;
        }
      }
    }
  }

  // Every vertex subset of size >= 2 satisfies the graded bound.
  bool Sparse(EdgeMask edges) const {
    for (std::size_t s = 1; s < inside_.size(); ++s) {
      if (std::popcount(edges & inside_[s]) > bound_[s]) return false;
    }
    return true;
  }

 private:
  std::vector<EdgeMask> inside_;
  std::vector<int> bound_;
};

inline bool IsSparseEdgeSet(const TypedGraph& g, EdgeMask edges) {
  return SparsityTable(g).Sparse(edges);
}

inline bool IsSparse(const TypedGraph& g) {
  return IsSparseEdgeSet(g, AllEdges(g));
}

inline bool IsLamanSparse(const TypedGraph& g) {
  for (Mask s = 1; s <= AllVertices(g); ++s) {
    const int size = std::popcount(s);
    if (size >= 2 && EdgesInside(g, AllEdges(g), s) > 2 * size - 3) {
      return false;
    }
  }
  return true;
}

// Every vertex subset has at most n1' + 2 n2' induced edges.
inline bool HasNoDenseSubset(const TypedGraph& g) {
  const Mask sliders = SliderMask(g);
  for (Mask s = 1; s <= AllVertices(g); ++s) {
    const int n1 = std::popcount(s & sliders);
    const int n2 = std::popcount(s) - n1;
    if (EdgesInside(g, AllEdges(g), s) > n1 + 2 * n2) return false;
  }
  return true;
}

namespace internal {

// Maximum number of edges among edges[k..] that can be oriented given the
// remaining in-capacity; stops early once `goal` is reached.
inline int OrientSearch(const TypedGraph& g, int k, std::vector<int>& cap,
                        int goal) {
  if (goal <= 0 || k == g.num_edges()) return 0;
  const Edge& e = g.edge(k);
  int best = 0;
  for (VertexId h : {e.u, e.v}) {
    if (cap[h] == 0) continue;
    --cap[h];
    best = std::max(best, 1 + OrientSearch(g, k + 1, cap, goal - 1));
    ++cap[h];
    if (best >= goal) return best;
  }
  if (g.num_edges() - k - 1 > best) {
    best = std::max(best, OrientSearch(g, k + 1, cap, goal));
  }
  return best;
}

inline std::vector<int> Capacities(const TypedGraph& g) {
  std::vector<int> cap(g.num_vertices());
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    cap[v] = g.type(v) == VertexType::kSlider ? 1 : 2;
  }
  return cap;
}

}  // namespace internal

// Largest number of edges that can be directed with in-degree at most 1 at
// sliders and 2 at free vertices, by exhaustive search.
inline int MaxOrientable(const TypedGraph& g) {
  std::vector<int> cap = internal::Capacities(g);
  return internal::OrientSearch(g, 0, cap, g.num_edges());
}

// Whether all edges can be so directed, by backtracking over heads.
inline bool OrientableBySearch(const TypedGraph& g) {
  return MaxOrientable(g) == g.num_edges();
}

namespace internal {

// Depth-first search over include/exclude choices for pool[k..]. A prefix
// that is already dense is dropped since every superset is dense too.
inline bool ExtendSparse(const SparsityTable& table,
                         const std::vector<EdgeId>& pool, std::size_t k,
                         EdgeMask chosen, int missing) {
  if (missing == 0) return true;
  if (pool.size() - k < static_cast<std::size_t>(missing)) return false;
  const EdgeMask with = chosen | (EdgeMask{1} << pool[k]);
  if (table.Sparse(with) &&
      ExtendSparse(table, pool, k + 1, with, missing - 1)) {
    return true;
  }
  return ExtendSparse(table, pool, k + 1, chosen, missing);
}

}  // namespace internal

// Whether some `size`-subset of `edges` is sparse, by exhaustive search.
inline bool HasSparseSubsetOfSize(const TypedGraph& g, EdgeMask edges,
                                  int size) {
  std::vector<EdgeId> pool;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if ((edges >> e) & 1) pool.push_back(e);
  }
  if (size > static_cast<int>(pool.size())) return false;
  if (size <= 0) return true;
  return internal::ExtendSparse(SparsityTable(g), pool, 0, 0, size);
}

// Rank through greedy insertion checked against the subset definition.
inline int GreedyRank(const TypedGraph& g, EdgeMask edges) {
  const SparsityTable table(g);
  EdgeMask kept = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!((edges >> e) & 1)) continue;
    const EdgeMask with = kept | (EdgeMask{1} << e);
    if (table.Sparse(with)) kept = with;
  }
  return std::popcount(kept);
}

inline bool IsMinimallyRigid(const TypedGraph& g) {
  if (g.num_vertices() == 1) return true;
  if (g.num_vertices() == 0) return false;
  return g.num_edges() == Target(g.num_type1(), g.num_type2()) &&
         brute::IsSparse(g);
}

// Rigid: a spanning sparse subgraph with the target edge count exists.
// Enumerates edge subsets when `exhaustive`, otherwise uses greedy rank.
inline bool IsRigid(const TypedGraph& g, bool exhaustive = true) {
  if (g.num_vertices() == 1) return true;
  if (g.num_vertices() == 0) return false;
  const int target = Target(g.num_type1(), g.num_type2());
  if (exhaustive) return HasSparseSubsetOfSize(g, AllEdges(g), target);
  return GreedyRank(g, AllEdges(g)) == target;
}

// Rigidity of the subgraph induced by a vertex mask.
inline bool IsRigidMask(const TypedGraph& g, Mask s, bool exhaustive = false) {
  std::vector<VertexId> vs;
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    if ((s >> v) & 1) vs.push_back(v);
  }
  return brute::IsRigid(Induce(g, vs).graph, exhaustive);
}

// Inclusion-maximal vertex sets of size >= 2 inducing a rigid subgraph.
inline std::vector<Mask> MaximalRigidSets(const TypedGraph& g) {
  std::vector<Mask> rigid;
  for (Mask s = 1; s <= AllVertices(g); ++s) {
    if (std::popcount(s) >= 2 && IsRigidMask(g, s)) rigid.push_back(s);
  }
  std::vector<Mask> out;
  for (Mask s : rigid) {
    bool maximal = true;
    for (Mask t : rigid) {
      if (t != s && (s & t) == s) {
        maximal = false;
        break;
      }
    }
    if (maximal) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

inline Mask ToMask(const std::vector<VertexId>& vs) {
  Mask s = 0;
  for (VertexId v : vs) s |= Mask{1} << v;
  return s;
}

// Union of all vertex sets in which sliders have degree >= 2 and free
// vertices degree >= 3 (the union of two such sets is another one).
inline Mask Core(const TypedGraph& g) {
  Mask core = 0;
  for (Mask s = 1; s <= AllVertices(g); ++s) {
    bool ok = true;
    for (VertexId v = 0; v < g.num_vertices() && ok; ++v) {
      if (!((s >> v) & 1)) continue;
      int d = 0;
      for (const Incidence& inc : g.incident(v)) d += (s >> inc.neighbor) & 1;
      ok = d >= (g.type(v) == VertexType::kSlider ? 2 : 3);
    }
    if (ok) core |= s;
  }
  return core;
}

// Repeated full scans adding sliders with one and free vertices with two
// neighbours in the current set.
inline Mask CorePlus(const TypedGraph& g) {
  Mask set = brute::Core(g);
  for (bool grew = true; grew;) {
    grew = false;
    for (VertexId v = 0; v < g.num_vertices(); ++v) {
      if ((set >> v) & 1) continue;
      int d = 0;
      for (const Incidence& inc : g.incident(v)) d += (set >> inc.neighbor) & 1;
      if (d >= (g.type(v) == VertexType::kSlider ? 1 : 2)) {
        set |= Mask{1} << v;
        grew = true;
      }
    }
  }
  return set;
}

// Graph number `code` among all typed graphs on n vertices: the low
// n(n-1)/2 bits pick edges (pairs in lexicographic order), the next n bits
// mark free vertices.
inline TypedGraph Enumerated(int n, std::uint64_t code) {
  std::vector<Edge> edges;
  int bit = 0;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v, ++bit) {
      if ((code >> bit) & 1) edges.push_back({u, v});
    }
  }
  std::vector<VertexType> types(n);
  for (int v = 0; v < n; ++v) {
    types[v] = ((code >> (bit + v)) & 1) ? VertexType::kFree
                                         : VertexType::kSlider;
  }
  return TypedGraph(std::move(types), std::move(edges));
}

inline std::uint64_t EnumerationSize(int n) {
  return std::uint64_t{1} << (n * (n - 1) / 2 + n);
}

// Uniform random typed graph with edge probability p and free probability q.
inline TypedGraph RandomGraph(std::mt19937_64& rng, int n, double p, double q) {
  std::bernoulli_distribution edge(p), free(q);
  std::vector<VertexType> types(n);
  for (auto& t : types) t = free(rng) ? VertexType::kFree : VertexType::kSlider;
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) {
      if (edge(rng)) edges.push_back({u, v});
    }
  }
  return TypedGraph(std::move(types), std::move(edges));
}

}  // namespace sliders::brute

#endif  // SLIDERS_TESTS_SUPPORT_BRUTE_FORCE_H_
