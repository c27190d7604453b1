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

#include "sliders/rigidity.h"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace sliders {

SparseEdgeSet::SparseEdgeSet(const TypedGraph& g)
    : g_(&g),
      laman_(g.num_vertices()),
      orientation_(g),
      kept_mask_(g.num_edges(), 0) {}

bool SparseEdgeSet::TryAdd(EdgeId e) {
  if (kept_mask_[e]) return false;
  const Edge& edge = g_->edge(e);
  if (!laman_.CanInsert(edge.u, edge.v)) return false;
  const VertexId head = orientation_.MakeRoom(e);
  if (head < 0) return false;
  laman_.Insert(edge.u, edge.v);
  orientation_.Orient(e, head);
  kept_mask_[e] = 1;
  kept_.push_back(e);
  return true;
}

bool IsLamanSparse(const TypedGraph& g) {
  LamanPebbleGame game(g.num_vertices());
  for (const Edge& e : g.edges()) {
    if (!game.TryInsert(e.u, e.v)) return false;
  }
  return true;
}

bool IsSparse(const TypedGraph& g) {
  return IsLamanSparse(g) && IsOrientable(g);
}

bool IsMinimallyRigid(const TypedGraph& g) {
  if (g.num_vertices() == 1) return true;
  if (g.num_vertices() == 0) return false;
  return g.num_edges() == RigidityTarget(g.num_type1(), g.num_type2()) &&
         IsSparse(g);
}

RankResult Rank(const TypedGraph& g, std::span<const EdgeId> order) {
  if (g.num_vertices() < 2) {
    throw std::invalid_argument("rank needs at least two vertices");
  }
  SparseEdgeSet set(g);
  for (EdgeId e : order) set.TryAdd(e);
  return {static_cast<int>(set.kept().size()), set.kept()};
}

RankResult Rank(const TypedGraph& g) {
  std::vector<EdgeId> order(g.num_edges());
  std::iota(order.begin(), order.end(), 0);
  return Rank(g, order);
}

bool IsRigid(const TypedGraph& g) {
  if (g.num_vertices() == 1) return true;
  if (g.num_vertices() == 0) return false;
  return Rank(g).rank == RigidityTarget(g.num_type1(), g.num_type2());
}

bool IsRigidBlock(const TypedGraph& g, std::span<const VertexId> vertices) {
  return IsRigid(Induce(g, vertices).graph);
}

namespace {

bool InducedConnected(const TypedGraph& g, const std::vector<VertexId>& vs,
                      std::vector<int>& mark, int token) {
  if (vs.empty()) return false;
  for (VertexId v : vs) mark[v] = token;
  std::vector<VertexId> stack{vs.front()};
  mark[vs.front()] = -token;
  std::size_t seen = 1;
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (const Incidence& inc : g.incident(x)) {
      if (mark[inc.neighbor] == token) {
        mark[inc.neighbor] = -token;
        ++seen;
        stack.push_back(inc.neighbor);
      }
    }
  }
  return seen == vs.size();
}

}  // namespace

RigidDecomposition RigidComponents(const TypedGraph& g) {
  const int n = g.num_vertices();
  const int m = g.num_edges();
  RigidDecomposition out;
  out.component_of_edge.assign(m, -1);

  SparseEdgeSet basis(g);
  for (EdgeId e = 0; e < m; ++e) basis.TryAdd(e);

  // Pinned part: vertices that no unsaturated vertex reaches along
  // tail -> head of the orientation of the basis.
  const IncrementalOrientation& orient = basis.orientation();
  std::vector<std::vector<VertexId>> heads_of_tail(n);
  for (EdgeId e : basis.kept()) {
    const VertexId h = orient.orientation().head(e);
    const Edge& edge = g.edge(e);
    heads_of_tail[edge.u == h ? edge.v : edge.u].push_back(h);
  }
  std::vector<char> loose(n, 0);
  std::vector<VertexId> stack;
  for (VertexId v = 0; v < n; ++v) {
    if (!orient.saturated(v)) {
      loose[v] = 1;
      stack.push_back(v);
    }
  }
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (VertexId h : heads_of_tail[x]) {
      if (!loose[h]) {
        loose[h] = 1;
        stack.push_back(h);
      }
    }
  }

  std::vector<std::vector<VertexId>> vertex_sets;
  std::vector<int> owner(n, -1);  // scratch for edge assignment
  auto claim = [&](std::vector<VertexId> vs) {
    const int id = static_cast<int>(vertex_sets.size());
    for (VertexId v : vs) owner[v] = id;
    for (VertexId v : vs) {
      for (const Incidence& inc : g.incident(v)) {
        if (inc.neighbor > v && owner[inc.neighbor] == id) {
          out.component_of_edge[inc.edge] = id;
        }
      }
    }
    vertex_sets.push_back(std::move(vs));
  };

  std::vector<VertexId> pinned;
  for (VertexId v = 0; v < n; ++v) {
    if (!loose[v]) pinned.push_back(v);
  }
  if (!pinned.empty()) claim(std::move(pinned));

  for (EdgeId e : basis.kept()) {
    if (out.component_of_edge[e] >= 0) continue;
    const Edge& edge = g.edge(e);
    claim(basis.laman().Component(edge.u, edge.v));
  }

  // Order components by their smallest edge id.
  const int k = static_cast<int>(vertex_sets.size());
  std::vector<EdgeId> first_edge(k, m);
  for (EdgeId e = 0; e < m; ++e) {
    const int c = out.component_of_edge[e];
    first_edge[c] = std::min(first_edge[c], e);
  }
  std::vector<int> order(k);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return first_edge[a] < first_edge[b]; });
  std::vector<int> rank_of(k);
  for (int r = 0; r < k; ++r) rank_of[order[r]] = r;

  out.components.resize(k);
  for (int c = 0; c < k; ++c) {
    RigidComponent& comp = out.components[rank_of[c]];
    comp.vertices = std::move(vertex_sets[c]);
    for (VertexId v : comp.vertices) {
      if (g.type(v) == VertexType::kSlider) {
        ++comp.n1;
      } else {
        ++comp.n2;
      }
    }
  }
  for (EdgeId e = 0; e < m; ++e) {
    int& c = out.component_of_edge[e];
    c = rank_of[c];
    out.components[c].edges.push_back(e);
  }

  std::vector<int> mark(n, 0);
  int token = 1;
  for (RigidComponent& comp : out.components) {
    comp.connected = InducedConnected(g, comp.vertices, mark, token++);
    out.largest = std::max(out.largest, comp.size());
    if (comp.connected) {
      out.largest_connected = std::max(out.largest_connected, comp.size());
    }
  }
  for (VertexId v = 0; v < n; ++v) {
    if (g.degree(v) == 0) out.isolated.push_back(v);
  }
  if (!out.isolated.empty()) {
    out.largest = std::max(out.largest, 1);
    out.largest_connected = std::max(out.largest_connected, 1);
  }
  return out;
}

std::vector<VertexId> MaximalBlockOfEdge(const TypedGraph& g, EdgeId e) {
  if (e < 0 || e >= g.num_edges()) {
    throw std::invalid_argument("edge id out of range");
  }
  RigidDecomposition d = RigidComponents(g);
  return d.components[d.component_of_edge[e]].vertices;
}

TypedGraph RetypeToSlider(const TypedGraph& g, VertexId v) {
  if (v < 0 || v >= g.num_vertices()) {
    throw std::invalid_argument("vertex id out of range");
  }
  if (g.type(v) != VertexType::kFree) {
    throw std::invalid_argument("vertex " + std::to_string(v) +
                                " is not type 2");
  }
  return WithType(g, v, VertexType::kSlider);
}

namespace {

// Cycle through first..first+count-1; a single edge for two vertices and
// nothing for one.
void AddCycle(std::vector<Edge>& edges, VertexId first, int count) {
  if (count == 2) {
    edges.push_back({first, first + 1});
  } else if (count >= 3) {
    for (int i = 0; i < count; ++i) {
      edges.push_back({first + i, first + (i + 1) % count});
    }
  }
}

}  // namespace

TypedGraph ConstructMinimallyRigid(int n1, int n2) {
  if (n1 < 0 || n2 < 0 || n1 + n2 < 2) {
    throw std::invalid_argument("need n1, n2 >= 0 and n1 + n2 >= 2");
  }
  std::vector<VertexType> types(n1, VertexType::kSlider);
  types.resize(n1 + n2, VertexType::kFree);
  std::vector<Edge> edges;
  const VertexId free0 = n1;

  if (n1 == 0) {
    // Henneberg vertex additions from a single edge.
    edges.push_back({0, 1});
    for (VertexId v = 2; v < n2; ++v) {
      edges.push_back({v - 2, v});
      edges.push_back({v - 1, v});
    }
  } else if (n1 == 1) {
    if (n2 <= 2) {
      for (VertexId a = 0; a < n1 + n2; ++a) {
        for (VertexId b = a + 1; b < n1 + n2; ++b) edges.push_back({a, b});
      }
    } else {
      AddCycle(edges, free0, n2);
      for (int k = 0; k + 1 < n2; ++k) edges.push_back({0, free0 + k});
    }
  } else {
    AddCycle(edges, 0, n1);
    if (n2 > 0) {
      AddCycle(edges, free0, n2);
      if (n2 <= 2) {
        for (int k = 0; k < n2; ++k) edges.push_back({0, free0 + k});
        edges.push_back({1, free0});
      } else {
        // A full star over a free cycle would put 2 n2 edges on n2 + 1
        // vertices; the last free vertex hangs off slider 1 instead.
        for (int k = 0; k + 1 < n2; ++k) edges.push_back({0, free0 + k});
        edges.push_back({1, free0 + n2 - 1});
      }
    }
  }
  return TypedGraph(std::move(types), std::move(edges));
}

int EdgesToMerge(int i, int j, int t) {
  if (i < 0 || j < 0 || t < 0 || t > 2) {
    throw std::invalid_argument("need i, j >= 0 and t in {0, 1, 2}");
  }
  if (t == 1 && (i == 0 || j == 0)) {
    throw std::invalid_argument("a shared slider counts in both i and j");
  }
  if (t == 2 && ((i >= 3 && j == 2) || (i == 2 && j >= 3))) {
    throw std::invalid_argument(
        "components with 2 and >= 3 sliders cannot share a free vertex");
  }
  if (std::min(i, j) >= 3) return 0;
  if (i >= 3) return 3 - j - t;
  if (j >= 3) return 3 - i - t;
  if (i + j >= 3) return 6 - i - j - t;
  return 3 - t;
}

}  // namespace sliders
