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

#include "sliders/orientation.h"

#include <algorithm>
#include <cassert>
#include <utility>

namespace sliders {

int Orientation::num_oriented() const {
  return static_cast<int>(
      std::count_if(head_.begin(), head_.end(),
                    [](VertexId h) { return h != kUnoriented; }));
}

DenseWitness CountSubgraph(const TypedGraph& g,
                           std::vector<VertexId> vertices) {
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  DenseWitness w;
  w.num_edges = InducedEdgeCount(g, vertices);
  for (VertexId v : vertices) {
    if (g.type(v) == VertexType::kSlider) {
      ++w.num_type1;
    } else {
      ++w.num_type2;
    }
  }
  w.vertices = std::move(vertices);
  return w;
}

IncrementalOrientation::IncrementalOrientation(const TypedGraph& g)
    : g_(&g),
      orientation_(g.num_edges()),
      in_edges_(g.num_vertices(), {-1, -1}),
      in_count_(g.num_vertices(), 0),
      stamp_(g.num_vertices(), 0),
      pred_(g.num_vertices(), -1) {}

void IncrementalOrientation::Orient(EdgeId e, VertexId head) {
  assert(!saturated(head));
  assert(g_->edge(e).u == head || g_->edge(e).v == head);
  orientation_.set_head(e, head);
  in_edges_[head][in_count_[head]++] = e;
}

void IncrementalOrientation::Reorient(EdgeId e, VertexId new_head) {
  const VertexId old_head = orientation_.head(e);
  auto& slots = in_edges_[old_head];
  if (slots[0] == e) slots[0] = slots[1];
  slots[1] = -1;
  --in_count_[old_head];
  Orient(e, new_head);
}

VertexId IncrementalOrientation::MakeRoom(EdgeId e) {
  const Edge& edge = g_->edge(e);
  if (!saturated(edge.u)) return edge.u;
  if (!saturated(edge.v)) return edge.v;

  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  queue_.clear();
  for (VertexId root : {edge.u, edge.v}) {
    stamp_[root] = epoch_;
    pred_[root] = -1;
    queue_.push_back(root);
  }
  // Breadth-first over "x currently receives f from y": handing f to y frees
  // a slot at x.
  for (std::size_t i = 0; i < queue_.size(); ++i) {
    const VertexId x = queue_[i];
    for (EdgeId f : in_edges(x)) {
      const Edge& fe = g_->edge(f);
      const VertexId y = fe.u == x ? fe.v : fe.u;
      if (stamp_[y] == epoch_) continue;
      stamp_[y] = epoch_;
      pred_[y] = f;
      if (!saturated(y)) {
        VertexId cur = y;
        while (pred_[cur] != -1) {
          const EdgeId step = pred_[cur];
          const VertexId prev = orientation_.head(step);
          Reorient(step, cur);
          cur = prev;
        }
        return cur;
      }
      queue_.push_back(y);
    }
  }
  blocked_ = queue_;
  return -1;
}

bool IncrementalOrientation::Insert(EdgeId e) {
  const VertexId head = MakeRoom(e);
  if (head < 0) return false;
  Orient(e, head);
  return true;
}

OrientationOutcome FindOrientation(const TypedGraph& g) {
  IncrementalOrientation engine(g);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (!engine.Insert(e)) {
      auto blocked = engine.blocked_set();
      return CountSubgraph(g, {blocked.begin(), blocked.end()});
    }
  }
  return engine.orientation();
}

bool IsOrientable(const TypedGraph& g) {
  return std::holds_alternative<Orientation>(FindOrientation(g));
}

MaxOrientation MaxOrientableEdges(const TypedGraph& g) {
  // An edge that finds no augmenting path now never will later, so one pass
  // yields a maximum admissible subgraph.
  IncrementalOrientation engine(g);
  int oriented = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    if (engine.Insert(e)) ++oriented;
  }
  return {oriented, g.num_edges() - oriented, engine.orientation()};
}

bool VerifyOrientation(const TypedGraph& g, const Orientation& o) {
  if (o.num_edges() != g.num_edges()) return false;
  std::vector<int> in(g.num_vertices(), 0);
  for (EdgeId e = 0; e < g.num_edges(); ++e) {
    const VertexId h = o.head(e);
    if (h == kUnoriented) continue;
    const Edge& edge = g.edge(e);
    if (h != edge.u && h != edge.v) return false;
    if (++in[h] > DegreesOfFreedom(g.type(h))) return false;
  }
  return true;
}

}  // namespace sliders
