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

#include "sliders/cores.h"

namespace sliders {
namespace {

// Degree floor inside the 2.5-core: one more than the degrees of freedom.
int CoreFloor(VertexType t) { return DegreesOfFreedom(t) + 1; }

std::vector<VertexId> Peel(const TypedGraph& g, std::vector<PeelStep>* trace) {
  const int n = g.num_vertices();
  std::vector<int> degree(n);
  std::vector<char> removed(n, 0);
  std::vector<char> queued(n, 0);
  std::vector<VertexId> queue;
  for (VertexId v = 0; v < n; ++v) {
    degree[v] = g.degree(v);
    if (degree[v] < CoreFloor(g.type(v))) {
      queued[v] = 1;
      queue.push_back(v);
    }
  }
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const VertexId v = queue[i];
    removed[v] = 1;
    if (trace) trace->push_back({v, g.type(v), degree[v]});
    for (const Incidence& inc : g.incident(v)) {
      const VertexId w = inc.neighbor;
      if (removed[w]) continue;
      --degree[w];
      if (!queued[w] && degree[w] < CoreFloor(g.type(w))) {
        queued[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<VertexId> core;
  for (VertexId v = 0; v < n; ++v) {
    if (!removed[v]) core.push_back(v);
  }
  return core;
}

}  // namespace

std::vector<VertexId> Core25(const TypedGraph& g) { return Peel(g, nullptr); }

std::vector<VertexId> Accrete(const TypedGraph& g,
                              const std::vector<VertexId>& seed) {
  const int n = g.num_vertices();
  std::vector<char> in(n, 0);
  std::vector<int> links(n, 0);
  std::vector<VertexId> queue(seed.begin(), seed.end());
  for (VertexId v : seed) in[v] = 1;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (const Incidence& inc : g.incident(queue[i])) {
      const VertexId w = inc.neighbor;
      if (in[w]) continue;
      if (++links[w] >= DegreesOfFreedom(g.type(w))) {
        in[w] = 1;
        queue.push_back(w);
      }
    }
  }
  std::vector<VertexId> out;
  for (VertexId v = 0; v < n; ++v) {
    if (in[v]) out.push_back(v);
  }
  return out;
}

std::vector<VertexId> CorePlus(const TypedGraph& g) {
  return Accrete(g, Core25(g));
}

CoreResult CoreStats(const TypedGraph& g, bool with_trace) {
  CoreResult r;
  r.core = Peel(g, with_trace ? &r.peel_trace : nullptr);
  r.core_plus = Accrete(g, r.core);
  for (VertexId v : r.core) {
    if (g.type(v) == VertexType::kSlider) {
      ++r.n1_core;
    } else {
      ++r.n2_core;
    }
  }
  r.m_core = InducedEdgeCount(g, r.core);
  r.n_core_plus = static_cast<int>(r.core_plus.size());
  return r;
}

}  // namespace sliders
