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

#ifndef SLIDERS_CORES_H_
#define SLIDERS_CORES_H_

#include <vector>

#include "sliders/typed_graph.h"

namespace sliders {

struct PeelStep {
  VertexId vertex;
  VertexType type;
  int degree;  // live degree when removed
};

struct CoreResult {
  std::vector<VertexId> core;       // sorted
  std::vector<VertexId> core_plus;  // sorted, superset of core
  int n1_core = 0;
  int n2_core = 0;
  int m_core = 0;
  int n_core_plus = 0;
  std::vector<PeelStep> peel_trace;  // only filled on request
};

// Largest induced subgraph in which type 1 vertices have degree >= 2 and
// type 2 vertices degree >= 3. Found by queue peeling in O(n + m).
std::vector<VertexId> Core25(const TypedGraph& g);

// Grows the 2.5-core by repeatedly adding type 1 vertices with at least one
// edge into the current set and type 2 vertices with at least two. Empty when
// the 2.5-core is empty.
std::vector<VertexId> CorePlus(const TypedGraph& g);

// Same, starting from a given seed set (need not be a core).
std::vector<VertexId> Accrete(const TypedGraph& g,
                              const std::vector<VertexId>& seed);

CoreResult CoreStats(const TypedGraph& g, bool with_trace = false);

}  // namespace sliders

#endif  // SLIDERS_CORES_H_
