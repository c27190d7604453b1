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

#include "sliders/random_graph.h"

#include <cmath>
#include <iostream>
#include <stdexcept>
#include <utility>
#include <vector>

namespace sliders {

TypedGraph SampleErdosRenyi(const ErConfig& config) {
  if (config.n < 0) throw std::invalid_argument("n must be nonnegative");
  if (!(config.c >= 0.0)) throw std::invalid_argument("c must be >= 0");
  if (!(config.q >= 0.0 && config.q <= 1.0)) {
    throw std::invalid_argument("q must lie in [0, 1]");
  }
  const int n = config.n;
  std::mt19937_64 rng(config.seed);

  std::vector<VertexType> types(n);
  for (auto& t : types) {
    t = UniformUnit(rng) < config.q ? VertexType::kFree : VertexType::kSlider;
  }
  if (n == 0) return TypedGraph(std::move(types), {});

  double p = config.c / n;
  if (p > 1.0) {
    std::clog << "warning: c/n = " << p << " > 1, clamping edge probability "
              << "to 1\n";
    p = 1.0;
  }

  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(0.5 * p * n * (n - 1) * 1.05) + 16);
  if (p <= 0.0) {
    // no edges
  } else if (n <= kDensePairLimit || p >= 1.0) {
    for (VertexId u = 0; u < n; ++u) {
      for (VertexId v = u + 1; v < n; ++v) {
        if (UniformUnit(rng) < p) edges.push_back({u, v});
      }
    }
  } else {
    // Batagelj-Brandes skipping over the pairs (w, v), w < v, in row order.
    const double log_q = std::log1p(-p);
    std::int64_t v = 1;
    std::int64_t w = -1;
    while (v < n) {
      const double r = UniformUnit(rng);
      w += 1 + static_cast<std::int64_t>(std::floor(std::log1p(-r) / log_q));
      while (w >= v && v < n) {
        w -= v;
        ++v;
      }
      if (v < n) {
        edges.push_back({static_cast<VertexId>(w), static_cast<VertexId>(v)});
      }
    }
  }
  return TypedGraph(std::move(types), std::move(edges));
}

}  // namespace sliders
