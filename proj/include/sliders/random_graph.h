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

#ifndef SLIDERS_RANDOM_GRAPH_H_
#define SLIDERS_RANDOM_GRAPH_H_

#include <cstdint>
#include <random>

#include "sliders/typed_graph.h"

namespace sliders {

// G(n, c/n) with independent vertex types: type 2 with probability q.
struct ErConfig {
  int n = 0;
  double c = 0.0;
  double q = 0.0;
  std::uint64_t seed = 0;
};

// Up to this many vertices every pair is drawn; above it the sampler skips
// geometrically between present pairs.
inline constexpr int kDensePairLimit = 20000;

// Throws std::invalid_argument when n < 0, c < 0 or q is outside [0, 1].
// c/n > 1 is clamped to 1 and a warning goes to std::clog.
//
// The generator is std::mt19937_64 seeded with `seed`; types are drawn first
// (vertex order), then edges. Uniform reals use the top 53 bits of each draw,
// so output depends only on the seed and the standard engine definition.
TypedGraph SampleErdosRenyi(const ErConfig& config);

// Uniform double in [0, 1) from the top 53 bits of one engine draw.
inline double UniformUnit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace sliders

#endif  // SLIDERS_RANDOM_GRAPH_H_
