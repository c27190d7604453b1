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

#ifndef SLIDERS_PEBBLE_GAME_H_
#define SLIDERS_PEBBLE_GAME_H_

#include <array>
#include <cstdint>
#include <vector>

#include "sliders/typed_graph.h"

namespace sliders {

// The (2,3) pebble game for Laman sparsity. Each vertex starts with two
// pebbles; an accepted edge is directed away from the vertex whose pebble it
// consumes, so every vertex has pebbles + out-degree = 2. An edge uv is
// independent iff four pebbles can be collected on u and v.
class LamanPebbleGame {
 public:
  explicit LamanPebbleGame(int num_vertices);

  int num_vertices() const { return static_cast<int>(pebbles_.size()); }
  int pebbles(VertexId v) const { return pebbles_[v]; }
  int num_edges() const { return num_edges_; }

  // Collects pebbles on u and v; true when four are there. Pebble moves keep
  // the game state valid whatever the outcome.
  bool CanInsert(VertexId u, VertexId v);

  // Adds uv. Only valid right after CanInsert(u, v) returned true.
  void Insert(VertexId u, VertexId v);

  bool TryInsert(VertexId u, VertexId v);

  // Vertex set (sorted) of the maximal Laman-tight set, m' = 2n' - 3, that
  // contains the accepted edge uv.
  std::vector<VertexId> Component(VertexId u, VertexId v);

 private:
  // Moves one free pebble onto `target` along a directed path, never taking
  // the pebbles of `target` or `keep`.
  bool Gather(VertexId target, VertexId keep);

  std::vector<std::uint8_t> pebbles_;
  std::vector<std::array<VertexId, 2>> out_;
  std::vector<std::uint8_t> out_count_;
  int num_edges_ = 0;
  std::vector<std::uint32_t> stamp_;
  std::uint32_t epoch_ = 0;
  std::vector<VertexId> parent_;
  std::vector<VertexId> queue_;
};

}  // namespace sliders

#endif  // SLIDERS_PEBBLE_GAME_H_
