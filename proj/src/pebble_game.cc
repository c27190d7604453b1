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

#include "sliders/pebble_game.h"

#include <algorithm>
#include <cassert>

namespace sliders {

LamanPebbleGame::LamanPebbleGame(int num_vertices)
    : pebbles_(num_vertices, 2),
      out_(num_vertices, {-1, -1}),
      out_count_(num_vertices, 0),
      stamp_(num_vertices, 0),
      parent_(num_vertices, -1) {}

bool LamanPebbleGame::Gather(VertexId target, VertexId keep) {
  if (++epoch_ == 0) {
    std::fill(stamp_.begin(), stamp_.end(), 0);
    epoch_ = 1;
  }
  queue_.clear();
  queue_.push_back(target);
  stamp_[target] = epoch_;
  parent_[target] = -1;
  for (std::size_t i = 0; i < queue_.size(); ++i) {
    const VertexId x = queue_[i];
    for (int k = 0; k < out_count_[x]; ++k) {
      const VertexId y = out_[x][k];
      if (stamp_[y] == epoch_) continue;
      stamp_[y] = epoch_;
      parent_[y] = x;
      if (y == keep || pebbles_[y] == 0) {
        queue_.push_back(y);
        continue;
      }
      // y pays a pebble and every edge on the path target -> ... -> y flips.
      --pebbles_[y];
      for (VertexId cur = y; cur != target; cur = parent_[cur]) {
        const VertexId prev = parent_[cur];
        auto& prev_out = out_[prev];
        const int last = --out_count_[prev];
        if (prev_out[0] == cur) prev_out[0] = prev_out[last];
        prev_out[last] = -1;
        out_[cur][out_count_[cur]++] = prev;
      }
      ++pebbles_[target];
      return true;
    }
  }
  return false;
}

bool LamanPebbleGame::CanInsert(VertexId u, VertexId v) {
  assert(u != v);
  while (pebbles_[u] < 2) {
    if (!Gather(u, v)) return false;
  }
  while (pebbles_[v] < 2) {
    if (!Gather(v, u)) return false;
  }
  return true;
}

void LamanPebbleGame::Insert(VertexId u, VertexId v) {
  assert(pebbles_[u] + pebbles_[v] == 4);
  out_[u][out_count_[u]++] = v;
  --pebbles_[u];
  ++num_edges_;
}

bool LamanPebbleGame::TryInsert(VertexId u, VertexId v) {
  if (!CanInsert(u, v)) return false;
  Insert(u, v);
  return true;
}

std::vector<VertexId> LamanPebbleGame::Component(VertexId u, VertexId v) {
  while (pebbles_[u] < 2 && Gather(u, v)) {
  }
  while (pebbles_[v] < 2 && Gather(v, u)) {
  }
  assert(pebbles_[u] + pebbles_[v] == 3);

  const int n = num_vertices();
  // Reverse adjacency of the current directed graph.
  std::vector<int> in_offsets(n + 1, 0);
  for (VertexId x = 0; x < n; ++x) {
    for (int k = 0; k < out_count_[x]; ++k) ++in_offsets[out_[x][k] + 1];
  }
  for (VertexId x = 0; x < n; ++x) in_offsets[x + 1] += in_offsets[x];
  std::vector<VertexId> in_list(in_offsets[n]);
  std::vector<int> fill(in_offsets.begin(), in_offsets.end() - 1);
  for (VertexId x = 0; x < n; ++x) {
    for (int k = 0; k < out_count_[x]; ++k) in_list[fill[out_[x][k]]++] = x;
  }

  // Vertices that can still reach a free pebble are outside the component.
  std::vector<char> reaches_free(n, 0);
  std::vector<VertexId> stack;
  for (VertexId x = 0; x < n; ++x) {
    if (x != u && x != v && pebbles_[x] > 0) {
      reaches_free[x] = 1;
      stack.push_back(x);
    }
  }
  while (!stack.empty()) {
    const VertexId x = stack.back();
    stack.pop_back();
    for (int i = in_offsets[x]; i < in_offsets[x + 1]; ++i) {
      const VertexId w = in_list[i];
      if (!reaches_free[w] && w != u && w != v) {
        reaches_free[w] = 1;
        stack.push_back(w);
      }
    }
  }
  std::vector<VertexId> component;
  for (VertexId x = 0; x < n; ++x) {
    if (!reaches_free[x]) component.push_back(x);
  }
  return component;
}

}  // namespace sliders
