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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <variant>

#include "sliders/orientation.h"
#include "support/brute_force.h"

namespace sliders {
namespace {

constexpr VertexType k1 = VertexType::kSlider;
constexpr VertexType k2 = VertexType::kFree;

TypedGraph Complete(int n, VertexType t) {
  std::vector<Edge> edges;
  for (VertexId u = 0; u < n; ++u) {
    for (VertexId v = u + 1; v < n; ++v) edges.push_back({u, v});
  }
  return TypedGraph(std::vector<VertexType>(n, t), edges);
}

// Recounts a witness straight from the graph.
bool WitnessIsDense(const TypedGraph& g, const DenseWitness& w) {
  int n1 = 0, n2 = 0;
  for (VertexId v : w.vertices) (g.type(v) == k1 ? n1 : n2)++;
  const int m = InducedEdgeCount(g, w.vertices);
  return m == w.num_edges && n1 == w.num_type1 && n2 == w.num_type2 &&
         m > n1 + 2 * n2;
}

TEST_CASE("small named graphs") {
  const TypedGraph tri1 = Complete(3, k1);
  auto out = FindOrientation(tri1);
  REQUIRE(std::holds_alternative<Orientation>(out));
  CHECK(VerifyOrientation(tri1, std::get<Orientation>(out)));

  const TypedGraph k4_1 = Complete(4, k1);
  out = FindOrientation(k4_1);
  REQUIRE(std::holds_alternative<DenseWitness>(out));
  const DenseWitness& w = std::get<DenseWitness>(out);
  CHECK(w.vertices == std::vector<VertexId>{0, 1, 2, 3});
  CHECK(w.num_edges == 6);
  CHECK(w.num_type1 == 4);

  CHECK(IsOrientable(Complete(4, k2)));
  CHECK(brute::OrientableBySearch(Complete(4, k2)));
}

TEST_CASE("maximum orientations on named graphs") {
  MaxOrientation mo = MaxOrientableEdges(Complete(3, k2));
  CHECK(mo.oriented_edges == 3);
  CHECK(mo.gap == 0);

  mo = MaxOrientableEdges(Complete(4, k1));
  CHECK(brute::MaxOrientable(Complete(4, k1)) == 4);
  CHECK(mo.oriented_edges == 4);
  CHECK(mo.gap == 2);
  CHECK(VerifyOrientation(Complete(4, k1), mo.orientation));
  CHECK(mo.orientation.num_oriented() == 4);

  mo = MaxOrientableEdges(TypedGraph());
  CHECK(mo.oriented_edges == 0);
}

TEST_CASE("verification") {
  const TypedGraph tri = Complete(3, k1);
  Orientation cycle(3);
  // Edges are (0,1), (0,2), (1,2): 0->1, 1->2, 2->0.
  cycle.set_head(0, 1);
  cycle.set_head(2, 2);
  cycle.set_head(1, 0);
  CHECK(VerifyOrientation(tri, cycle));

  const TypedGraph path({k1, k1, k1}, {{0, 1}, {1, 2}});
  Orientation both_in(2);
  both_in.set_head(0, 1);
  both_in.set_head(1, 1);
  CHECK_FALSE(VerifyOrientation(path, both_in));

  CHECK(VerifyOrientation(path, Orientation(2)));
  Orientation wrong_size(5);
  CHECK_FALSE(VerifyOrientation(path, wrong_size));
  Orientation not_endpoint(2);
  not_endpoint.set_head(0, 2);
  CHECK_FALSE(VerifyOrientation(path, not_endpoint));
}

TEST_CASE("exhaustive agreement with both oracles for n <= 5") {
  for (int n = 1; n <= 5; ++n) {
    for (std::uint64_t code = 0; code < brute::EnumerationSize(n); ++code) {
      const TypedGraph g = brute::Enumerated(n, code);
      const bool counting = brute::HasNoDenseSubset(g);
      REQUIRE(counting == brute::OrientableBySearch(g));
      const auto out = FindOrientation(g);
      REQUIRE(std::holds_alternative<Orientation>(out) == counting);
      if (counting) {
        REQUIRE(VerifyOrientation(g, std::get<Orientation>(out)));
        REQUIRE(std::get<Orientation>(out).num_oriented() == g.num_edges());
      } else {
        REQUIRE(WitnessIsDense(g, std::get<DenseWitness>(out)));
      }
    }
  }
}

TEST_CASE("maximum orientation equals brute force for m <= 12") {
  std::mt19937_64 rng(2024);
  int checked = 0;
  while (checked < 600) {
    const TypedGraph g = brute::RandomGraph(rng, 6 + checked % 3, 0.55, 0.4);
    if (g.num_edges() > 12) continue;
    const MaxOrientation mo = MaxOrientableEdges(g);
    REQUIRE(mo.oriented_edges == brute::MaxOrientable(g));
    REQUIRE(mo.gap == g.num_edges() - mo.oriented_edges);
    REQUIRE(VerifyOrientation(g, mo.orientation));
    REQUIRE(mo.orientation.num_oriented() == mo.oriented_edges);
    ++checked;
  }
}

TEST_CASE("monotone under edge removal") {
  std::mt19937_64 rng(8);
  for (int rep = 0; rep < 300; ++rep) {
    const TypedGraph g = brute::RandomGraph(rng, 9, 0.3, 0.5);
    if (!IsOrientable(g) || g.num_edges() == 0) continue;
    std::vector<EdgeId> keep;
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      if (rng() % 2) keep.push_back(e);
    }
    CHECK(IsOrientable(EdgeSubgraph(g, keep)));
  }
}

TEST_CASE("witness bounds the gap") {
  std::mt19937_64 rng(99);
  for (int rep = 0; rep < 300; ++rep) {
    const TypedGraph g = brute::RandomGraph(rng, 10, 0.45, 0.5);
    const auto out = FindOrientation(g);
    if (!std::holds_alternative<DenseWitness>(out)) continue;
    const DenseWitness& w = std::get<DenseWitness>(out);
    CHECK(WitnessIsDense(g, w));
    // Edges inside the witness beyond its in-capacity stay unoriented.
    CHECK(MaxOrientableEdges(g).gap >= w.excess());
  }
}

TEST_CASE("incremental engine keeps caps") {
  std::mt19937_64 rng(5);
  const TypedGraph g = brute::RandomGraph(rng, 40, 0.15, 0.5);
  IncrementalOrientation inc(g);
  int inserted = 0;
  for (EdgeId e = 0; e < g.num_edges(); ++e) inserted += inc.Insert(e);
  CHECK(VerifyOrientation(g, inc.orientation()));
  CHECK(inserted == MaxOrientableEdges(g).oriented_edges);
  for (VertexId v = 0; v < g.num_vertices(); ++v) {
    CHECK(inc.in_degree(v) <= DegreesOfFreedom(g.type(v)));
    CHECK(int(inc.in_edges(v).size()) == inc.in_degree(v));
  }
}

}  // namespace
}  // namespace sliders
