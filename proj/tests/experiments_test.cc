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

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <string>

#include "sliders/asymptotics.h"
#include "sliders/cores.h"
#include "sliders/experiments.h"
#include "sliders/random_graph.h"
#include "sliders/rigidity.h"

namespace sliders {
namespace {

std::string Csv(const std::vector<TrialRecord>& records) {
  std::ostringstream out;
  EmitCsv(records, out);
  return out.str();
}

SweepConfig SmallConfig() {
  SweepConfig cfg;
  cfg.q = 0.75;
  cfg.c_values = LinearGrid(2.0, 3.6, 3);
  cfg.n = 300;
  cfg.trials = 3;
  cfg.base_seed = 42;
  cfg.measures = kMeasureOrient | kMeasureCores | kMeasureRigid;
  return cfg;
}

TEST_CASE("measure list parsing") {
  CHECK(ParseMeasures("orient") == kMeasureOrient);
  CHECK(ParseMeasures("orient,cores,rigid") ==
        (kMeasureOrient | kMeasureCores | kMeasureRigid));
  CHECK(ParseMeasures("witness_scan") == kMeasureWitnessScan);
  CHECK(ParseMeasures("") == 0u);
  CHECK_THROWS_AS(ParseMeasures("orient,bogus"), std::invalid_argument);
}

TEST_CASE("linear grid") {
  CHECK(LinearGrid(1.0, 1.0, 1) == std::vector<double>{1.0});
  const std::vector<double> g = LinearGrid(1.0, 2.0, 5);
  REQUIRE(g.size() == 5);
  CHECK(g.front() == 1.0);
  CHECK(g.back() == 2.0);
  CHECK(g[2] == doctest::Approx(1.5));
  CHECK_THROWS(LinearGrid(2.0, 1.0, 3));
  CHECK_THROWS(LinearGrid(1.0, 2.0, 0));
}

TEST_CASE("invalid configs are rejected") {
  SweepConfig cfg = SmallConfig();
  cfg.trials = 0;
  CHECK_THROWS_AS(RunSweep(cfg), std::invalid_argument);
  cfg = SmallConfig();
  cfg.c_values.clear();
  CHECK_THROWS_AS(RunSweep(cfg), std::invalid_argument);
  cfg = SmallConfig();
  cfg.q = 1.5;
  CHECK_THROWS_AS(RunSweep(cfg), std::invalid_argument);
}

TEST_CASE("empty record list gives a header-only csv") {
  const std::string csv = Csv({});
  CHECK(csv == CsvHeader() + "\n");
  CHECK(std::count(csv.begin(), csv.end(), ',') == kCsvColumns - 1);
  CHECK(ParseCsv(csv).empty());
}

TEST_CASE("sweep records are ordered and seeded") {
  const SweepConfig cfg = SmallConfig();
  const std::vector<TrialRecord> recs = RunSweep(cfg);
  REQUIRE(recs.size() == 9);
  for (int i = 0; i < 3; ++i) {
    for (int t = 0; t < 3; ++t) {
      const TrialRecord& r = recs[i * 3 + t];
      CHECK(r.c == cfg.c_values[i]);
      CHECK(r.trial == t);
      CHECK(r.seed == TrialSeed(cfg, i, t));
      CHECK(r.n == cfg.n);
      CHECK(r.seed == 42u + i * 3 + t);
    }
  }
}

TEST_CASE("csv round trip and fixed width") {
  SweepConfig cfg = SmallConfig();
  cfg.measures = kMeasureOrient | kMeasureCores | kMeasureRigid |
                 kMeasureWitnessScan;
  std::vector<TrialRecord> recs = RunSweep(cfg);
  recs[0].notes = "a, b";  // commas are replaced on output
  const std::string csv = Csv(recs);
  std::istringstream lines(csv);
  std::string line;
  int rows = 0;
  while (std::getline(lines, line)) {
    CHECK(std::count(line.begin(), line.end(), ',') == kCsvColumns - 1);
    ++rows;
  }
  CHECK(rows == 10);

  std::vector<TrialRecord> back = ParseCsv(csv);
  REQUIRE(back.size() == recs.size());
  CHECK(back[0].notes == "a; b");
  recs[0].notes = "a; b";
  CHECK(back == recs);

  // Absent measures stay absent.
  cfg.measures = kMeasureOrient;
  const std::vector<TrialRecord> only_orient = RunSweep(cfg);
  const std::vector<TrialRecord> parsed = ParseCsv(Csv(only_orient));
  CHECK(parsed == only_orient);
  CHECK_FALSE(parsed[0].n1_core.has_value());
  CHECK_FALSE(parsed[0].largest_rigid_frac.has_value());
}

TEST_CASE("csv parse errors name the line") {
  const std::string bad = CsvHeader() + "\n1,2,3\n";
  try {
    ParseCsv(bad);
    FAIL("expected a parse error");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("line 2") != std::string::npos);
  }
}

TEST_CASE("identical configs give identical bytes") {
  SweepConfig cfg = SmallConfig();
  const std::string a = Csv(RunSweep(cfg));
  const std::string b = Csv(RunSweep(cfg));
  CHECK(a == b);
  cfg.threads = 4;
  CHECK(Csv(RunSweep(cfg)) == a);
  cfg.base_seed = 43;
  CHECK(Csv(RunSweep(cfg)) != a);
}

TEST_CASE("per-trial coherence between modules") {
  SweepConfig cfg;
  cfg.q = 0.75;
  cfg.c_values = LinearGrid(1.0, 5.0, 9);
  cfg.n = 400;
  cfg.trials = 3;
  cfg.base_seed = 7;
  cfg.measures = kMeasureOrient | kMeasureCores | kMeasureRigid;
  int non_orientable = 0;
  for (const TrialRecord& r : RunSweep(cfg)) {
    CAPTURE(r.c);
    CAPTURE(r.trial);
    CHECK(*r.gap >= 0);
    CHECK((*r.gap == 0) == *r.orientable);
    if (*r.n1_core + *r.n2_core == 0) CHECK(*r.orientable);
    CHECK(*r.n_core_plus >= *r.n1_core + *r.n2_core);
    CHECK(*r.largest_rigid_frac >= 0.0);
    CHECK(*r.largest_rigid_frac <= 1.0);
    CHECK(*r.largest_connected_rigid_frac <= *r.largest_rigid_frac);
    non_orientable += !*r.orientable;
  }
  CHECK(non_orientable > 0);
}

TEST_CASE("rigid component with a nonempty core lies in core plus") {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const TypedGraph g = SampleErdosRenyi({300, 4.5, 0.75, seed});
    const CoreResult cr = CoreStats(g);
    if (cr.core.empty()) continue;
    std::vector<char> in_core(g.num_vertices(), 0);
    std::vector<char> in_plus(g.num_vertices(), 0);
    for (VertexId v : cr.core) in_core[v] = 1;
    for (VertexId v : cr.core_plus) in_plus[v] = 1;
    const RigidDecomposition d = RigidComponents(g);
    for (const RigidComponent& comp : d.components) {
      const bool touches = std::any_of(comp.vertices.begin(),
                                       comp.vertices.end(),
                                       [&](VertexId v) { return in_core[v]; });
      if (!touches || comp.size() < 3) continue;
      for (VertexId v : comp.vertices) CHECK(in_plus[v]);
    }
  }
}

TEST_CASE("rigid measures skipped above the cap") {
  SweepConfig cfg = SmallConfig();
  cfg.rigid_n_cap = 100;
  cfg.trials = 1;
  for (const TrialRecord& r : RunSweep(cfg)) {
    CHECK_FALSE(r.largest_rigid_frac.has_value());
    CHECK(r.notes == "rigid skipped: n above cap 100");
  }
}

TEST_CASE("subcritical regime") {
  SweepConfig cfg;
  cfg.q = 0.5;
  cfg.c_values = {0.5};
  cfg.n = 1000;
  cfg.trials = 5;
  cfg.base_seed = 3;
  cfg.measures = kMeasureOrient | kMeasureCores | kMeasureRigid;
  for (const TrialRecord& r : RunSweep(cfg)) {
    CHECK(*r.n1_core == 0);
    CHECK(*r.n2_core == 0);
    CHECK(*r.orientable);
    CHECK(*r.largest_rigid_frac <= 10.0 / r.n);
  }
}

TEST_CASE("witness scan") {
  // K4 of sliders inside an otherwise empty graph.
  std::vector<Edge> edges;
  for (VertexId u = 0; u < 4; ++u) {
    for (VertexId v = u + 1; v < 4; ++v) edges.push_back({u + 10, v + 10});
  }
  const TypedGraph g(std::vector<VertexType>(50, VertexType::kSlider), edges);
  const auto probe = WitnessScan(g, 4);
  REQUIRE(probe.has_value());
  CHECK(probe->witness.size() == 4);
  CHECK(probe->witness.excess() > 0);
  CHECK(probe->reaches_cap);
  CHECK_FALSE(WitnessScan(g, 5)->reaches_cap);

  const TypedGraph tree(std::vector<VertexType>(5, VertexType::kSlider),
                        std::vector<Edge>{{0, 1}, {1, 2}, {2, 3}, {3, 4}});
  CHECK_FALSE(WitnessScan(tree, 1).has_value());
}

TEST_CASE("summary against predictions") {
  SweepConfig cfg;
  cfg.q = 1.0;
  cfg.c_values = {3.0, 3.9};
  cfg.n = 3000;
  cfg.trials = 4;
  cfg.base_seed = 5;
  cfg.measures = kMeasureOrient | kMeasureCores;
  const std::vector<SummaryRow> rows = Compare(RunSweep(cfg));
  REQUIRE(rows.size() == 2);
  CHECK(rows[0].c == 3.0);
  CHECK(rows[0].n == 3000);

  const MeasureSummary* below = rows[0].find("core_n2_frac");
  REQUIRE(below != nullptr);
  CHECK(below->count == 4);
  CHECK(*below->predicted == 0.0);
  CHECK(below->mean < 0.05);
  CHECK(rows[0].find("largest_rigid_frac") == nullptr);

  const MeasureSummary* above = rows[1].find("core_n2_frac");
  REQUIRE(above != nullptr);
  CHECK(*above->predicted ==
        doctest::Approx(PredictCoreFractions(1.0, 3.9).n2).epsilon(1e-12));
  CHECK(*above->deviation == doctest::Approx(
                                 std::abs(above->mean - *above->predicted)));
  CHECK(*above->deviation < 0.03);
  const MeasureSummary* gap = rows[1].find("gap_frac");
  REQUIRE(gap != nullptr);
  CHECK(*gap->predicted ==
        doctest::Approx(1 - OrientableFractionLimit(1.0, 3.9)));

  const std::string table = FormatSummaryTable(rows);
  CHECK(table.find("core_plus_frac") != std::string::npos);

  std::ostringstream plot;
  EmitPlotData(rows, plot);
  CHECK(plot.str().rfind("measure,c,empirical,stderr,predicted\n", 0) == 0);

  const std::string svg = RenderSvg(rows);
  CHECK(svg.rfind("<svg", 0) == 0);
  CHECK(svg.find("</svg>") != std::string::npos);
}

}  // namespace
}  // namespace sliders
