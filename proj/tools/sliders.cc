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

// Command-line front end: graph generation, deciders, thresholds, sweeps.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include "CLI11.hpp"
#include "sliders/asymptotics.h"
#include "sliders/cores.h"
#include "sliders/experiments.h"
#include "sliders/graph_io.h"
#include "sliders/orientation.h"
#include "sliders/random_graph.h"
#include "sliders/rigidity.h"

namespace {

using namespace sliders;

void PrintVertexList(const std::vector<VertexId>& vs) {
  for (std::size_t i = 0; i < vs.size(); ++i) {
    std::cout << (i ? " " : "") << vs[i];
  }
  std::cout << '\n';
}

int RunOrient(const std::string& file) {
  const TypedGraph g = ReadGraphFile(file);
  const OrientationOutcome out = FindOrientation(g);
  if (const auto* o = std::get_if<Orientation>(&out)) {
    std::cout << "ORIENTABLE\n";
    for (EdgeId e = 0; e < g.num_edges(); ++e) {
      std::cout << g.edge(e).u << ' ' << g.edge(e).v << " -> " << o->head(e)
                << '\n';
    }
    return 0;
  }
  const auto& w = std::get<DenseWitness>(out);
  std::cout << "WITNESS " << w.size() << ' ' << w.num_type1 << ' '
            << w.num_type2 << ' ' << w.num_edges << '\n';
  PrintVertexList(w.vertices);
  return 0;
}

int RunCores(const std::string& file, bool trace) {
  const TypedGraph g = ReadGraphFile(file);
  const CoreResult r = CoreStats(g, trace);
  std::cout << "n1_core " << r.n1_core << '\n'
            << "n2_core " << r.n2_core << '\n'
            << "m_core " << r.m_core << '\n'
            << "n_core_plus " << r.n_core_plus << '\n';
  if (trace) {
    std::cout << "trace (vertex type degree)\n";
    for (const PeelStep& s : r.peel_trace) {
      std::cout << s.vertex << ' ' << static_cast<int>(s.type) << ' '
                << s.degree << '\n';
    }
  }
  return 0;
}

int RunRigid(const std::string& file) {
  const TypedGraph g = ReadGraphFile(file);
  const RigidDecomposition d = RigidComponents(g);
  std::cout << "components " << d.components.size() + d.isolated.size()
            << '\n';
  for (const RigidComponent& c : d.components) {
    std::cout << "size " << c.size() << " n1 " << c.n1 << " n2 " << c.n2
              << " m " << c.edges.size() << " connected "
              << (c.connected ? "yes" : "no") << " :";
    for (VertexId v : c.vertices) std::cout << ' ' << v;
    std::cout << '\n';
  }
  for (VertexId v : d.isolated) {
    const bool slider = g.type(v) == VertexType::kSlider;
    std::cout << "size 1 n1 " << (slider ? 1 : 0) << " n2 " << (slider ? 0 : 1)
              << " m 0 connected yes : " << v << '\n';
  }
  const int n = g.num_vertices();
  std::cout << "R_n " << d.largest << " R_n/n "
            << (n ? double(d.largest) / n : 0.0) << '\n';
  std::cout << "R_n^C " << d.largest_connected << " R_n^C/n "
            << (n ? double(d.largest_connected) / n : 0.0) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rigidity with sliders on typed random graphs"};
  app.require_subcommand(1);

  ErConfig gen_cfg;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen", "Sample a typed Erdos-Renyi graph");
  gen->add_option("--n", gen_cfg.n, "Number of vertices")->required();
  gen->add_option("--c", gen_cfg.c, "Mean degree")->required();
  gen->add_option("--q", gen_cfg.q, "Probability of a free vertex")->required();
  gen->add_option("--seed", gen_cfg.seed, "RNG seed")->required();
  gen->add_option("-o,--out", gen_out, "Output graph file")->required();

  std::string graph_file;
  auto* orient = app.add_subcommand("orient", "Find a 1.5-orientation");
  orient->add_option("file", graph_file, "Graph file")->required();

  bool trace = false;
  auto* cores = app.add_subcommand("cores", "2.5-core and 2.5+1.5-core");
  cores->add_option("file", graph_file, "Graph file")->required();
  cores->add_flag("--trace", trace, "Print the peeling order");

  auto* rigid =
      app.add_subcommand("rigid-components", "Rigid component decomposition");
  rigid->add_option("file", graph_file, "Graph file")->required();

  double th_q = 0.0;
  std::optional<double> th_c;
  bool json = false;
  auto* thresholds =
      app.add_subcommand("thresholds", "Threshold values and limits");
  thresholds->add_option("--q", th_q, "Probability of a free vertex")
      ->required();
  thresholds->add_option("--c", th_c, "Mean degree");
  thresholds->add_flag("--json", json, "Single-line JSON output");

  SweepConfig sweep_cfg;
  double c_min = 0.0, c_max = 0.0;
  int steps = 1;
  std::string csv_out, svg_out, plot_out, measures = "orient,cores";
  auto* sweep = app.add_subcommand("sweep", "Monte Carlo sweep over c");
  sweep->add_option("--q", sweep_cfg.q, "Probability of a free vertex")
      ->required();
  sweep->add_option("--c-min", c_min, "Smallest c")->required();
  sweep->add_option("--c-max", c_max, "Largest c")->required();
  sweep->add_option("--steps", steps, "Number of c values")->required();
  sweep->add_option("--n", sweep_cfg.n, "Number of vertices")->required();
  sweep->add_option("--trials", sweep_cfg.trials, "Trials per c")->required();
  sweep->add_option("--seed", sweep_cfg.base_seed, "Base seed")->required();
  sweep->add_option("--out", csv_out, "CSV output")->required();
  sweep->add_option("--measures", measures,
                    "Comma list of orient, cores, rigid, witness_scan");
  sweep->add_option("--svg", svg_out, "SVG chart output");
  sweep->add_option("--plot-data", plot_out, "Plot data CSV output");
  sweep->add_option("--rigid-n-cap", sweep_cfg.rigid_n_cap,
                    "Skip rigid decomposition above this n");
  sweep->add_option("--threads", sweep_cfg.threads, "Worker threads");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) {
      WriteGraphFile(gen_out, SampleErdosRenyi(gen_cfg));
      return 0;
    }
    if (*orient) return RunOrient(graph_file);
    if (*cores) return RunCores(graph_file, trace);
    if (*rigid) return RunRigid(graph_file);
    if (*thresholds) {
      const ThresholdReport r = MakeThresholdReport(th_q, th_c);
      if (json) {
        std::cout << FormatReportJson(r) << '\n';
      } else {
        std::cout << FormatReportText(r);
      }
      return 0;
    }
    if (*sweep) {
      sweep_cfg.c_values = LinearGrid(c_min, c_max, steps);
      sweep_cfg.measures = ParseMeasures(measures);
      const auto records = RunSweep(sweep_cfg);
      WriteCsvFile(records, csv_out);
      const auto summary = Compare(records);
      std::cout << FormatSummaryTable(summary);
      if (!svg_out.empty()) WriteSvgFile(summary, svg_out);
      if (!plot_out.empty()) WritePlotDataFile(summary, plot_out);
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
