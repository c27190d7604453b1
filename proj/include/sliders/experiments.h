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

// Monte Carlo sweeps over the mean degree c and their comparison with the
// large-n predictions.

#ifndef SLIDERS_EXPERIMENTS_H_
#define SLIDERS_EXPERIMENTS_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sliders/orientation.h"
#include "sliders/typed_graph.h"

namespace sliders {

enum Measure : unsigned {
  kMeasureOrient = 1u << 0,
  kMeasureCores = 1u << 1,
  kMeasureRigid = 1u << 2,
  kMeasureWitnessScan = 1u << 3,
};

// Parses a comma-separated list of orient, cores, rigid, witness_scan.
unsigned ParseMeasures(std::string_view list);

struct SweepConfig {
  double q = 0.0;
  std::vector<double> c_values;
  int n = 0;
  int trials = 1;
  std::uint64_t base_seed = 0;
  unsigned measures = kMeasureOrient | kMeasureCores;
  int rigid_n_cap = 5000;
  int threads = 1;
};

// c_min, c_min + h, ..., c_max with steps points (steps = 1 gives c_min).
std::vector<double> LinearGrid(double c_min, double c_max, int steps);

struct TrialRecord {
  double q = 0.0;
  double c = 0.0;
  int n = 0;
  int trial = 0;
  std::uint64_t seed = 0;
  std::int64_t m = 0;
  std::optional<bool> orientable;
  std::optional<std::int64_t> gap;
  std::optional<int> n1_core;
  std::optional<int> n2_core;
  std::optional<std::int64_t> m_core;
  std::optional<int> n_core_plus;
  std::optional<double> largest_rigid_frac;
  std::optional<double> largest_connected_rigid_frac;
  std::optional<int> witness_size;
  std::string notes;  // never contains a comma

  bool operator==(const TrialRecord&) const = default;
};

// Seed of trial t at c-index i: base_seed + i * trials + t.
std::uint64_t TrialSeed(const SweepConfig& cfg, int c_index, int trial);

// Measures one graph; the sampling parameters are copied into the record.
TrialRecord MeasureTrial(const TypedGraph& g, const SweepConfig& cfg, double c,
                         int trial, std::uint64_t seed);

// One record per (c, trial), ordered by c index then trial. Throws
// std::invalid_argument on an invalid config.
std::vector<TrialRecord> RunSweep(const SweepConfig& cfg);

struct WitnessProbe {
  DenseWitness witness;
  bool reaches_cap = false;  // witness size >= size_cap
};

// Dense witness from a failed orientation search, if any.
std::optional<WitnessProbe> WitnessScan(const TypedGraph& g, int size_cap);

struct MeasureSummary {
  std::string name;
  int count = 0;
  double mean = 0.0;
  double stderr_ = 0.0;
  std::optional<double> predicted;
  std::optional<double> deviation;  // |mean - predicted|
};

struct SummaryRow {
  double q = 0.0;
  double c = 0.0;
  int n = 0;
  std::vector<MeasureSummary> measures;

  const MeasureSummary* find(std::string_view name) const;
};

// Per c: mean and standard error of each empirical fraction, next to its
// predicted limit.
std::vector<SummaryRow> Compare(const std::vector<TrialRecord>& records);

std::string FormatSummaryTable(const std::vector<SummaryRow>& rows);

inline constexpr int kCsvColumns = 16;
std::string CsvHeader();
void EmitCsv(const std::vector<TrialRecord>& records, std::ostream& out);
void WriteCsvFile(const std::vector<TrialRecord>& records,
                  const std::filesystem::path& path);
// Throws std::invalid_argument naming the offending line.
std::vector<TrialRecord> ParseCsv(std::string_view text);

// Rows of measure,c,empirical,stderr,predicted.
void EmitPlotData(const std::vector<SummaryRow>& rows, std::ostream& out);
void WritePlotDataFile(const std::vector<SummaryRow>& rows,
                       const std::filesystem::path& path);

// Line chart of every fraction against c; empirical solid with error bars,
// prediction dashed.
std::string RenderSvg(const std::vector<SummaryRow>& rows);
void WriteSvgFile(const std::vector<SummaryRow>& rows,
                  const std::filesystem::path& path);

}  // namespace sliders

#endif  // SLIDERS_EXPERIMENTS_H_
