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

#include "sliders/experiments.h"

#include <algorithm>
#include <atomic>
#include <charconv>
#include <cmath>
#include <exception>
#include <fstream>
#include <iomanip>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>
#include <thread>

#include "sliders/asymptotics.h"
#include "sliders/cores.h"
#include "sliders/number_format.h"
#include "sliders/random_graph.h"
#include "sliders/rigidity.h"

namespace sliders {
namespace {

constexpr const char* kColumns[kCsvColumns] = {
    "q",        "c",          "n",
    "trial",    "seed",       "m",
    "orientable", "gap",      "n1_core",
    "n2_core",  "m_core",     "n_core_plus",
    "largest_rigid_frac", "largest_connected_rigid_frac", "witness_size",
    "notes"};

void AppendNote(std::string& notes, std::string_view note) {
  if (!notes.empty()) notes += "; ";
  notes += note;
}

template <typename T>
std::string Field(const std::optional<T>& v) {
  if (!v) return "";
  if constexpr (std::is_same_v<T, double>) {
    return FormatDouble(*v);
  } else if constexpr (std::is_same_v<T, bool>) {
    return *v ? "1" : "0";
  } else {
    return std::to_string(*v);
  }
}

template <typename T>
T ParseInteger(std::string_view s) {
  T x{};
  const auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) {
    throw std::invalid_argument("not an integer: '" + std::string(s) + "'");
  }
  return x;
}

template <typename T>
std::optional<T> OptionalField(std::string_view s) {
  if (s.empty()) return std::nullopt;
  if constexpr (std::is_same_v<T, double>) {
    return ParseDouble(s);
  } else if constexpr (std::is_same_v<T, bool>) {
    if (s == "1") return true;
    if (s == "0") return false;
    throw std::invalid_argument("not a 0/1 flag: '" + std::string(s) + "'");
  } else {
    return ParseInteger<T>(s);
  }
}

void ValidateConfig(const SweepConfig& cfg) {
  if (!(cfg.q >= 0.0 && cfg.q <= 1.0)) {
    throw std::invalid_argument("q must lie in [0, 1]");
  }
  if (cfg.c_values.empty()) throw std::invalid_argument("no c values");
  for (double c : cfg.c_values) {
    if (!(c >= 0.0)) throw std::invalid_argument("c values must be >= 0");
  }
  if (cfg.n < 0) throw std::invalid_argument("n must be >= 0");
  if (cfg.trials < 1) throw std::invalid_argument("trials must be >= 1");
  if (cfg.threads < 1) throw std::invalid_argument("threads must be >= 1");
}

struct Accumulator {
  int count = 0;
  double sum = 0.0;
  double sum_sq = 0.0;
  void Add(double x) {
    ++count;
    sum += x;
    sum_sq += x * x;
  }
};

}  // namespace

unsigned ParseMeasures(std::string_view list) {
  unsigned out = 0;
  while (!list.empty()) {
    const std::size_t comma = list.find(',');
    const std::string_view item = list.substr(0, comma);
    if (item == "orient") {
      out |= kMeasureOrient;
    } else if (item == "cores") {
      out |= kMeasureCores;
    } else if (item == "rigid") {
      out |= kMeasureRigid;
    } else if (item == "witness_scan") {
      out |= kMeasureWitnessScan;
    } else {
      throw std::invalid_argument("unknown measure '" + std::string(item) +
                                  "'");
    }
    if (comma == std::string_view::npos) break;
    list.remove_prefix(comma + 1);
  }
  return out;
}

std::vector<double> LinearGrid(double c_min, double c_max, int steps) {
  if (steps < 1) throw std::invalid_argument("steps must be >= 1");
  if (c_max < c_min) throw std::invalid_argument("c_max < c_min");
  std::vector<double> out;
  for (int i = 0; i < steps; ++i) {
    out.push_back(steps == 1 ? c_min
                             : c_min + (c_max - c_min) * i / (steps - 1));
  }
  return out;
}

std::uint64_t TrialSeed(const SweepConfig& cfg, int c_index, int trial) {
  return cfg.base_seed +
         static_cast<std::uint64_t>(c_index) * cfg.trials + trial;
}

TrialRecord MeasureTrial(const TypedGraph& g, const SweepConfig& cfg, double c,
                         int trial, std::uint64_t seed) {
  TrialRecord r;
  r.q = cfg.q;
  r.c = c;
  r.n = g.num_vertices();
  r.trial = trial;
  r.seed = seed;
  r.m = g.num_edges();
  if (cfg.measures & kMeasureOrient) {
    const MaxOrientation mo = MaxOrientableEdges(g);
    r.gap = mo.gap;
    r.orientable = mo.gap == 0;
  }
  if (cfg.measures & kMeasureCores) {
    const CoreResult cr = CoreStats(g);
    r.n1_core = cr.n1_core;
    r.n2_core = cr.n2_core;
    r.m_core = cr.m_core;
    r.n_core_plus = cr.n_core_plus;
  }
  if (cfg.measures & kMeasureRigid) {
    if (r.n > cfg.rigid_n_cap) {
      AppendNote(r.notes, "rigid skipped: n above cap " +
                              std::to_string(cfg.rigid_n_cap));
    } else if (r.n > 0) {
      const RigidDecomposition d = RigidComponents(g);
      r.largest_rigid_frac = static_cast<double>(d.largest) / r.n;
      r.largest_connected_rigid_frac =
          static_cast<double>(d.largest_connected) / r.n;
    }
  }
  if (cfg.measures & kMeasureWitnessScan) {
    if (auto probe = WitnessScan(g, 0)) {
      r.witness_size = probe->witness.size();
    } else {
      AppendNote(r.notes, "no witness");
    }
  }
  return r;
}

std::vector<TrialRecord> RunSweep(const SweepConfig& cfg) {
  ValidateConfig(cfg);
  const int num_c = static_cast<int>(cfg.c_values.size());
  const int total = num_c * cfg.trials;
  std::vector<TrialRecord> records(total);
  std::atomic<int> next{0};
  std::exception_ptr failure;
  std::mutex failure_mu;

  auto worker = [&] {
    for (int idx = next++; idx < total; idx = next++) {
      try {
        const int ci = idx / cfg.trials;
        const int t = idx % cfg.trials;
        const double c = cfg.c_values[ci];
        const std::uint64_t seed = TrialSeed(cfg, ci, t);
        const TypedGraph g = SampleErdosRenyi({cfg.n, c, cfg.q, seed});
        records[idx] = MeasureTrial(g, cfg, c, t, seed);
      } catch (...) {
        std::lock_guard<std::mutex> lock(failure_mu);
        if (!failure) failure = std::current_exception();
        next = total;
      }
    }
  };

  const int threads = std::min(cfg.threads, total);
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }
  if (failure) std::rethrow_exception(failure);
  return records;
}

std::optional<WitnessProbe> WitnessScan(const TypedGraph& g, int size_cap) {
  OrientationOutcome outcome = FindOrientation(g);
  if (auto* w = std::get_if<DenseWitness>(&outcome)) {
    WitnessProbe probe;
    probe.reaches_cap = w->size() >= size_cap;
    probe.witness = std::move(*w);
    return probe;
  }
  return std::nullopt;
}

const MeasureSummary* SummaryRow::find(std::string_view name) const {
  for (const MeasureSummary& m : measures) {
    if (m.name == name) return &m;
  }
  return nullptr;
}

std::vector<SummaryRow> Compare(const std::vector<TrialRecord>& records) {
  // Group by c, keeping first-appearance order; measure order is fixed.
  static const std::vector<std::string> kOrder = {
      "orientable_rate",  "gap_frac",          "core_n1_frac",
      "core_n2_frac",     "core_halfedge_frac", "core_plus_frac",
      "largest_rigid_frac", "largest_connected_rigid_frac"};
  std::vector<double> cs;
  std::vector<std::map<std::string, Accumulator>> acc;
  std::vector<const TrialRecord*> first;
  for (const TrialRecord& r : records) {
    auto it = std::find(cs.begin(), cs.end(), r.c);
    std::size_t i = it - cs.begin();
    if (it == cs.end()) {
      cs.push_back(r.c);
      acc.emplace_back();
      first.push_back(&r);
    }
    auto& a = acc[i];
    const double n = r.n > 0 ? r.n : 1;
    if (r.orientable) a["orientable_rate"].Add(*r.orientable ? 1.0 : 0.0);
    if (r.gap) a["gap_frac"].Add(r.m > 0 ? double(*r.gap) / r.m : 0.0);
    if (r.n1_core) a["core_n1_frac"].Add(*r.n1_core / n);
    if (r.n2_core) a["core_n2_frac"].Add(*r.n2_core / n);
    if (r.m_core) a["core_halfedge_frac"].Add(2.0 * *r.m_core / n);
    if (r.n_core_plus) a["core_plus_frac"].Add(*r.n_core_plus / n);
    if (r.largest_rigid_frac) {
      a["largest_rigid_frac"].Add(*r.largest_rigid_frac);
    }
    if (r.largest_connected_rigid_frac) {
      a["largest_connected_rigid_frac"].Add(*r.largest_connected_rigid_frac);
    }
  }

  std::vector<SummaryRow> rows;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    SummaryRow row;
    row.q = first[i]->q;
    row.c = cs[i];
    row.n = first[i]->n;
    const CoreFractions core = PredictCoreFractions(row.q, row.c);
    std::map<std::string, double> predicted = {
        {"core_n1_frac", core.n1},
        {"core_n2_frac", core.n2},
        {"core_halfedge_frac", core.halfedges},
        {"core_plus_frac", CorePlusFraction(row.q, row.c)},
    };
    if (row.c > 0.0) {
      predicted["gap_frac"] = 1.0 - OrientableFractionLimit(row.q, row.c);
    }
    for (const std::string& name : kOrder) {
      auto it = acc[i].find(name);
      if (it == acc[i].end()) continue;
      const Accumulator& a = it->second;
      MeasureSummary s;
      s.name = name;
      s.count = a.count;
      s.mean = a.sum / a.count;
      if (a.count > 1) {
        const double var =
            std::max(0.0, (a.sum_sq - a.count * s.mean * s.mean) /
                              (a.count - 1));
        s.stderr_ = std::sqrt(var / a.count);
      }
      if (auto p = predicted.find(name); p != predicted.end()) {
        s.predicted = p->second;
        s.deviation = std::abs(s.mean - p->second);
      }
      row.measures.push_back(std::move(s));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string FormatSummaryTable(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(10) << "c" << std::setw(30) << "measure"
      << std::setw(26) << "empirical" << std::setw(12) << "predicted"
      << "deviation\n";
  out << std::fixed << std::setprecision(5);
  for (const SummaryRow& row : rows) {
    for (const MeasureSummary& s : row.measures) {
      std::ostringstream emp;
      emp << std::fixed << std::setprecision(5) << s.mean << " +- "
          << s.stderr_;
      out << std::setw(10) << row.c << std::setw(30) << s.name << std::setw(26)
          << emp.str();
      if (s.predicted) {
        out << std::setw(12) << *s.predicted << *s.deviation;
      } else {
        out << std::setw(12) << "-" << "-";
      }
      out << '\n';
    }
  }
  return out.str();
}

std::string CsvHeader() {
  std::string h;
  for (int i = 0; i < kCsvColumns; ++i) {
    if (i) h += ',';
    h += kColumns[i];
  }
  return h;
}

void EmitCsv(const std::vector<TrialRecord>& records, std::ostream& out) {
  out << CsvHeader() << '\n';
  for (const TrialRecord& r : records) {
    std::string notes = r.notes;
    std::replace(notes.begin(), notes.end(), ',', ';');
    std::replace(notes.begin(), notes.end(), '\n', ' ');
    out << FormatDouble(r.q) << ',' << FormatDouble(r.c) << ',' << r.n << ','
        << r.trial << ',' << r.seed << ',' << r.m << ',' << Field(r.orientable)
        << ',' << Field(r.gap) << ',' << Field(r.n1_core) << ','
        << Field(r.n2_core) << ',' << Field(r.m_core) << ','
        << Field(r.n_core_plus) << ',' << Field(r.largest_rigid_frac) << ','
        << Field(r.largest_connected_rigid_frac) << ','
        << Field(r.witness_size) << ',' << notes << '\n';
  }
}

void WriteCsvFile(const std::vector<TrialRecord>& records,
                  const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  EmitCsv(records, out);
  if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
}

std::vector<TrialRecord> ParseCsv(std::string_view text) {
  std::vector<TrialRecord> out;
  int line_no = 0;
  bool header_seen = false;
  while (!text.empty()) {
    const std::size_t eol = text.find('\n');
    std::string_view line = text.substr(0, eol);
    text.remove_prefix(eol == std::string_view::npos ? text.size() : eol + 1);
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (line.empty()) continue;
    if (!header_seen) {
      if (line != CsvHeader()) {
        throw std::invalid_argument("line 1: unexpected CSV header");
      }
      header_seen = true;
      continue;
    }
    std::vector<std::string_view> f;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = line.find(',', start);
      f.push_back(line.substr(start, comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    const std::string where = "line " + std::to_string(line_no) + ": ";
    if (f.size() != kCsvColumns) {
      throw std::invalid_argument(where + "expected " +
                                  std::to_string(kCsvColumns) + " fields");
    }
    try {
      TrialRecord r;
      r.q = ParseDouble(f[0]);
      r.c = ParseDouble(f[1]);
      r.n = ParseInteger<int>(f[2]);
      r.trial = ParseInteger<int>(f[3]);
      r.seed = ParseInteger<std::uint64_t>(f[4]);
      r.m = ParseInteger<std::int64_t>(f[5]);
      r.orientable = OptionalField<bool>(f[6]);
      r.gap = OptionalField<std::int64_t>(f[7]);
      r.n1_core = OptionalField<int>(f[8]);
      r.n2_core = OptionalField<int>(f[9]);
      r.m_core = OptionalField<std::int64_t>(f[10]);
      r.n_core_plus = OptionalField<int>(f[11]);
      r.largest_rigid_frac = OptionalField<double>(f[12]);
      r.largest_connected_rigid_frac = OptionalField<double>(f[13]);
      r.witness_size = OptionalField<int>(f[14]);
      r.notes = std::string(f[15]);
      out.push_back(std::move(r));
    } catch (const std::invalid_argument& e) {
      throw std::invalid_argument(where + e.what());
    }
  }
  if (!header_seen) throw std::invalid_argument("missing CSV header");
  return out;
}

void EmitPlotData(const std::vector<SummaryRow>& rows, std::ostream& out) {
  out << "measure,c,empirical,stderr,predicted\n";
  for (const SummaryRow& row : rows) {
    for (const MeasureSummary& s : row.measures) {
      out << s.name << ',' << FormatDouble(row.c) << ',' << FormatDouble(s.mean)
          << ',' << FormatDouble(s.stderr_) << ','
          << (s.predicted ? FormatDouble(*s.predicted) : "") << '\n';
    }
  }
}

void WritePlotDataFile(const std::vector<SummaryRow>& rows,
                       const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  EmitPlotData(rows, out);
  if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
}

std::string RenderSvg(const std::vector<SummaryRow>& rows) {
  constexpr double kW = 760, kH = 480;
  constexpr double kLeft = 60, kRight = 230, kTop = 20, kBottom = 50;
  constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c",
                                      "#9467bd", "#ff7f0e", "#8c564b",
                                      "#e377c2", "#17becf"};
  double c_lo = 0.0, c_hi = 1.0, y_hi = 1.0;
  if (!rows.empty()) {
    c_lo = c_hi = rows.front().c;
    for (const SummaryRow& r : rows) {
      c_lo = std::min(c_lo, r.c);
      c_hi = std::max(c_hi, r.c);
      for (const MeasureSummary& s : r.measures) {
        y_hi = std::max(y_hi, s.mean + s.stderr_);
        if (s.predicted) y_hi = std::max(y_hi, *s.predicted);
      }
    }
    if (c_hi == c_lo) {
      c_lo -= 0.5;
      c_hi += 0.5;
    }
  }
  const double plot_w = kW - kLeft - kRight;
  const double plot_h = kH - kTop - kBottom;
  auto px = [&](double c) {
    return kLeft + (c - c_lo) / (c_hi - c_lo) * plot_w;
  };
  auto py = [&](double y) { return kTop + (1.0 - y / y_hi) * plot_h; };

  std::vector<std::string> names;
  for (const SummaryRow& r : rows) {
    for (const MeasureSummary& s : r.measures) {
      if (std::find(names.begin(), names.end(), s.name) == names.end()) {
        names.push_back(s.name);
      }
    }
  }

  std::ostringstream o;
  o << std::fixed << std::setprecision(2);
  o << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kW
    << "\" height=\"" << kH
    << "\" font-family=\"sans-serif\" font-size=\"11\">\n";
  o << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  o << "<rect x=\"" << kLeft << "\" y=\"" << kTop << "\" width=\"" << plot_w
    << "\" height=\"" << plot_h << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 5; ++i) {
    const double c = c_lo + (c_hi - c_lo) * i / 5;
    const double y = y_hi * i / 5;
    o << "<text x=\"" << px(c) << "\" y=\"" << kH - kBottom + 16
      << "\" text-anchor=\"middle\">"
      << FormatDouble(std::round(c * 1000) / 1000)
      << "</text>\n";
    o << "<text x=\"" << kLeft - 6 << "\" y=\"" << py(y) + 4
      << "\" text-anchor=\"end\">" << FormatDouble(std::round(y * 1000) / 1000)
      << "</text>\n";
  }
  o << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kH - 12
    << "\" text-anchor=\"middle\">c</text>\n";

  for (std::size_t k = 0; k < names.size(); ++k) {
    const char* color = kPalette[k % std::size(kPalette)];
    std::ostringstream emp, pred;
    emp << std::fixed << std::setprecision(2);
    pred << std::fixed << std::setprecision(2);
    for (const SummaryRow& r : rows) {
      const MeasureSummary* s = r.find(names[k]);
      if (!s) continue;
      emp << px(r.c) << ',' << py(s->mean) << ' ';
      o << "<line x1=\"" << px(r.c) << "\" x2=\"" << px(r.c) << "\" y1=\""
        << py(s->mean - s->stderr_) << "\" y2=\"" << py(s->mean + s->stderr_)
        << "\" stroke=\"" << color << "\"/>\n";
      o << "<circle cx=\"" << px(r.c) << "\" cy=\"" << py(s->mean)
        << "\" r=\"2.5\" fill=\"" << color << "\"/>\n";
      if (s->predicted) pred << px(r.c) << ',' << py(*s->predicted) << ' ';
    }
    o << "<polyline fill=\"none\" stroke=\"" << color << "\" points=\""
      << emp.str() << "\"/>\n";
    if (!pred.str().empty()) {
      o << "<polyline fill=\"none\" stroke=\"" << color
        << "\" stroke-dasharray=\"5,3\" points=\"" << pred.str() << "\"/>\n";
    }
    const double ly = kTop + 14 + 16 * k;
    o << "<line x1=\"" << kW - kRight + 12 << "\" x2=\"" << kW - kRight + 36
      << "\" y1=\"" << ly << "\" y2=\"" << ly << "\" stroke=\"" << color
      << "\" stroke-width=\"2\"/>\n";
    o << "<text x=\"" << kW - kRight + 42 << "\" y=\"" << ly + 4 << "\">"
      << names[k] << "</text>\n";
  }
  o << "<text x=\"" << kW - kRight + 12 << "\" y=\""
    << kTop + 30 + 16 * names.size()
    << "\" fill=\"#555\">dashed: predicted limit</text>\n";
  o << "</svg>\n";
  return o.str();
}

void WriteSvgFile(const std::vector<SummaryRow>& rows,
                  const std::filesystem::path& path) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open " + path.string());
  out << RenderSvg(rows);
  if (!out.flush()) throw std::runtime_error("write failed: " + path.string());
}

}  // namespace sliders
