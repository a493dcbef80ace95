// Copyright 2026 The adidas-nfg Authors.
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

// Runs solvers over hyperparameter grids and seeds, writes per-run metric
// files and summarizes the best cell.

#ifndef ADIDAS_HARNESS_EXPERIMENT_H_
#define ADIDAS_HARNESS_EXPERIMENT_H_

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <limits>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "adidas/base.h"
#include "adidas/harness/config.h"
#include "adidas/harness/csv.h"
#include "adidas/solvers/adidas.h"
#include "adidas/solvers/baselines.h"

namespace adidas::harness {

// Runs one solver on one problem.
inline SolverResult RunSolverByName(const Problem& problem,
                                    const std::string& solver,
                                    const SolverConfig& cfg,
                                    const IterateCallback& on_record = nullptr) {
  if (solver == "adidas") {
    return cfg.symmetric ? AdidasSymmetric(*problem.oracle, cfg, on_record)
                         : Adidas(*problem.oracle, cfg, on_record);
  }
  return RunBaseline(*problem.oracle, ParseBaselineMethod(solver), cfg,
                     on_record);
}

// One hyperparameter combination.
struct Cell {
  double eta_x = 0.0;
  double eta_y = 0.0;
  double temperature = 0.0;
  double threshold = 0.0;
  Projection projection = Projection::kEuclidean;
};

// Cartesian product of the grid; unset axes take the base config value.
inline std::vector<Cell> ExpandGrid(const ExperimentConfig& cfg) {
  const SolverConfig& b = cfg.solver_config;
  const SweepGrid& g = cfg.grid;
  const std::vector<double> ex = g.eta_x.empty() ? std::vector{b.eta_x} : g.eta_x;
  const std::vector<double> temps =
      g.temperature.empty() ? std::vector{b.temperature} : g.temperature;
  const std::vector<double> eps =
      g.threshold.empty() ? std::vector{b.threshold} : g.threshold;
  const std::vector<Projection> projs =
      g.projection.empty() ? std::vector{b.projection} : g.projection;
  std::vector<Cell> out;
  for (double eta_x : ex) {
    std::vector<double> ey;
    if (g.eta_y_ratio.empty()) {
      ey.push_back(b.eta_y);
    } else {
      for (double r : g.eta_y_ratio) ey.push_back(r * eta_x);
    }
    for (double eta_y : ey) {
      for (double t : temps) {
        for (double e : eps) {
          for (Projection p : projs) out.push_back({eta_x, eta_y, t, e, p});
        }
      }
    }
  }
  return out;
}

inline SolverConfig CellConfig(const ExperimentConfig& cfg, const Cell& cell,
                               std::uint64_t seed) {
  SolverConfig c = cfg.solver_config;
  c.eta_x = cell.eta_x;
  c.eta_y = cell.eta_y;
  c.temperature = cell.temperature;
  c.threshold = cell.threshold;
  c.projection = cell.projection;
  c.sample.seed = seed;
  return c;
}

inline std::string RunId(int cell, int rep) {
  std::ostringstream os;
  os << "c" << cell << "-r" << rep;
  return os.str();
}

struct RunOutcome {
  std::string run_id;
  int cell = 0;
  std::uint64_t seed = 0;
  bool ok = false;
  std::string error;
  // Final exact ADI when logged, otherwise the final estimate.
  double final_adi = std::numeric_limits<double>::quiet_NaN();
  // First iteration whose ADI falls below the success level; -1 if never.
  std::int64_t first_below = -1;
  std::uint64_t payoffs_queried = 0;
};

// Final ADI and earliest crossing from a metric trail. Exact values are
// used when the run logged any; estimates otherwise.
inline void ScoreRun(const IterateLog& log, double success_adi,
                     RunOutcome& out) {
  bool any_exact = false;
  for (const IterateRecord& r : log.records) any_exact |= !std::isnan(r.exact_adi);
  for (const IterateRecord& r : log.records) {
    const double v = any_exact ? r.exact_adi : r.adi_estimate;
    if (std::isnan(v)) continue;
    out.final_adi = v;
    if (out.first_below < 0 && v < success_adi) out.first_below = r.iteration;
  }
  if (!log.records.empty()) {
    out.payoffs_queried = log.records.back().payoffs_queried;
  }
}

struct CellSummary {
  Cell cell;
  int runs = 0;
  int failures = 0;
  double mean_final_adi = std::numeric_limits<double>::quiet_NaN();
  double std_final_adi = std::numeric_limits<double>::quiet_NaN();
  // Mean earliest crossing; infinite when some run never crossed.
  double mean_first_below = std::numeric_limits<double>::infinity();
};

struct ExperimentResult {
  std::vector<Cell> cells;
  std::vector<RunOutcome> runs;
  std::vector<CellSummary> summaries;
  // Index into `summaries`; -1 when every cell failed.
  int best = -1;
};

// Pure function of the run outcomes: per-cell mean/std of the final ADI and
// the best cell by mean final ADI, ties broken by earliest mean crossing.
inline void Summarize(ExperimentResult& result) {
  result.summaries.clear();
  for (size_t c = 0; c < result.cells.size(); ++c) {
    CellSummary s;
    s.cell = result.cells[c];
    std::vector<double> finals;
    double crossing = 0.0;
    bool all_crossed = true;
    for (const RunOutcome& r : result.runs) {
      if (r.cell != static_cast<int>(c)) continue;
      ++s.runs;
      if (!r.ok || std::isnan(r.final_adi)) {
        ++s.failures;
        continue;
      }
      finals.push_back(r.final_adi);
      if (r.first_below < 0) {
        all_crossed = false;
      } else {
        crossing += static_cast<double>(r.first_below);
      }
    }
    if (!finals.empty()) {
      double mean = 0.0;
      for (double v : finals) mean += v;
      mean /= finals.size();
      double var = 0.0;
      for (double v : finals) var += (v - mean) * (v - mean);
      s.mean_final_adi = mean;
      s.std_final_adi = finals.size() > 1 ? std::sqrt(var / (finals.size() - 1)) : 0.0;
      if (all_crossed) s.mean_first_below = crossing / finals.size();
    }
    result.summaries.push_back(s);
  }
  result.best = -1;
  for (size_t c = 0; c < result.summaries.size(); ++c) {
    const CellSummary& s = result.summaries[c];
    if (std::isnan(s.mean_final_adi) || s.failures > 0) continue;
    if (result.best < 0) {
      result.best = static_cast<int>(c);
      continue;
    }
    const CellSummary& b = result.summaries[result.best];
    if (s.mean_final_adi < b.mean_final_adi ||
        (s.mean_final_adi == b.mean_final_adi &&
         s.mean_first_below < b.mean_first_below)) {
      result.best = static_cast<int>(c);
    }
  }
}

inline std::vector<std::string> SummaryHeader() {
  return {"cell",        "eta_x",          "eta_y",         "temperature",
          "threshold",   "projection",     "runs",          "failures",
          "mean_final_adi", "std_final_adi", "mean_first_below", "best"};
}

inline void WriteSummaryCsv(std::ostream& os, const ExperimentResult& r) {
  WriteCsvRow(os, SummaryHeader());
  for (size_t c = 0; c < r.summaries.size(); ++c) {
    const CellSummary& s = r.summaries[c];
    WriteCsvRow(os, {std::to_string(c), FormatDouble(s.cell.eta_x),
                     FormatDouble(s.cell.eta_y), FormatDouble(s.cell.temperature),
                     FormatDouble(s.cell.threshold),
                     ProjectionName(s.cell.projection), std::to_string(s.runs),
                     std::to_string(s.failures), FormatDouble(s.mean_final_adi),
                     FormatDouble(s.std_final_adi),
                     FormatDouble(s.mean_first_below),
                     static_cast<int>(c) == r.best ? "1" : "0"});
  }
}

inline void WriteRunsCsv(std::ostream& os, const ExperimentResult& r) {
  WriteCsvRow(os, {"run_id", "cell", "seed", "status", "final_adi",
                   "first_below", "payoffs_queried"});
  for (const RunOutcome& o : r.runs) {
    WriteCsvRow(os, {o.run_id, std::to_string(o.cell), std::to_string(o.seed),
                     o.ok ? "ok" : "failed: " + o.error,
                     FormatDouble(o.final_adi), std::to_string(o.first_below),
                     std::to_string(o.payoffs_queried)});
  }
}

// Executes every (cell, seed) run. With a non-empty cfg.output directory,
// writes runs/<run_id>.csv per run, then metrics.csv (all runs merged in run
// order), runs.csv and summary.csv. A failing run is recorded and the rest
// continue.
inline ExperimentResult RunExperiment(const ExperimentConfig& cfg) {
  cfg.Validate();
  ExperimentResult result;
  result.cells = ExpandGrid(cfg);
  for (size_t c = 0; c < result.cells.size(); ++c) {
    for (int r = 0; r < cfg.repetitions; ++r) {
      RunOutcome o;
      o.run_id = RunId(static_cast<int>(c), r);
      o.cell = static_cast<int>(c);
      o.seed = cfg.seed + static_cast<std::uint64_t>(r);
      result.runs.push_back(o);
    }
  }
  const Problem problem = MakeProblem(cfg.game, cfg.solver_config.symmetric);
  namespace fs = std::filesystem;
  const bool to_disk = !cfg.output.empty();
  const fs::path dir(cfg.output);
  if (to_disk) fs::create_directories(dir / "runs");

  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t k = next++; k < result.runs.size(); k = next++) {
      RunOutcome& o = result.runs[k];
      try {
        const SolverConfig sc = CellConfig(cfg, result.cells[o.cell], o.seed);
        sc.Validate();
        const SolverResult res = RunSolverByName(problem, cfg.solver, sc);
        ScoreRun(res.log, cfg.success_adi, o);
        o.ok = true;
        if (to_disk) {
          std::ofstream f(dir / "runs" / (o.run_id + ".csv"), std::ios::binary);
          WriteMetricsCsv(f, o.run_id, o.seed, res.log, cfg.timing);
        }
      } catch (const std::exception& e) {
        o.ok = false;
        o.error = e.what();
      }
    }
  };
  const int jobs = std::min<int>(cfg.jobs, static_cast<int>(result.runs.size()));
  if (jobs <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Summarize(result);
  if (to_disk) {
    std::ofstream merged(dir / "metrics.csv", std::ios::binary);
    WriteCsvRow(merged, MetricsHeader(cfg.timing));
    for (const RunOutcome& o : result.runs) {
      if (!o.ok) continue;
      std::ifstream in(dir / "runs" / (o.run_id + ".csv"), std::ios::binary);
      std::string line;
      std::getline(in, line);  // header
      if (in.peek() != std::char_traits<char>::eof()) merged << in.rdbuf();
    }
    std::ofstream runs(dir / "runs.csv", std::ios::binary);
    WriteRunsCsv(runs, result);
    std::ofstream summary(dir / "summary.csv", std::ios::binary);
    WriteSummaryCsv(summary, result);
  }
  return result;
}

}  // namespace adidas::harness

#endif  // ADIDAS_HARNESS_EXPERIMENT_H_
