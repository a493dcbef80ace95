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

// Command-line front end.
//
//   adidas solve  [--key value ...] [--config file]   one run, metrics CSV
//   adidas sweep  [--key value ...] [--config file]   grid x seeds into a dir
//   adidas bias   [--key value ...] [--temperatures ...] [--samples ...]
//   adidas nfg    [--in file] [--out file]            read/write Gambit files
//   adidas report --players n --actions m [--symmetric]
//
// Every experiment key is also a flag; a config file overrides flags.
// Exit codes: 0 success, 1 configuration error, 2 solver numeric failure.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "adidas/harness/bias.h"
#include "adidas/harness/config.h"
#include "adidas/harness/csv.h"
#include "adidas/harness/experiment.h"
#include "adidas/harness/savings.h"
#include "adidas/nfg.h"

namespace {

using namespace adidas;
using namespace adidas::harness;

constexpr int kOk = 0;
constexpr int kConfigFailure = 1;
constexpr int kNumericFailure = 2;

// Registers one string flag per experiment key.
struct KeyFlags {
  std::map<std::string, std::string> values;
  std::string config_file;

  void Register(CLI::App* app) {
    for (const ConfigKey& k : ConfigKeys()) {
      app->add_option("--" + k.key, values[k.key], k.help);
    }
    app->add_option("--config", config_file,
                    "key = value file applied after the flags");
  }

  ExperimentConfig Build(CLI::App* app, ExperimentConfig cfg) const {
    for (const ConfigKey& k : ConfigKeys()) {
      if (app->count("--" + k.key) > 0) ApplyKey(cfg, k.key, values.at(k.key));
    }
    if (!config_file.empty()) {
      try {
        ApplyKeyValues(cfg, ReadKeyValueFile(config_file));
      } catch (const ConfigError& e) {
        throw ConfigError(config_file + ": " + e.what());
      }
    }
    return cfg;
  }
};

int Solve(const ExperimentConfig& cfg) {
  cfg.Validate();
  const Problem problem = MakeProblem(cfg.game, cfg.solver_config.symmetric);
  SolverConfig sc = cfg.solver_config;
  sc.sample.seed = cfg.seed;
  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!cfg.output.empty()) {
    file.open(cfg.output, std::ios::binary);
    if (!file) throw ConfigError("cannot write '" + cfg.output + "'");
    out = &file;
  }
  const std::string run_id = "c0-r0";
  WriteCsvRow(*out, MetricsHeader(cfg.timing));
  const SolverResult r = RunSolverByName(
      problem, cfg.solver, sc, [&](const IterateRecord& rec) {
        WriteCsvRow(*out, MetricsRow(run_id, cfg.seed, rec, cfg.timing));
      });
  const IterateRecord& last = r.log.records.back();
  std::cerr << "final adi_estimate " << FormatDouble(last.adi_estimate)
            << " exact_adi " << FormatDouble(last.exact_adi)
            << " payoffs_queried " << last.payoffs_queried << "\nprofile";
  for (int i = 0; i < r.profile.num_players(); ++i) {
    std::cerr << (i ? " |" : "");
    for (int a = 0; a < r.profile[i].size(); ++a) {
      std::cerr << ' ' << FormatDouble(r.profile[i][a]);
    }
  }
  std::cerr << '\n';
  return kOk;
}

int Sweep(const ExperimentConfig& cfg) {
  if (cfg.output.empty()) throw ConfigError("sweep needs --output DIR");
  const ExperimentResult r = RunExperiment(cfg);
  WriteSummaryCsv(std::cout, r);
  int failed = 0;
  for (const RunOutcome& o : r.runs) {
    if (!o.ok) {
      ++failed;
      std::cerr << o.run_id << " failed: " << o.error << '\n';
    }
  }
  if (r.best >= 0) {
    const CellSummary& b = r.summaries[r.best];
    std::cerr << "best cell " << r.best << ": mean final ADI "
              << FormatDouble(b.mean_final_adi) << " (std "
              << FormatDouble(b.std_final_adi) << ")\n";
  }
  return failed == static_cast<int>(r.runs.size()) ? kNumericFailure : kOk;
}

int Bias(const ExperimentConfig& cfg, const BiasOptions& opts) {
  const Problem problem = MakeProblem(cfg.game, cfg.solver_config.symmetric);
  std::vector<BiasRow> rows;
  if (cfg.solver_config.symmetric) {
    const auto* sym = dynamic_cast<const SymmetricGame*>(problem.game.get());
    rows = MeasureSymmetricGradientBias(*problem.oracle, *sym,
                                        Uniform(sym->actions()), opts);
  } else {
    rows = MeasureGradientBias(
        *problem.oracle, *problem.game,
        StrategyProfile::Uniform(problem.game->action_counts()), opts);
  }
  WriteCsvRow(std::cout,
              {"temperature", "samples", "distance", "angle_deg", "exact_norm"});
  for (const BiasRow& r : rows) {
    WriteCsvRow(std::cout,
                {FormatDouble(r.temperature), std::to_string(r.samples),
                 FormatDouble(r.distance), FormatDouble(r.angle_deg),
                 FormatDouble(r.exact_norm)});
  }
  return kOk;
}

int Nfg(const ExperimentConfig& cfg, const std::string& in,
        const std::string& out) {
  GameTensor game;
  std::string title = cfg.game.name;
  if (!in.empty()) {
    NfgGame g = ReadNfgFile(in);
    game = std::move(g.game);
    title = g.title;
  } else {
    const Problem p = MakeProblem(cfg.game);
    game = GameTensor::FromGame(*p.game);
  }
  const std::string text = WriteNfg(game, title);
  if (out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out, std::ios::binary);
    if (!f) throw ConfigError("cannot write '" + out + "'");
    f << text;
  }
  return kOk;
}

int Report(int players, int actions, bool symmetric) {
  const SavingsReport r = QuerySavingsReport(players, actions, symmetric);
  WriteCsvRow(std::cout, {"players", "actions", "symmetric", "tensor_entries",
                          "gradient_queries", "updates", "ratio"});
  WriteCsvRow(std::cout, {std::to_string(r.players), std::to_string(r.actions),
                          symmetric ? "1" : "0", std::to_string(r.tensor_entries),
                          std::to_string(r.gradient_queries),
                          std::to_string(r.updates), FormatDouble(r.ratio)});
  return kOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Nash equilibrium approximation by ADI descent"};
  app.require_subcommand(1);

  KeyFlags solve_flags, sweep_flags, bias_flags, nfg_flags;
  CLI::App* solve = app.add_subcommand("solve", "run one solver, metrics CSV");
  solve_flags.Register(solve);
  CLI::App* sweep = app.add_subcommand("sweep", "grid x seeds into a directory");
  sweep_flags.Register(sweep);

  CLI::App* bias = app.add_subcommand("bias", "bias of sampled ADI gradients");
  bias_flags.Register(bias);
  BiasOptions bias_opts;
  bias->add_option("--temperatures", bias_opts.temperatures, "temperature grid")
      ->delimiter(',');
  bias->add_option("--samples", bias_opts.samples, "samples per trial grid")
      ->delimiter(',');
  bias->add_option("--trials", bias_opts.trials, "trials per grid point");
  bias->add_flag("--exact-blocks", bias_opts.exact_blocks,
                 "use exact pairwise blocks (zero bias)");

  CLI::App* nfg = app.add_subcommand("nfg", "read or export Gambit .nfg files");
  nfg_flags.Register(nfg);
  std::string nfg_in, nfg_out;
  nfg->add_option("--in", nfg_in, ".nfg file to read");
  nfg->add_option("--out", nfg_out, "output file (default stdout)");

  CLI::App* report = app.add_subcommand("report", "query savings report");
  int players = 7, actions = 21;
  bool symmetric = false;
  report->add_option("--players", players, "number of players");
  report->add_option("--actions", actions, "actions per player");
  report->add_flag("--symmetric", symmetric, "symmetric game");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kConfigFailure;
  }

  try {
    if (*solve) {
      ExperimentConfig cfg = solve_flags.Build(solve, {});
      return Solve(cfg);
    }
    if (*sweep) return Sweep(sweep_flags.Build(sweep, {}));
    if (*bias) {
      const ExperimentConfig cfg = bias_flags.Build(bias, {});
      bias_opts.seed = cfg.seed;
      bias_opts.entropy = cfg.solver_config.entropy;
      return Bias(cfg, bias_opts);
    }
    if (*nfg) return Nfg(nfg_flags.Build(nfg, {}), nfg_in, nfg_out);
    if (*report) return Report(players, actions, symmetric);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigFailure;
  } catch (const DimensionError& e) {
    std::cerr << "config error: " << e.what() << '\n';
    return kConfigFailure;
  } catch (const std::exception& e) {
    std::cerr << "solver failure: " << e.what() << '\n';
    return kNumericFailure;
  }
  return kOk;
}
