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

// Experiment configuration: which game, which solver, which hyperparameter
// grid. Every field is reachable through a string key so the same table
// drives config files and command-line flags.

#ifndef ADIDAS_HARNESS_CONFIG_H_
#define ADIDAS_HARNESS_CONFIG_H_

#include <cstdint>
#include <functional>
#include <memory>
#include <string>
#include <vector>

#include "adidas/base.h"
#include "adidas/game.h"
#include "adidas/games/bernoulli.h"
#include "adidas/games/blotto.h"
#include "adidas/games/classic.h"
#include "adidas/games/covariant.h"
#include "adidas/games/el_farol.h"
#include "adidas/harness/key_value.h"
#include "adidas/nfg.h"
#include "adidas/payoff_oracle.h"
#include "adidas/solvers/baselines.h"
#include "adidas/solvers/solver_config.h"
#include "adidas/symmetric_game.h"

namespace adidas::harness {

struct GameSpec {
  // matching_pennies, rps, shapley, biased, blotto, el_farol, covariant,
  // bernoulli or nfg.
  std::string name = "matching_pennies";
  // 0 keeps the game's default.
  int players = 0;
  int actions = 0;
  int coins = 10;
  int fields = 3;
  double crowding = 0.7;
  double beta = 0.5;
  double rho = 0.0;
  // Added to every payoff (e.g. to make Tsallis payoffs nonnegative).
  double offset = 0.0;
  std::uint64_t seed = 0;
  // Input file for name = nfg.
  std::string path;
};

struct Problem {
  std::shared_ptr<const NormalFormGame> game;
  std::shared_ptr<const PayoffOracle> oracle;
};

namespace internal {

inline SymmetricGame OffsetSymmetric(const SymmetricGame& g, double c) {
  return SymmetricGame::FromFunction(
      g.num_players(), g.actions(), [&](int own, std::span<const int> opp) {
        return g.OwnPayoff(own, opp) + c;
      });
}

inline Problem FromTensor(GameTensor t, const GameSpec& spec, bool symmetric) {
  if (spec.offset != 0.0) t = t.Offset(spec.offset);
  std::shared_ptr<const NormalFormGame> g;
  if (symmetric) {
    if (!t.IsSymmetric()) {
      throw ConfigError("game '" + spec.name + "' is not symmetric");
    }
    g = std::make_shared<SymmetricGame>(SymmetricGame::FromTensor(t));
  } else {
    g = std::make_shared<GameTensor>(std::move(t));
  }
  return {g, std::make_shared<GameOracle>(g)};
}

inline Problem FromSymmetric(SymmetricGame s, const GameSpec& spec) {
  if (spec.offset != 0.0) s = OffsetSymmetric(s, spec.offset);
  auto g = std::make_shared<SymmetricGame>(std::move(s));
  return {g, std::make_shared<GameOracle>(g)};
}

}  // namespace internal

// Builds the game and its oracle. Symmetric generators always return the
// compressed form; dense games are compressed when `symmetric` is set.
inline Problem MakeProblem(const GameSpec& spec, bool symmetric = false) {
  const auto& n = spec.name;
  if (n == "matching_pennies") {
    return internal::FromTensor(games::MatchingPennies(), spec, symmetric);
  }
  if (n == "rps") {
    return internal::FromTensor(games::RockPaperScissors(), spec, symmetric);
  }
  if (n == "shapley") {
    return internal::FromTensor(games::ModifiedShapley(spec.beta), spec,
                                symmetric);
  }
  if (n == "biased") {
    return internal::FromTensor(games::BiasedBestResponseGame(), spec,
                                symmetric);
  }
  if (n == "covariant") {
    games::CovariantSpec c;
    if (spec.players > 0) c.players = spec.players;
    if (spec.actions > 0) c.actions = spec.actions;
    c.rho = spec.rho;
    c.seed = spec.seed;
    return internal::FromTensor(games::MakeCovariantRandom(c), spec, symmetric);
  }
  if (n == "nfg") {
    if (spec.path.empty()) throw ConfigError("game 'nfg' needs game_path");
    return internal::FromTensor(ReadNfgFile(spec.path).game, spec, symmetric);
  }
  if (n == "blotto") {
    games::BlottoSpec b;
    b.coins = spec.coins;
    b.fields = spec.fields;
    if (spec.players > 0) b.players = spec.players;
    return internal::FromSymmetric(games::MakeBlotto(b), spec);
  }
  if (n == "el_farol") {
    games::ElFarolSpec e;
    if (spec.players > 0) e.players = spec.players;
    e.crowding = spec.crowding;
    return internal::FromSymmetric(games::MakeElFarol(e), spec);
  }
  if (n == "bernoulli") {
    if (spec.offset != 0.0) {
      throw ConfigError("game 'bernoulli' does not take an offset");
    }
    games::PlantedWinrateSpec w;
    if (spec.players > 0) w.players = spec.players;
    if (spec.actions > 0) w.actions = spec.actions;
    w.seed = spec.seed;
    auto oracle = games::MakeBernoulliMetaGame(games::PlantedWinrates(w));
    std::shared_ptr<const NormalFormGame> g(oracle, oracle->exact_game());
    return {g, oracle};
  }
  throw ConfigError("unknown game '" + n + "'");
}

struct SweepGrid {
  std::vector<double> eta_x;
  // eta_y = ratio * eta_x.
  std::vector<double> eta_y_ratio;
  std::vector<double> temperature;
  std::vector<double> threshold;
  std::vector<Projection> projection;
};

struct ExperimentConfig {
  GameSpec game;
  // "adidas" or a baseline name.
  std::string solver = "adidas";
  SolverConfig solver_config;
  SweepGrid grid;
  int repetitions = 10;
  // Repetition r uses sampling seed seed + r.
  std::uint64_t seed = 0;
  std::string output;
  // Runs executed concurrently.
  int jobs = 1;
  // Adds wall-clock time to the metrics; makes output nondeterministic.
  bool timing = false;
  // ADI level for the earliest-crossing tie-break.
  double success_adi = 0.01;

  void Validate() const {
    solver_config.Validate();
    if (repetitions < 1) throw ConfigError("repetitions must be >= 1");
    if (jobs < 1) throw ConfigError("jobs must be >= 1");
    if (solver != "adidas") ParseBaselineMethod(solver);
  }
};

inline Projection ParseProjection(const std::string& v) {
  if (v == "euclidean") return Projection::kEuclidean;
  if (v == "entropic") return Projection::kEntropic;
  throw ConfigError("unknown projection '" + v + "'");
}

inline std::string ProjectionName(Projection p) {
  return p == Projection::kEntropic ? "entropic" : "euclidean";
}

inline EntropyFamily ParseEntropy(const std::string& v) {
  if (v == "shannon") return EntropyFamily::kShannon;
  if (v == "tsallis") return EntropyFamily::kTsallis;
  if (v == "none") return EntropyFamily::kNone;
  throw ConfigError("unknown entropy '" + v + "'");
}

struct ConfigKey {
  std::string key;
  std::string help;
  std::function<void(ExperimentConfig&, const std::string&)> set;
};

inline std::vector<double> ParseDoubleList(const std::string& key,
                                           const std::string& v) {
  std::vector<double> out;
  for (const auto& item : SplitList(v)) out.push_back(ParseDoubleValue(key, item));
  if (out.empty()) throw ConfigError("'" + key + "' needs at least one value");
  return out;
}

// Every settable key.
inline const std::vector<ConfigKey>& ConfigKeys() {
  using C = ExperimentConfig;
  using S = const std::string&;
  static const std::vector<ConfigKey> keys = {
      {"game", "game name", [](C& c, S v) { c.game.name = v; }},
      {"players", "number of players (0 = game default)",
       [](C& c, S v) { c.game.players = ParseIntValue("players", v); }},
      {"actions", "actions per player (0 = game default)",
       [](C& c, S v) { c.game.actions = ParseIntValue("actions", v); }},
      {"coins", "Blotto coins",
       [](C& c, S v) { c.game.coins = ParseIntValue("coins", v); }},
      {"fields", "Blotto fields",
       [](C& c, S v) { c.game.fields = ParseIntValue("fields", v); }},
      {"crowding", "El Farol capacity fraction",
       [](C& c, S v) { c.game.crowding = ParseDoubleValue("crowding", v); }},
      {"beta", "modified Shapley beta",
       [](C& c, S v) { c.game.beta = ParseDoubleValue("beta", v); }},
      {"rho", "covariant game payoff correlation",
       [](C& c, S v) { c.game.rho = ParseDoubleValue("rho", v); }},
      {"offset", "constant added to all payoffs",
       [](C& c, S v) { c.game.offset = ParseDoubleValue("offset", v); }},
      {"game_seed", "seed of random game generators",
       [](C& c, S v) { c.game.seed = ParseIntValue("game_seed", v); }},
      {"game_path", ".nfg input for game = nfg",
       [](C& c, S v) { c.game.path = v; }},
      {"solver", "adidas, ftrl, rm, fp, ed, extragrad or ped",
       [](C& c, S v) { c.solver = v; }},
      {"eta_x", "strategy learning rate",
       [](C& c, S v) { c.solver_config.eta_x = ParseDoubleValue("eta_x", v); }},
      {"eta_y", "auxiliary learning rate",
       [](C& c, S v) { c.solver_config.eta_y = ParseDoubleValue("eta_y", v); }},
      {"temperature", "initial temperature (tau or Tsallis p)",
       [](C& c, S v) {
         c.solver_config.temperature = ParseDoubleValue("temperature", v);
       }},
      {"threshold", "anneal threshold on the estimated regularized ADI",
       [](C& c, S v) {
         c.solver_config.threshold = ParseDoubleValue("threshold", v);
       }},
      {"iterations", "iterations per run",
       [](C& c, S v) {
         c.solver_config.iterations = ParseIntValue("iterations", v);
       }},
      {"entropy", "shannon, tsallis or none",
       [](C& c, S v) { c.solver_config.entropy = ParseEntropy(v); }},
      {"projection", "euclidean or entropic",
       [](C& c, S v) { c.solver_config.projection = ParseProjection(v); }},
      {"tangent_projection", "project gradients onto the simplex tangent space",
       [](C& c, S v) {
         c.solver_config.tangent_projection =
             ParseBoolValue("tangent_projection", v);
       }},
      {"symmetric", "solve for a symmetric equilibrium",
       [](C& c, S v) {
         c.solver_config.symmetric = ParseBoolValue("symmetric", v);
       }},
      {"exact", "use exact gradients instead of samples",
       [](C& c, S v) { c.solver_config.exact = ParseBoolValue("exact", v); }},
      {"anneal", "enable temperature annealing",
       [](C& c, S v) { c.solver_config.anneal = ParseBoolValue("anneal", v); }},
      {"clip_shannon_anneal", "clip annealed Shannon temperatures into [0, 1]",
       [](C& c, S v) {
         c.solver_config.clip_shannon_anneal =
             ParseBoolValue("clip_shannon_anneal", v);
       }},
      {"tsallis_form", "exact or appendix",
       [](C& c, S v) {
         if (v == "exact") {
           c.solver_config.tsallis_form = TsallisGradientForm::kExact;
         } else if (v == "appendix") {
           c.solver_config.tsallis_form = TsallisGradientForm::kAppendix;
         } else {
           throw ConfigError("unknown tsallis_form '" + v + "'");
         }
       }},
      {"average_iterates", "report running averages of the iterates",
       [](C& c, S v) {
         c.solver_config.average_iterates = ParseBoolValue("average_iterates", v);
       }},
      {"extragrad_inner", "extragradient inner step (inf = hard)",
       [](C& c, S v) {
         c.solver_config.extragrad_inner = ParseDoubleValue("extragrad_inner", v);
       }},
      {"exact_adi_every", "log exact ADI every k iterations (0 = never)",
       [](C& c, S v) {
         c.solver_config.exact_adi_every = ParseIntValue("exact_adi_every", v);
       }},
      {"exact_adi_budget", "largest payoff count for exact ADI logging",
       [](C& c, S v) {
         c.solver_config.exact_adi_budget = ParseIntValue("exact_adi_budget", v);
       }},
      {"repeats", "joint-action samples per iteration",
       [](C& c, S v) {
         c.solver_config.sample.repeats = ParseIntValue("repeats", v);
       }},
      {"entry_repeats", "oracle queries averaged per entry",
       [](C& c, S v) {
         c.solver_config.sample.entry_repeats = ParseIntValue("entry_repeats", v);
       }},
      {"workers", "threads used for sampling",
       [](C& c, S v) {
         c.solver_config.sample.workers = ParseIntValue("workers", v);
       }},
      {"seed", "base sampling seed",
       [](C& c, S v) { c.seed = ParseIntValue("seed", v); }},
      {"repetitions", "seeds per hyperparameter cell",
       [](C& c, S v) { c.repetitions = ParseIntValue("repetitions", v); }},
      {"jobs", "runs executed concurrently",
       [](C& c, S v) { c.jobs = ParseIntValue("jobs", v); }},
      {"output", "output file or directory",
       [](C& c, S v) { c.output = v; }},
      {"timing", "add wall_ms to the metrics",
       [](C& c, S v) { c.timing = ParseBoolValue("timing", v); }},
      {"success_adi", "ADI level for the earliest-crossing tie-break",
       [](C& c, S v) { c.success_adi = ParseDoubleValue("success_adi", v); }},
      {"sweep.eta_x", "comma-separated eta_x grid",
       [](C& c, S v) { c.grid.eta_x = ParseDoubleList("sweep.eta_x", v); }},
      {"sweep.eta_y_ratio", "comma-separated eta_y / eta_x grid",
       [](C& c, S v) {
         c.grid.eta_y_ratio = ParseDoubleList("sweep.eta_y_ratio", v);
       }},
      {"sweep.temperature", "comma-separated initial temperature grid",
       [](C& c, S v) {
         c.grid.temperature = ParseDoubleList("sweep.temperature", v);
       }},
      {"sweep.threshold", "comma-separated anneal threshold grid",
       [](C& c, S v) {
         c.grid.threshold = ParseDoubleList("sweep.threshold", v);
       }},
      {"sweep.projection", "comma-separated projection grid",
       [](C& c, S v) {
         c.grid.projection.clear();
         for (const auto& p : SplitList(v)) {
           c.grid.projection.push_back(ParseProjection(p));
         }
         if (c.grid.projection.empty()) {
           throw ConfigError("'sweep.projection' needs at least one value");
         }
       }},
  };
  return keys;
}

inline void ApplyKey(ExperimentConfig& cfg, const std::string& key,
                     const std::string& value) {
  for (const ConfigKey& k : ConfigKeys()) {
    if (k.key == key) {
      k.set(cfg, value);
      return;
    }
  }
  throw ConfigError("unknown config key '" + key + "'");
}

inline void ApplyKeyValues(ExperimentConfig& cfg,
                           const std::vector<KeyValue>& kvs) {
  for (const KeyValue& kv : kvs) {
    try {
      ApplyKey(cfg, kv.key, kv.value);
    } catch (const ConfigError& e) {
      throw ConfigError("line " + std::to_string(kv.line) + ": " + e.what());
    }
  }
}

}  // namespace adidas::harness

#endif  // ADIDAS_HARNESS_CONFIG_H_
