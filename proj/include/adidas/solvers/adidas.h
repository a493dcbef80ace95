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

#ifndef ADIDAS_SOLVERS_ADIDAS_H_
#define ADIDAS_SOLVERS_ADIDAS_H_

#include <cstdint>
#include <vector>

#include "adidas/adi.h"
#include "adidas/adi_gradient.h"
#include "adidas/base.h"
#include "adidas/entropy.h"
#include "adidas/expectation.h"
#include "adidas/game.h"
#include "adidas/pairwise.h"
#include "adidas/payoff_oracle.h"
#include "adidas/sampling.h"
#include "adidas/solvers/anneal.h"
#include "adidas/solvers/solver_config.h"
#include "adidas/strategy.h"
#include "adidas/symmetric_game.h"

namespace adidas {

// Anneal & descend with exact gradients: lambda = 1 / tau grows by
// `delta_lambda` per round and each round runs `steps_per_round` descent
// steps on the regularized ADI. For Tsallis, p = min(1, 1 / lambda).
inline StrategyProfile WarmupAnnealDescend(const NormalFormGame& game,
                                           int rounds, int steps_per_round,
                                           double delta_lambda,
                                           const SolverConfig& cfg) {
  if (rounds < 0 || steps_per_round < 0 || !(delta_lambda > 0.0)) {
    throw ConfigError("warm-up needs rounds, steps >= 0 and delta > 0");
  }
  StrategyProfile x = StrategyProfile::Uniform(game.action_counts());
  const EntropyKind base = cfg.InitialKind();
  const AdiGradientOptions opts = cfg.GradientOptions();
  double lambda = 0.0;
  for (int round = 0; round < rounds; ++round) {
    lambda += delta_lambda;
    double t = 1.0 / lambda;
    if (base.family == EntropyFamily::kTsallis) t = std::min(t, 1.0);
    const EntropyKind kind = base.WithTemperature(t);
    for (int step = 0; step < steps_per_round; ++step) {
      const PairwiseMatrices h = AllPairwiseExact(game, x);
      const PlayerVectors grads = PayoffGradients(game, x);
      const PlayerVectors g = AdiGradient(h, grads, x, kind, opts);
      for (int i = 0; i < x.num_players(); ++i) {
        x[i] = internal::ProjectStep(x[i], g[i], cfg.eta_x, cfg.projection);
      }
    }
  }
  return x;
}

// ADIDAS on a general n-player game. Each Step samples a joint action,
// estimates every H^i_{ij}, updates the auxiliary gradients y, descends the
// amortized ADI and possibly anneals.
class AdidasSolver {
 public:
  AdidasSolver(const PayoffOracle& oracle, SolverConfig cfg)
      : oracle_(&oracle),
        cfg_(std::move(cfg)),
        x_(StrategyProfile::Uniform(oracle.action_counts())),
        aux_(AuxiliaryState::Zeros(oracle.action_counts())),
        anneal_{cfg_.InitialKind(), 0} {
    cfg_.Validate();
    if (oracle.num_players() < 2) {
      throw ConfigError("ADIDAS needs at least two players");
    }
    if (cfg_.exact && oracle.exact_game() == nullptr) {
      throw ConfigError("exact mode needs an oracle with an exact game");
    }
  }

  IterateRecord Step() {
    ++iteration_;
    const NormalFormGame* game = oracle_->exact_game();
    PairwiseMatrices h;
    if (cfg_.exact) {
      h = AllPairwiseExact(*game, x_);
      aux_.y = PayoffGradients(*game, x_);
      ++aux_.t;
    } else {
      h = EstimatePairwiseMatrices(*oracle_, x_, cfg_.sample, iteration_ - 1);
      queries_ += PairwiseQueryCount(oracle_->action_counts(), cfg_.sample);
      UpdateAux(aux_, PayoffGradientsFromEstimates(h, x_), cfg_.eta_y);
    }
    const EntropyKind kind = anneal_.kind;
    const PlayerVectors g =
        AdiGradient(h, aux_.y, x_, kind, cfg_.GradientOptions());
    const AdiReport est = AdiAmortized(x_, aux_.y, kind);

    for (int i = 0; i < x_.num_players(); ++i) {
      x_[i] = internal::ProjectStep(x_[i], g[i], cfg_.eta_x, cfg_.projection);
    }
    if (cfg_.average_iterates) averager_.Add(x_.vectors());

    IterateRecord rec;
    rec.iteration = iteration_;
    rec.adi_estimate = est.UnregularizedMean();
    rec.reg_adi_estimate = est.Mean();
    rec.temperature = kind.temperature;
    if (cfg_.anneal) {
      rec.annealed = MaybeAnneal(anneal_, est.Mean(), cfg_.threshold,
                                 cfg_.eta_y, cfg_.clip_shannon_anneal);
      if (anneal_.kind.temperature != kind.temperature) averager_ = {};
    }
    const StrategyProfile reported = profile();
    internal::MaybeExactAdi(game, reported, kind, cfg_, rec);
    rec.payoffs_queried = queries_;
    rec.x_hash = reported.Hash();
    rec.wall_ms = clock_.ms();
    return rec;
  }

  // The current iterate, or the running average when averaging is enabled.
  StrategyProfile profile() const {
    if (cfg_.average_iterates && averager_.count() > 0) {
      return StrategyProfile::Raw(averager_.Mean());
    }
    return x_;
  }
  const StrategyProfile& iterate() const { return x_; }
  const AuxiliaryState& aux() const { return aux_; }
  const AnnealState& anneal() const { return anneal_; }
  std::int64_t iteration() const { return iteration_; }
  std::uint64_t queries() const { return queries_; }
  const SolverConfig& config() const { return cfg_; }

 private:
  const PayoffOracle* oracle_;
  SolverConfig cfg_;
  StrategyProfile x_;
  AuxiliaryState aux_;
  AnnealState anneal_;
  internal::IterateAverager averager_;
  internal::WallClock clock_;
  std::int64_t iteration_ = 0;
  std::uint64_t queries_ = 0;
};

// ADIDAS restricted to symmetric profiles of a symmetric game: one shared
// strategy and one auxiliary vector.
class AdidasSymmetricSolver {
 public:
  AdidasSymmetricSolver(const PayoffOracle& oracle, SolverConfig cfg)
      : oracle_(&oracle),
        cfg_(std::move(cfg)),
        x_(MixedStrategy::Uniform(oracle.action_counts()[0])),
        anneal_{cfg_.InitialKind(), 0} {
    cfg_.Validate();
    if (!oracle.symmetric()) {
      throw ConfigError("symmetric ADIDAS needs a symmetric oracle");
    }
    if (oracle.num_players() < 2) {
      throw ConfigError("ADIDAS needs at least two players");
    }
    aux_.y = {Vector::Zero(x_.size())};
    if (cfg_.exact) {
      sym_ = dynamic_cast<const SymmetricGame*>(oracle.exact_game());
      if (sym_ == nullptr) {
        throw ConfigError("exact symmetric mode needs a SymmetricGame");
      }
    }
  }

  IterateRecord Step() {
    ++iteration_;
    const int n = oracle_->num_players();
    const Vector& x = x_.probs();
    SymmetricPairwise h;
    if (cfg_.exact) {
      h = SymmetricPairwiseExact(*sym_, x);
      aux_.y = {SymmetricPayoffGradient(*sym_, x)};
      ++aux_.t;
    } else {
      h = EstimateSymmetricPairwise(*oracle_, x, cfg_.sample, iteration_ - 1);
      queries_ += SymmetricPairwiseQueryCount(x_.size(), cfg_.sample);
      UpdateAux(aux_, {h.own * x}, cfg_.eta_y);
    }
    const EntropyKind kind = anneal_.kind;
    const Vector g = AdiGradientSymmetric(h, aux_.y[0], x, n, kind,
                                          cfg_.GradientOptions());
    const AdiReport est =
        AdiAmortized(StrategyProfile({x_}), aux_.y, kind);

    x_ = internal::ProjectStep(x_, g, cfg_.eta_x, cfg_.projection);
    if (cfg_.average_iterates) averager_.Add({x_.probs()});

    IterateRecord rec;
    rec.iteration = iteration_;
    rec.adi_estimate = est.UnregularizedMean();
    rec.reg_adi_estimate = est.Mean();
    rec.temperature = kind.temperature;
    if (cfg_.anneal) {
      rec.annealed = MaybeAnneal(anneal_, est.Mean(), cfg_.threshold,
                                 cfg_.eta_y, cfg_.clip_shannon_anneal);
      if (anneal_.kind.temperature != kind.temperature) averager_ = {};
    }
    const MixedStrategy reported = strategy();
    internal::MaybeExactAdi(oracle_->exact_game(),
                            StrategyProfile::Symmetric(n, reported), kind,
                            cfg_, rec);
    rec.payoffs_queried = queries_;
    rec.x_hash = StrategyProfile({reported}).Hash();
    rec.wall_ms = clock_.ms();
    return rec;
  }

  MixedStrategy strategy() const {
    if (cfg_.average_iterates && averager_.count() > 0) {
      return MixedStrategy::Raw(averager_.Mean()[0]);
    }
    return x_;
  }
  StrategyProfile profile() const {
    return StrategyProfile::Symmetric(oracle_->num_players(), strategy());
  }
  const MixedStrategy& iterate() const { return x_; }
  const AuxiliaryState& aux() const { return aux_; }
  const AnnealState& anneal() const { return anneal_; }
  std::int64_t iteration() const { return iteration_; }
  std::uint64_t queries() const { return queries_; }
  const SolverConfig& config() const { return cfg_; }

 private:
  const PayoffOracle* oracle_;
  SolverConfig cfg_;
  MixedStrategy x_;
  AuxiliaryState aux_;
  AnnealState anneal_;
  const SymmetricGame* sym_ = nullptr;
  internal::IterateAverager averager_;
  internal::WallClock clock_;
  std::int64_t iteration_ = 0;
  std::uint64_t queries_ = 0;
};

// Runs any solver with a Step() method for cfg.iterations steps.
template <typename Solver>
SolverResult RunSolver(Solver& solver, std::int64_t iterations,
                       const IterateCallback& on_record = nullptr) {
  SolverResult out;
  out.log.records.reserve(iterations);
  for (std::int64_t t = 0; t < iterations; ++t) {
    out.log.records.push_back(solver.Step());
    if (on_record) on_record(out.log.records.back());
  }
  out.profile = solver.profile();
  return out;
}

inline SolverResult Adidas(const PayoffOracle& oracle, const SolverConfig& cfg,
                           const IterateCallback& on_record = nullptr) {
  AdidasSolver solver(oracle, cfg);
  return RunSolver(solver, cfg.iterations, on_record);
}

inline SolverResult AdidasSymmetric(const PayoffOracle& oracle,
                                    const SolverConfig& cfg,
                                    const IterateCallback& on_record = nullptr) {
  AdidasSymmetricSolver solver(oracle, cfg);
  return RunSolver(solver, cfg.iterations, on_record);
}

}  // namespace adidas

#endif  // ADIDAS_SOLVERS_ADIDAS_H_
