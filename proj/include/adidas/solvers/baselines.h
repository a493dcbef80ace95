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

// Comparison solvers: projected gradient ascent (FTRL), regret matching,
// fictitious play, exploitability descent, extragradient and plain ADI
// descent without entropy (PED).

#ifndef ADIDAS_SOLVERS_BASELINES_H_
#define ADIDAS_SOLVERS_BASELINES_H_

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "adidas/adi.h"
#include "adidas/adi_gradient.h"
#include "adidas/base.h"
#include "adidas/entropy.h"
#include "adidas/expectation.h"
#include "adidas/payoff_oracle.h"
#include "adidas/sampling.h"
#include "adidas/simplex.h"
#include "adidas/solvers/solver_config.h"
#include "adidas/strategy.h"
#include "adidas/symmetric_game.h"

namespace adidas {

enum class BaselineMethod {
  kFtrl,
  kRegretMatching,
  kFictitiousPlay,
  kExploitabilityDescent,
  kExtragradient,
  kPed,
};

inline std::string BaselineName(BaselineMethod m) {
  switch (m) {
    case BaselineMethod::kFtrl: return "ftrl";
    case BaselineMethod::kRegretMatching: return "rm";
    case BaselineMethod::kFictitiousPlay: return "fp";
    case BaselineMethod::kExploitabilityDescent: return "ed";
    case BaselineMethod::kExtragradient: return "extragrad";
    case BaselineMethod::kPed: return "ped";
  }
  return "unknown";
}

inline BaselineMethod ParseBaselineMethod(const std::string& name) {
  for (BaselineMethod m :
       {BaselineMethod::kFtrl, BaselineMethod::kRegretMatching,
        BaselineMethod::kFictitiousPlay, BaselineMethod::kExploitabilityDescent,
        BaselineMethod::kExtragradient, BaselineMethod::kPed}) {
    if (BaselineName(m) == name) return m;
  }
  throw ConfigError("unknown baseline method '" + name + "'");
}

// Uniform over the maximizers of y, i.e. lim Pi[x + eta y] as eta grows.
inline Vector HardBestResponse(const Vector& y) { return ArgmaxDistribution(y); }

// Indicator of the first maximizer.
inline Vector LowestIndexBestResponse(const Vector& y) {
  int best = 0;
  for (int k = 1; k < y.size(); ++k) {
    if (y[k] > y[best]) best = k;
  }
  Vector out = Vector::Zero(y.size());
  out[best] = 1.0;
  return out;
}

// Regret-matching strategy; uniform when no regret is positive.
inline Vector RegretMatchingStrategy(const Vector& regrets) {
  const Vector pos = regrets.cwiseMax(0.0);
  const double total = pos.sum();
  if (total <= 0.0) {
    return Vector::Constant(regrets.size(), 1.0 / regrets.size());
  }
  return pos / total;
}

// One solver object per method. In symmetric mode (FTRL, RM and FP only)
// a single shared strategy is updated from player 0's payoff gradient.
// FTRL, RM and FP use sampled gradients unless cfg.exact; ED, extragradient
// and PED always read the exact game.
class BaselineSolver {
 public:
  BaselineSolver(const PayoffOracle& oracle, BaselineMethod method,
                 SolverConfig cfg)
      : oracle_(&oracle), method_(method), cfg_(std::move(cfg)) {
    cfg_.Validate();
    n_ = oracle.num_players();
    game_ = oracle.exact_game();
    const bool full_tensor = method == BaselineMethod::kExploitabilityDescent ||
                             method == BaselineMethod::kExtragradient ||
                             method == BaselineMethod::kPed;
    if ((cfg_.exact || full_tensor) && game_ == nullptr) {
      throw ConfigError(BaselineName(method) +
                        " needs an oracle with an exact game");
    }
    if (cfg_.symmetric) {
      if (full_tensor) {
        throw ConfigError(BaselineName(method) + " has no symmetric mode");
      }
      if (!oracle.symmetric()) {
        throw ConfigError("symmetric mode needs a symmetric oracle");
      }
      sym_ = dynamic_cast<const SymmetricGame*>(game_);
      x_ = StrategyProfile::Uniform({oracle.action_counts()[0]});
    } else {
      x_ = StrategyProfile::Uniform(oracle.action_counts());
    }
    for (int i = 0; i < x_.num_players(); ++i) {
      regrets_.push_back(Vector::Zero(x_[i].size()));
    }
  }

  IterateRecord Step() {
    ++iteration_;
    const PlayerVectors grads = Gradients(x_);
    const AdiReport est = AdiFromGradients(grads, x_, EntropyKind::None());
    switch (method_) {
      case BaselineMethod::kFtrl:
        for (int i = 0; i < x_.num_players(); ++i) {
          x_[i] = internal::ProjectStep(x_[i], -grads[i], cfg_.eta_x,
                                        cfg_.projection);
        }
        break;
      case BaselineMethod::kRegretMatching:
        for (int i = 0; i < x_.num_players(); ++i) {
          const double value = grads[i].dot(x_[i].probs());
          regrets_[i].array() += grads[i].array() - value;
          x_[i] = MixedStrategy::Raw(RegretMatchingStrategy(regrets_[i]));
        }
        break;
      case BaselineMethod::kFictitiousPlay: {
        // x holds the empirical average, which starts as one uniform play.
        const double w = 1.0 / static_cast<double>(iteration_ + 1);
        for (int i = 0; i < x_.num_players(); ++i) {
          const Vector br = LowestIndexBestResponse(grads[i]);
          x_[i] = MixedStrategy::Raw((1.0 - w) * x_[i].probs() + w * br);
        }
        break;
      }
      case BaselineMethod::kExploitabilityDescent:
        x_ = ExploitabilityDescentStep(x_, grads);
        break;
      case BaselineMethod::kExtragradient:
        x_ = ExtragradientStep(x_, grads);
        break;
      case BaselineMethod::kPed: {
        const PlayerVectors g =
            AdiGradient(AllPairwiseExact(*game_, x_), grads, x_,
                        EntropyKind::None(), cfg_.GradientOptions());
        for (int i = 0; i < n_; ++i) {
          x_[i] = internal::ProjectStep(x_[i], g[i], cfg_.eta_x,
                                        cfg_.projection);
        }
        break;
      }
    }
    if (cfg_.average_iterates) averager_.Add(x_.vectors());

    IterateRecord rec;
    rec.iteration = iteration_;
    rec.adi_estimate = est.UnregularizedMean();
    rec.reg_adi_estimate = est.Mean();
    rec.temperature = 0.0;
    const StrategyProfile reported = profile();
    internal::MaybeExactAdi(game_, reported, EntropyKind::None(), cfg_, rec);
    rec.payoffs_queried = queries_;
    rec.x_hash = reported.Hash();
    rec.wall_ms = clock_.ms();
    return rec;
  }

  // ED: x_k <- Pi[x_k + eta grad_k(x_k, BR_{-k})] with hard best responses.
  StrategyProfile ExploitabilityDescentStep(const StrategyProfile& x,
                                            const PlayerVectors& grads) const {
    std::vector<MixedStrategy> br;
    for (int j = 0; j < n_; ++j) {
      br.push_back(MixedStrategy::Raw(HardBestResponse(grads[j])));
    }
    StrategyProfile out = x;
    for (int k = 0; k < n_; ++k) {
      std::vector<MixedStrategy> z = br;
      z[k] = x[k];
      const Vector g = PayoffGradient(*game_, StrategyProfile(z), k);
      out[k] = internal::ProjectStep(x[k], -g, cfg_.eta_x, cfg_.projection);
    }
    return out;
  }

  // x_hat = Pi[x + eta_hat grad(x)], then x <- Pi[x + eta grad(x_hat)]. An
  // infinite eta_hat gives the hard best response.
  StrategyProfile ExtragradientStep(const StrategyProfile& x,
                                    const PlayerVectors& grads) const {
    std::vector<MixedStrategy> half;
    for (int k = 0; k < n_; ++k) {
      if (std::isinf(cfg_.extragrad_inner)) {
        half.push_back(MixedStrategy::Raw(HardBestResponse(grads[k])));
      } else {
        half.push_back(internal::ProjectStep(x[k], -grads[k],
                                             cfg_.extragrad_inner,
                                             cfg_.projection));
      }
    }
    const PlayerVectors g2 = PayoffGradients(*game_, StrategyProfile(half));
    StrategyProfile out = x;
    for (int k = 0; k < n_; ++k) {
      out[k] = internal::ProjectStep(x[k], -g2[k], cfg_.eta_x, cfg_.projection);
    }
    return out;
  }

  StrategyProfile profile() const {
    const StrategyProfile cur =
        cfg_.average_iterates && averager_.count() > 0
            ? StrategyProfile::Raw(averager_.Mean())
            : x_;
    return cfg_.symmetric ? StrategyProfile::Symmetric(n_, cur[0]) : cur;
  }
  const StrategyProfile& iterate() const { return x_; }
  const PlayerVectors& regrets() const { return regrets_; }
  std::int64_t iteration() const { return iteration_; }
  std::uint64_t queries() const { return queries_; }
  BaselineMethod method() const { return method_; }

 private:
  PlayerVectors Gradients(const StrategyProfile& x) {
    if (cfg_.symmetric) {
      const Vector& s = x[0].probs();
      if (cfg_.exact) {
        if (sym_ != nullptr) return {SymmetricPayoffGradient(*sym_, s)};
        return {PayoffGradient(*game_, StrategyProfile::Symmetric(n_, x[0]), 0)};
      }
      queries_ += SymmetricGradientQueryCount(s.size(), cfg_.sample);
      return {EstimateSymmetricPayoffGradient(*oracle_, s, cfg_.sample,
                                              iteration_ - 1)};
    }
    const bool full_tensor = method_ == BaselineMethod::kExploitabilityDescent ||
                             method_ == BaselineMethod::kExtragradient ||
                             method_ == BaselineMethod::kPed;
    if (cfg_.exact || full_tensor) return PayoffGradients(*game_, x);
    queries_ += GradientQueryCount(oracle_->action_counts(), cfg_.sample);
    return EstimatePayoffGradients(*oracle_, x, cfg_.sample, iteration_ - 1);
  }

  const PayoffOracle* oracle_;
  BaselineMethod method_;
  SolverConfig cfg_;
  int n_ = 0;
  const NormalFormGame* game_ = nullptr;
  const SymmetricGame* sym_ = nullptr;
  StrategyProfile x_;
  PlayerVectors regrets_;
  internal::IterateAverager averager_;
  internal::WallClock clock_;
  std::int64_t iteration_ = 0;
  std::uint64_t queries_ = 0;
};

inline SolverResult RunBaseline(const PayoffOracle& oracle,
                                BaselineMethod method, const SolverConfig& cfg,
                                const IterateCallback& on_record = nullptr) {
  BaselineSolver solver(oracle, method, cfg);
  SolverResult out;
  out.log.records.reserve(cfg.iterations);
  for (std::int64_t t = 0; t < cfg.iterations; ++t) {
    out.log.records.push_back(solver.Step());
    if (on_record) on_record(out.log.records.back());
  }
  out.profile = solver.profile();
  return out;
}

}  // namespace adidas

#endif  // ADIDAS_SOLVERS_BASELINES_H_
