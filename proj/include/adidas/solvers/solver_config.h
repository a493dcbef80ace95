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

#ifndef ADIDAS_SOLVERS_SOLVER_CONFIG_H_
#define ADIDAS_SOLVERS_SOLVER_CONFIG_H_

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <optional>
#include <vector>

#include "adidas/adi.h"
#include "adidas/adi_gradient.h"
#include "adidas/base.h"
#include "adidas/entropy.h"
#include "adidas/game.h"
#include "adidas/multiset.h"
#include "adidas/sampling.h"
#include "adidas/simplex.h"
#include "adidas/strategy.h"
#include "adidas/symmetric_game.h"

namespace adidas {

enum class Projection { kEuclidean, kEntropic };

struct SolverConfig {
  double eta_x = 0.1;
  double eta_y = 0.1;
  // Initial temperature: tau for Shannon, p for Tsallis (clipped into [0, 1]).
  double temperature = 100.0;
  // Anneal threshold on the estimated regularized ADI (mean per player).
  double threshold = 1e-3;
  std::int64_t iterations = 1000;
  EntropyFamily entropy = EntropyFamily::kShannon;
  Projection projection = Projection::kEuclidean;
  bool tangent_projection = false;
  bool symmetric = false;
  // Exact H and gradients from the oracle's game instead of samples.
  bool exact = false;
  bool anneal = true;
  bool clip_shannon_anneal = true;
  TsallisGradientForm tsallis_form = TsallisGradientForm::kExact;
  SampleConfig sample;

  // Extragradient intermediate step; infinity means the hard limit.
  double extragrad_inner = std::numeric_limits<double>::infinity();
  // Report running averages of the iterates instead of the iterates. ADIDAS
  // restarts the average whenever the temperature changes.
  bool average_iterates = false;

  // Exact ADI is logged every `exact_adi_every` iterations (0 disables) when
  // its evaluation touches at most `exact_adi_budget` payoff entries.
  std::int64_t exact_adi_every = 1;
  std::uint64_t exact_adi_budget = 10'000'000;

  void Validate() const {
    if (!(eta_x > 0.0) || !(eta_y > 0.0)) {
      throw ConfigError("learning rates must be positive");
    }
    if (!(threshold > 0.0)) throw ConfigError("threshold must be positive");
    if (iterations < 1) throw ConfigError("iterations must be >= 1");
    if (!(temperature >= 0.0) || !std::isfinite(temperature)) {
      throw ConfigError("temperature must be finite and >= 0");
    }
    if (!(extragrad_inner > 0.0)) {
      throw ConfigError("extragradient inner step must be positive");
    }
    if (exact_adi_every < 0) throw ConfigError("exact_adi_every must be >= 0");
    sample.Validate();
  }

  EntropyKind InitialKind() const {
    switch (entropy) {
      case EntropyFamily::kShannon: return EntropyKind::Shannon(temperature);
      case EntropyFamily::kTsallis:
        return EntropyKind::Tsallis(std::clamp(temperature, 0.0, 1.0));
      default: return EntropyKind::None();
    }
  }

  AdiGradientOptions GradientOptions() const {
    return {.tangent_projection = tangent_projection,
            .tsallis_form = tsallis_form};
  }
};

// One line of solver progress. ADI values are means over players; NaN
// marks a value that was not computed.
struct IterateRecord {
  std::int64_t iteration = 0;
  double adi_estimate = std::numeric_limits<double>::quiet_NaN();
  double reg_adi_estimate = std::numeric_limits<double>::quiet_NaN();
  double exact_adi = std::numeric_limits<double>::quiet_NaN();
  double exact_reg_adi = std::numeric_limits<double>::quiet_NaN();
  double temperature = 0.0;
  std::uint64_t payoffs_queried = 0;
  std::uint64_t x_hash = 0;
  double wall_ms = 0.0;
  bool annealed = false;
};

struct IterateLog {
  std::vector<IterateRecord> records;
};

using IterateCallback = std::function<void(const IterateRecord&)>;

struct SolverResult {
  StrategyProfile profile;
  IterateLog log;
};

// Payoff entries touched by an exact ADI evaluation.
inline std::uint64_t ExactAdiCost(const NormalFormGame& game,
                                  bool symmetric_profile) {
  if (symmetric_profile) {
    if (const auto* sym = dynamic_cast<const SymmetricGame*>(&game)) {
      try {
        return CheckedMul(MultisetCount(sym->actions(), sym->num_players() - 1),
                          sym->actions());
      } catch (const std::exception&) {
        return std::numeric_limits<std::uint64_t>::max();
      }
    }
  }
  return game.DenseSize();
}

namespace internal {

class WallClock {
 public:
  WallClock() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

// Uniform running average of profiles.
class IterateAverager {
 public:
  void Add(const PlayerVectors& x) {
    ++count_;
    if (sum_.empty()) {
      sum_ = x;
      return;
    }
    for (size_t i = 0; i < x.size(); ++i) sum_[i] += x[i];
  }
  PlayerVectors Mean() const {
    PlayerVectors out = sum_;
    for (Vector& v : out) v /= static_cast<double>(count_);
    return out;
  }
  std::int64_t count() const { return count_; }

 private:
  PlayerVectors sum_;
  std::int64_t count_ = 0;
};

inline MixedStrategy ProjectStep(const MixedStrategy& x, const Vector& g,
                                 double eta, Projection projection) {
  if (projection == Projection::kEntropic) return MirrorStepEntropic(x, g, eta);
  return SimplexProjectEuclidean(x.probs() - eta * g);
}

// Fills the exact ADI fields of `rec` when allowed by the config.
inline void MaybeExactAdi(const NormalFormGame* game, const StrategyProfile& x,
                          const EntropyKind& kind, const SolverConfig& cfg,
                          IterateRecord& rec) {
  if (game == nullptr || cfg.exact_adi_every == 0 ||
      rec.iteration % cfg.exact_adi_every != 0) {
    return;
  }
  bool same = true;
  for (int k = 1; k < x.num_players(); ++k) {
    same = same && x[k].probs() == x[0].probs();
  }
  if (ExactAdiCost(*game, same) > cfg.exact_adi_budget) return;
  const AdiReport r = AdiExactAuto(*game, x, kind);
  rec.exact_adi = r.UnregularizedMean();
  rec.exact_reg_adi = r.Mean();
}

}  // namespace internal
}  // namespace adidas

#endif  // ADIDAS_SOLVERS_SOLVER_CONFIG_H_
