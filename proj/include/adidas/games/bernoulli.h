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

// Symmetric meta-games whose entries are only observed through Bernoulli
// match outcomes.

#ifndef ADIDAS_GAMES_BERNOULLI_H_
#define ADIDAS_GAMES_BERNOULLI_H_

#include <cmath>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "adidas/base.h"
#include "adidas/payoff_oracle.h"
#include "adidas/rng.h"
#include "adidas/symmetric_game.h"

namespace adidas::games {

struct PlantedWinrateSpec {
  int players = 7;
  int actions = 5;
  // Logistic slope on skill differences; skills are i.i.d. N(0, 1).
  double skill_scale = 1.0;
  // Weight of the cyclic (rock-paper-scissors like) component.
  double cycle_scale = 1.0;
  std::uint64_t seed = 0;
};

// Pairwise winrates P with P + P^T = 1 and P_aa = 1/2.
inline Matrix PlantedPairwiseWinrates(const PlantedWinrateSpec& spec) {
  if (spec.actions < 1) throw ConfigError("need at least one action");
  const int m = spec.actions;
  CounterRng rng = CounterRng(spec.seed).Derive({0x5eed});
  Vector skill(m);
  for (int a = 0; a < m; ++a) skill[a] = rng.Normal();
  Matrix p(m, m);
  for (int a = 0; a < m; ++a) {
    for (int b = 0; b < m; ++b) {
      double cyc = 0.0;
      if (m >= 3) {
        const int d = ((b - a) % m + m) % m;
        if (d == 1) cyc = 1.0;
        if (d == m - 1) cyc = -1.0;
      }
      const double z = spec.skill_scale * (skill[a] - skill[b]) +
                       spec.cycle_scale * cyc;
      p(a, b) = a == b ? 0.5 : 1.0 / (1.0 + std::exp(-z));
    }
  }
  return p;
}

// Winrate of `own` against a field of opponents: the average pairwise
// winrate against each of them.
inline SymmetricGame PlantedWinrates(const PlantedWinrateSpec& spec) {
  if (spec.players < 2) throw ConfigError("need at least two players");
  const Matrix p = PlantedPairwiseWinrates(spec);
  return SymmetricGame::FromFunction(
      spec.players, spec.actions, [&](int own, std::span<const int> others) {
        double sum = 0.0;
        for (int b : others) sum += p(own, b);
        return sum / static_cast<double>(others.size());
      });
}

// Each query plays one match and reports 1 for a win, 0 otherwise. The
// outcome is drawn from the caller's generator, so results are reproducible
// from the caller's stream and safe under concurrent queries.
class BernoulliOracle : public PayoffOracle {
 public:
  explicit BernoulliOracle(std::shared_ptr<const SymmetricGame> winrates)
      : winrates_(std::move(winrates)) {
    for (double w : winrates_->payoffs()) {
      if (!(w >= 0.0 && w <= 1.0)) {
        throw DomainError("winrates must lie in [0, 1]");
      }
    }
  }

  int num_players() const override { return winrates_->num_players(); }
  const std::vector<int>& action_counts() const override {
    return winrates_->action_counts();
  }
  bool deterministic() const override { return false; }
  bool symmetric() const override { return true; }
  const NormalFormGame* exact_game() const override { return winrates_.get(); }
  const SymmetricGame& winrates() const { return *winrates_; }

 protected:
  double Sample(int player, std::span<const int> joint,
                CounterRng& rng) const override {
    return rng.Bernoulli(winrates_->Payoff(player, joint)) ? 1.0 : 0.0;
  }

 private:
  std::shared_ptr<const SymmetricGame> winrates_;
};

inline std::shared_ptr<BernoulliOracle> MakeBernoulliMetaGame(
    SymmetricGame winrates) {
  return std::make_shared<BernoulliOracle>(
      std::make_shared<const SymmetricGame>(std::move(winrates)));
}

// Chebyshev sample size for estimating a Bernoulli mean to within
// `half_width` with probability at least `confidence`, using the worst-case
// variance 1/4: n >= 1 / (4 * half_width^2 * (1 - confidence)).
inline double ChebyshevSampleCount(double half_width, double confidence) {
  if (!(half_width > 0.0) || !(confidence > 0.0 && confidence < 1.0)) {
    throw ConfigError("need half_width > 0 and confidence in (0, 1)");
  }
  return 1.0 / (4.0 * half_width * half_width * (1.0 - confidence));
}

}  // namespace adidas::games

#endif  // ADIDAS_GAMES_BERNOULLI_H_
