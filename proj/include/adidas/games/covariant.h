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

#ifndef ADIDAS_GAMES_COVARIANT_H_
#define ADIDAS_GAMES_COVARIANT_H_

#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "adidas/base.h"
#include "adidas/game.h"
#include "adidas/multiset.h"
#include "adidas/rng.h"

namespace adidas::games {

struct CovariantSpec {
  int players = 3;
  int actions = 3;
  // Pairwise correlation of payoffs across players at each outcome.
  double rho = 0.0;
  std::uint64_t seed = 0;

  void Validate() const {
    if (players < 2 || actions < 1) {
      throw ConfigError("covariant game needs two players and one action");
    }
    if (!(rho >= -1.0 / (players - 1) - 1e-12 && rho <= 1.0)) {
      throw ConfigError("rho must lie in [-1/(n-1), 1]");
    }
  }
};

// Random game whose per-outcome payoff vectors are jointly Gaussian with
// unit variance and pairwise correlation rho, then standardized per player
// to zero mean and unit variance over outcomes. Deterministic in the seed.
inline GameTensor MakeCovariantRandom(const CovariantSpec& spec,
                                      std::uint64_t max_entries = 10'000'000) {
  spec.Validate();
  const int n = spec.players;
  const std::uint64_t outcomes = CheckedPow(spec.actions, n);
  if (CheckedMul(outcomes, n) > max_entries) {
    throw DomainError("covariant game exceeds the dense budget");
  }
  const double a = std::sqrt(std::max(0.0, 1.0 - spec.rho));
  const double b = std::sqrt(std::max(0.0, 1.0 + (n - 1) * spec.rho));
  const CounterRng root(spec.seed);
  std::vector<double> payoffs(outcomes * n);
  std::vector<double> z(n);
  for (std::uint64_t o = 0; o < outcomes; ++o) {
    CounterRng rng = root.Derive({o});
    double mean = 0.0;
    for (int i = 0; i < n; ++i) {
      z[i] = rng.Normal();
      mean += z[i];
    }
    mean /= n;
    for (int i = 0; i < n; ++i) {
      payoffs[o * n + i] = a * (z[i] - mean) + b * mean;
    }
  }
  if (outcomes > 1) {
    for (int i = 0; i < n; ++i) {
      double mean = 0.0, sq = 0.0;
      for (std::uint64_t o = 0; o < outcomes; ++o) mean += payoffs[o * n + i];
      mean /= outcomes;
      for (std::uint64_t o = 0; o < outcomes; ++o) {
        const double d = payoffs[o * n + i] - mean;
        sq += d * d;
      }
      const double sd = std::sqrt(sq / outcomes);
      for (std::uint64_t o = 0; o < outcomes; ++o) {
        payoffs[o * n + i] = sd > 0.0 ? (payoffs[o * n + i] - mean) / sd : 0.0;
      }
    }
  }
  return GameTensor(std::vector<int>(n, spec.actions), std::move(payoffs));
}

}  // namespace adidas::games

#endif  // ADIDAS_GAMES_COVARIANT_H_
