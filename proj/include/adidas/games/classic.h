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

// Small two-player fixtures.

#ifndef ADIDAS_GAMES_CLASSIC_H_
#define ADIDAS_GAMES_CLASSIC_H_

#include "adidas/base.h"
#include "adidas/game.h"

namespace adidas::games {

inline GameTensor MatchingPennies() {
  Matrix a(2, 2);
  a << 1, -1, -1, 1;
  return GameTensor::FromBimatrix(a, -a);
}

inline GameTensor RockPaperScissors() {
  Matrix a(3, 3);
  a << 0, -1, 1, 1, 0, -1, -1, 1, 0;
  return GameTensor::FromBimatrix(a, -a);
}

// Shapley's cyclic game, modified so that the unique Nash is uniform for
// beta in (0, 1). `offset` is added to every payoff; offset = beta makes all
// payoffs nonnegative.
inline GameTensor ModifiedShapley(double beta = 0.5, double offset = 0.0) {
  if (!(beta > 0.0 && beta < 1.0)) throw ConfigError("beta must be in (0, 1)");
  Matrix a(3, 3), b(3, 3);
  a << 1, 0, beta, beta, 1, 0, 0, beta, 1;
  b << -beta, 1, 0, 0, -beta, 1, 1, 0, -beta;
  a.array() += offset;
  b.array() += offset;
  return GameTensor::FromBimatrix(a, b);
}

// Row player's sampled best responses to one column are biased away from
// the true best response (the first row) against a uniform column player.
inline GameTensor BiasedBestResponseGame() {
  Matrix a(3, 2);
  a << 0, 0, 1, -2, -2, 1;
  return GameTensor::FromBimatrix(a, Matrix::Zero(3, 2));
}

}  // namespace adidas::games

#endif  // ADIDAS_GAMES_CLASSIC_H_
