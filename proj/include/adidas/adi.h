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

#ifndef ADIDAS_ADI_H_
#define ADIDAS_ADI_H_

#include <utility>
#include <vector>

#include "adidas/base.h"
#include "adidas/entropy.h"
#include "adidas/expectation.h"
#include "adidas/game.h"
#include "adidas/strategy.h"
#include "adidas/symmetric_game.h"

namespace adidas {

// Average deviation incentive, per player and summed.
struct AdiReport {
  Vector per_player;
  double total = 0.0;
  bool regularized = false;
  // The same quantities with the entropy terms dropped: max y - y.x.
  Vector unregularized_per_player;
  double unregularized_total = 0.0;

  int num_players() const { return static_cast<int>(per_player.size()); }
  double Mean() const { return total / num_players(); }
  double UnregularizedMean() const {
    return unregularized_total / num_players();
  }
  double Max() const { return per_player.maxCoeff(); }
};

// Incentive of one player with payoff gradient y to deviate from x to the
// regularized best response: y.(BR - x) + S(BR) - S(x).
inline double DeviationIncentive(const Vector& y, const Vector& x,
                                 const EntropyKind& kind) {
  if (y.size() != x.size()) throw DimensionError("gradient/strategy mismatch");
  const BestResponse br = ComputeBestResponse(y, kind);
  return y.dot(br.dist.probs() - x) + EntropyValue(br.dist.probs(), kind, br.scale) -
         EntropyValue(x, kind, br.scale);
}

// ADI with `grads` standing in for the payoff gradients everywhere, including
// inside the best responses. With exact gradients this is the exact loss;
// with auxiliary estimates y it is the amortized estimate.
inline AdiReport AdiFromGradients(const PlayerVectors& grads,
                                  const StrategyProfile& x,
                                  const EntropyKind& kind) {
  const int n = x.num_players();
  if (static_cast<int>(grads.size()) != n) {
    throw DimensionError("one gradient per player required");
  }
  AdiReport r;
  r.regularized = kind.family != EntropyFamily::kNone && kind.temperature > 0;
  r.per_player.resize(n);
  r.unregularized_per_player.resize(n);
  for (int k = 0; k < n; ++k) {
    const Vector& xk = x[k].probs();
    r.per_player[k] = DeviationIncentive(grads[k], xk, kind);
    r.unregularized_per_player[k] = grads[k].maxCoeff() - grads[k].dot(xk);
  }
  r.total = r.per_player.sum();
  r.unregularized_total = r.unregularized_per_player.sum();
  return r;
}

inline AdiReport AdiAmortized(const StrategyProfile& x, const PlayerVectors& y,
                              const EntropyKind& kind) {
  return AdiFromGradients(y, x, kind);
}

inline AdiReport AdiExact(const NormalFormGame& game, const StrategyProfile& x,
                          const EntropyKind& kind) {
  return AdiFromGradients(PayoffGradients(game, x), x, kind);
}

// Exact ADI of the symmetric profile (x, ..., x): every player has the same
// incentive.
inline AdiReport AdiExactSymmetric(const SymmetricGame& game, const Vector& x,
                                   const EntropyKind& kind) {
  const Vector g = SymmetricPayoffGradient(game, x);
  const int n = game.num_players();
  return AdiFromGradients(PlayerVectors(n, g),
                          StrategyProfile::Symmetric(n, MixedStrategy::Raw(x)),
                          kind);
}

// Dispatches to the compressed evaluation for symmetric games and symmetric
// profiles.
inline AdiReport AdiExactAuto(const NormalFormGame& game,
                              const StrategyProfile& x,
                              const EntropyKind& kind) {
  if (const auto* sym = dynamic_cast<const SymmetricGame*>(&game)) {
    bool same = true;
    for (int k = 1; k < x.num_players(); ++k) {
      same = same && x[k].probs() == x[0].probs();
    }
    if (same) return AdiExactSymmetric(*sym, x[0].probs(), kind);
  }
  return AdiExact(game, x, kind);
}

struct ConsensusCheck {
  double lhs = 0.0;
  double rhs = 0.0;
};

// Compares the p = 1 deviation incentive, sum_k grad_k.(BR_k - x_k) with the
// Tsallis best response BR_k = grad_k / ||grad_k||_1, against the consensus
// regularizer sum_k ||grad_k||^2 / s_k - x_k.grad_k.
inline ConsensusCheck ConsensusLossCheck(const GameTensor& game,
                                         const StrategyProfile& x) {
  if (game.MinPayoff() <= 0.0) {
    throw DomainError("consensus check needs strictly positive payoffs");
  }
  const PlayerVectors grads = PayoffGradients(game, x);
  ConsensusCheck out;
  for (int k = 0; k < game.num_players(); ++k) {
    const Vector& g = grads[k];
    const BestResponse br = ComputeBestResponse(g, EntropyKind::Tsallis(1.0));
    out.lhs += g.dot(br.dist.probs() - x[k].probs());
    out.rhs += g.squaredNorm() / br.scale - x[k].probs().dot(g);
  }
  return out;
}

}  // namespace adidas

#endif  // ADIDAS_ADI_H_
