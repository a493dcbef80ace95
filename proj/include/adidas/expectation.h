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

// Exact expectations by enumeration. Only joint actions in the support of the
// marginalized players are visited, so cost scales with the support sizes.

#ifndef ADIDAS_EXPECTATION_H_
#define ADIDAS_EXPECTATION_H_

#include <span>
#include <vector>

#include "adidas/base.h"
#include "adidas/game.h"
#include "adidas/multiset.h"
#include "adidas/pairwise.h"
#include "adidas/strategy.h"
#include "adidas/symmetric_game.h"

namespace adidas {
namespace internal {

// Calls f(joint, weight) for every joint action of the players not in
// `fixed` that lies in the support of x. Entries of `joint` belonging to
// fixed players are left for the caller to fill.
template <typename F>
void ForEachSupportOutcome(const StrategyProfile& x,
                           const std::vector<bool>& fixed, JointAction& joint,
                           F&& f) {
  const int n = x.num_players();
  std::vector<std::vector<int>> support(n);
  for (int k = 0; k < n; ++k) {
    if (fixed[k]) continue;
    for (int a = 0; a < x[k].size(); ++a) {
      if (x[k][a] != 0.0) support[k].push_back(a);
    }
    if (support[k].empty()) return;
  }
  std::vector<int> idx(n, 0);
  for (int k = 0; k < n; ++k) {
    if (!fixed[k]) joint[k] = support[k][0];
  }
  while (true) {
    double w = 1.0;
    for (int k = 0; k < n; ++k) {
      if (!fixed[k]) w *= x[k][joint[k]];
    }
    f(joint, w);
    int k = 0;
    for (; k < n; ++k) {
      if (fixed[k]) continue;
      if (++idx[k] < static_cast<int>(support[k].size())) {
        joint[k] = support[k][idx[k]];
        break;
      }
      idx[k] = 0;
      joint[k] = support[k][0];
    }
    if (k == n) return;
  }
}

}  // namespace internal

// Component a equals E_{x_{-i}}[u_i(a, x_{-i})].
inline Vector PayoffGradient(const NormalFormGame& game,
                             const StrategyProfile& x, int i) {
  game.CheckProfile(x);
  game.CheckPlayer(i);
  const int n = game.num_players();
  std::vector<bool> fixed(n, false);
  fixed[i] = true;
  Vector g = Vector::Zero(game.num_actions(i));
  JointAction joint(n, 0);
  internal::ForEachSupportOutcome(x, fixed, joint,
                                  [&](JointAction& a, double w) {
                                    for (int r = 0; r < g.size(); ++r) {
                                      a[i] = r;
                                      g[r] += w * game.Payoff(i, a);
                                    }
                                  });
  return g;
}

inline PlayerVectors PayoffGradients(const NormalFormGame& game,
                                     const StrategyProfile& x) {
  PlayerVectors out;
  for (int i = 0; i < game.num_players(); ++i) {
    out.push_back(PayoffGradient(game, x, i));
  }
  return out;
}

// u_i(x) by enumeration of the support of the whole profile.
inline double ExpectedUtility(const NormalFormGame& game,
                              const StrategyProfile& x, int i) {
  game.CheckProfile(x);
  game.CheckPlayer(i);
  std::vector<bool> fixed(game.num_players(), false);
  JointAction joint(game.num_players(), 0);
  double total = 0.0;
  internal::ForEachSupportOutcome(
      x, fixed, joint,
      [&](JointAction& a, double w) { total += w * game.Payoff(i, a); });
  return total;
}

// H^i_{ij}(r, c) = E_{x_{-ij}}[u_i(r, c, x_{-ij})].
inline Matrix PairwiseJacobianExact(const NormalFormGame& game,
                                    const StrategyProfile& x, int i, int j) {
  game.CheckProfile(x);
  game.CheckPlayer(i);
  game.CheckPlayer(j);
  if (i == j) throw DomainError("pairwise block needs distinct players");
  const int n = game.num_players();
  std::vector<bool> fixed(n, false);
  fixed[i] = fixed[j] = true;
  Matrix h = Matrix::Zero(game.num_actions(i), game.num_actions(j));
  JointAction joint(n, 0);
  internal::ForEachSupportOutcome(
      x, fixed, joint, [&](JointAction& a, double w) {
        for (int r = 0; r < h.rows(); ++r) {
          a[i] = r;
          for (int c = 0; c < h.cols(); ++c) {
            a[j] = c;
            h(r, c) += w * game.Payoff(i, a);
          }
        }
      });
  return h;
}

inline PairwiseMatrices AllPairwiseExact(const NormalFormGame& game,
                                         const StrategyProfile& x) {
  PairwiseMatrices h(game.action_counts());
  for (int i = 0; i < game.num_players(); ++i) {
    for (int j = 0; j < game.num_players(); ++j) {
      if (i != j) h.block(i, j) = PairwiseJacobianExact(game, x, i, j);
    }
  }
  return h;
}

namespace internal {

// Calls f(sorted_actions, probability) for every multiset of `size` actions
// drawn i.i.d. from x, restricted to the support of x.
template <typename F>
void ForEachSupportMultiset(const Vector& x, int size, F&& f) {
  std::vector<int> support;
  for (int a = 0; a < x.size(); ++a) {
    if (x[a] != 0.0) support.push_back(a);
  }
  if (support.empty()) return;
  std::vector<int> actions(size);
  ForEachMultiset(static_cast<int>(support.size()), size,
                  [&](std::span<const int> ms) {
                    double w = MultinomialCoefficient(ms);
                    for (int k = 0; k < size; ++k) {
                      actions[k] = support[ms[k]];
                      w *= x[actions[k]];
                    }
                    f(std::span<const int>(actions), w);
                  });
}

}  // namespace internal

// Payoff gradient shared by all players when everyone plays x.
inline Vector SymmetricPayoffGradient(const SymmetricGame& game,
                                      const Vector& x) {
  if (x.size() != game.actions()) throw DimensionError("strategy size mismatch");
  Vector g = Vector::Zero(game.actions());
  internal::ForEachSupportMultiset(
      x, game.num_players() - 1, [&](std::span<const int> opp, double w) {
        for (int a = 0; a < game.actions(); ++a) g[a] += w * game.OwnPayoff(a, opp);
      });
  return g;
}

// Exact own/other blocks for a symmetric profile.
inline SymmetricPairwise SymmetricPairwiseExact(const SymmetricGame& game,
                                                const Vector& x) {
  if (game.num_players() < 2) throw DimensionError("need two players");
  if (x.size() != game.actions()) throw DimensionError("strategy size mismatch");
  const int m = game.actions();
  const int n = game.num_players();
  Matrix own = Matrix::Zero(m, m);
  std::vector<int> opp(n - 1);
  internal::ForEachSupportMultiset(
      x, n - 2, [&](std::span<const int> rest, double w) {
        for (int c = 0; c < m; ++c) {
          // Insert c into the sorted rest.
          int k = 0;
          bool placed = false;
          for (int a : rest) {
            if (!placed && c <= a) {
              opp[k++] = c;
              placed = true;
            }
            opp[k++] = a;
          }
          if (!placed) opp[k] = c;
          for (int r = 0; r < m; ++r) own(r, c) += w * game.OwnPayoff(r, opp);
        }
      });
  return {own, own.transpose()};
}

}  // namespace adidas

#endif  // ADIDAS_EXPECTATION_H_
