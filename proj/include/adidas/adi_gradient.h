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

// Gradients of the deviation-incentive loss with respect to each player's
// strategy. They take pairwise blocks and payoff gradients (exact or
// estimated) rather than a game, so the exact and sampled solvers share one
// code path.

#ifndef ADIDAS_ADI_GRADIENT_H_
#define ADIDAS_ADI_GRADIENT_H_

#include <cmath>
#include <string>

#include "adidas/base.h"
#include "adidas/entropy.h"
#include "adidas/pairwise.h"
#include "adidas/simplex.h"
#include "adidas/strategy.h"

namespace adidas {

// How the Tsallis gradient differentiates the opponent's entropy term at x_j.
// kExact uses the derivative of s_j, H^j_{ij} BR_j^{1-p}, for both entropy
// terms. kAppendix uses x_j^{1-p} for the second term, as in the published
// closed form; the two agree at p = 1.
enum class TsallisGradientForm { kExact, kAppendix };

struct AdiGradientOptions {
  bool tangent_projection = false;
  TsallisGradientForm tsallis_form = TsallisGradientForm::kExact;
};

namespace internal {

inline Vector ClippedLog(const Vector& x) {
  Vector out(x.size());
  for (int k = 0; k < x.size(); ++k) {
    out[k] = x[k] > 0.0 ? std::max(std::log(x[k]), kLogitClip) : kLogitClip;
    out[k] = std::min(out[k], 0.0);
  }
  return out;
}

// Player j's own-strategy policy gradient and the vector that its payoff
// block maps into every other player's gradient.
struct PlayerTerms {
  Vector policy_gradient;
  Vector other_fx;
};

inline PlayerTerms ShannonTerms(const Vector& y, const Vector& x, double tau) {
  PlayerTerms t;
  if (tau >= kShannonMinTemperature) {
    const Vector br = Softmax(y, tau);
    const Matrix br_mat =
        (Matrix(br.asDiagonal()) - br * br.transpose()) / tau;
    const Vector br_pg = y - tau * (ClippedLog(br).array() + 1.0).matrix();
    t.other_fx = (br - x) + br_mat * br_pg;
  } else {
    t.other_fx = ArgmaxDistribution(y) - x;
  }
  t.policy_gradient = y;
  if (tau > 0.0) {
    t.policy_gradient -= tau * (ClippedLog(x).array() + 1.0).matrix();
  }
  return t;
}

inline PlayerTerms TsallisTerms(const Vector& y, const Vector& x, double p,
                                TsallisGradientForm form) {
  if (y.minCoeff() < 0.0) {
    throw DomainError("Tsallis gradient needs nonnegative payoffs (min " +
                      std::to_string(y.minCoeff()) + ")");
  }
  const BestResponse br_full = ComputeBestResponse(y, EntropyKind::Tsallis(p));
  const Vector& br = br_full.dist.probs();
  const double s = br_full.scale;
  const double br_inv_sparse = 1.0 - br.array().pow(p + 1.0).sum();
  const double x_inv_sparse = 1.0 - x.array().pow(p + 1.0).sum();
  const Vector br_pow = br.array().pow(1.0 - p).matrix();
  const Vector x_pow = form == TsallisGradientForm::kExact
                           ? br_pow
                           : Vector(x.array().pow(1.0 - p).matrix());
  PlayerTerms t;
  t.policy_gradient = y - s * x.array().pow(p).matrix();
  t.other_fx = (br - x) +
               (br_inv_sparse * br_pow - x_inv_sparse * x_pow) / (p + 1.0);
  return t;
}

inline void CheckShapes(const PairwiseMatrices& h, const PlayerVectors& y,
                        const StrategyProfile& x) {
  const int n = x.num_players();
  if (h.num_players() != n || static_cast<int>(y.size()) != n) {
    throw DimensionError("gradient inputs disagree on player count");
  }
  for (int i = 0; i < n; ++i) {
    if (y[i].size() != x[i].size() || h.action_counts()[i] != x[i].size()) {
      throw DimensionError("gradient inputs disagree on action count");
    }
  }
}

inline PlayerVectors Combine(const PairwiseMatrices& h,
                             const std::vector<PlayerTerms>& terms,
                             const AdiGradientOptions& opts) {
  const int n = h.num_players();
  PlayerVectors out(n);
  for (int i = 0; i < n; ++i) {
    Vector g = -terms[i].policy_gradient;
    for (int j = 0; j < n; ++j) {
      if (j == i) continue;
      // u_j(z_j, x_i, ...) = z_j^T H^j_{ji} x_i, so d/dx_i maps through the
      // transpose of player j's block.
      g += h.block(j, i).transpose() * terms[j].other_fx;
    }
    if (!g.allFinite()) {
      throw NumericError("non-finite ADI gradient for player " +
                         std::to_string(i));
    }
    out[i] = opts.tangent_projection ? TangentProject(g) : g;
  }
  return out;
}

}  // namespace internal

// Gradient of the Shannon-regularized loss at temperature tau. Below the
// smooth cutoff the best responses are hard argmaxes and their Jacobian term
// vanishes.
inline PlayerVectors AdiGradientShannon(const PairwiseMatrices& h,
                                        const PlayerVectors& y,
                                        const StrategyProfile& x, double tau,
                                        const AdiGradientOptions& opts = {}) {
  internal::CheckShapes(h, y, x);
  if (!(tau >= 0.0)) throw DomainError("temperature must be >= 0");
  std::vector<internal::PlayerTerms> terms;
  for (int j = 0; j < x.num_players(); ++j) {
    terms.push_back(internal::ShannonTerms(y[j], x[j].probs(), tau));
  }
  return internal::Combine(h, terms, opts);
}

// Gradient of the Tsallis-regularized loss with power p. Payoff gradients
// must be nonnegative.
inline PlayerVectors AdiGradientTsallis(const PairwiseMatrices& h,
                                        const PlayerVectors& y,
                                        const StrategyProfile& x, double p,
                                        const AdiGradientOptions& opts = {}) {
  internal::CheckShapes(h, y, x);
  if (!(p >= 0.0 && p <= 1.0)) throw DomainError("Tsallis power must be in [0, 1]");
  std::vector<internal::PlayerTerms> terms;
  for (int j = 0; j < x.num_players(); ++j) {
    terms.push_back(
        internal::TsallisTerms(y[j], x[j].probs(), p, opts.tsallis_form));
  }
  return internal::Combine(h, terms, opts);
}

inline PlayerVectors AdiGradient(const PairwiseMatrices& h,
                                 const PlayerVectors& y,
                                 const StrategyProfile& x,
                                 const EntropyKind& kind,
                                 const AdiGradientOptions& opts = {}) {
  switch (kind.family) {
    case EntropyFamily::kShannon:
      return AdiGradientShannon(h, y, x, kind.temperature, opts);
    case EntropyFamily::kTsallis:
      return AdiGradientTsallis(h, y, x, kind.temperature, opts);
    default:
      return AdiGradientShannon(h, y, x, 0.0, opts);
  }
}

// Per-player gradient at the symmetric profile (x, ..., x): the n - 1
// identical opponents contribute through the `other` view.
inline Vector AdiGradientSymmetric(const SymmetricPairwise& h, const Vector& y,
                                   const Vector& x, int num_players,
                                   const EntropyKind& kind,
                                   const AdiGradientOptions& opts = {}) {
  if (y.size() != x.size() || h.own.rows() != x.size() ||
      h.other.cols() != x.size()) {
    throw DimensionError("symmetric gradient inputs disagree on size");
  }
  internal::PlayerTerms t;
  switch (kind.family) {
    case EntropyFamily::kTsallis:
      t = internal::TsallisTerms(y, x, kind.temperature, opts.tsallis_form);
      break;
    case EntropyFamily::kShannon:
      t = internal::ShannonTerms(y, x, kind.temperature);
      break;
    default:
      t = internal::ShannonTerms(y, x, 0.0);
  }
  Vector g = -t.policy_gradient + (num_players - 1) * (h.other * t.other_fx);
  if (!g.allFinite()) throw NumericError("non-finite symmetric ADI gradient");
  return opts.tangent_projection ? TangentProject(g) : g;
}

}  // namespace adidas

#endif  // ADIDAS_ADI_GRADIENT_H_
