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

// Bias of sampled ADI gradients: the distance between the mean of many
// sampled gradients and the exact gradient, over temperatures and sample
// counts.

#ifndef ADIDAS_HARNESS_BIAS_H_
#define ADIDAS_HARNESS_BIAS_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <vector>

#include "adidas/adi_gradient.h"
#include "adidas/entropy.h"
#include "adidas/expectation.h"
#include "adidas/payoff_oracle.h"
#include "adidas/sampling.h"
#include "adidas/strategy.h"
#include "adidas/symmetric_game.h"

namespace adidas::harness {

struct BiasRow {
  double temperature = 0.0;
  int samples = 0;
  // ||mean sampled gradient - exact gradient||_2.
  double distance = 0.0;
  // Angle between the two in degrees.
  double angle_deg = 0.0;
  double exact_norm = 0.0;
};

struct BiasOptions {
  std::vector<double> temperatures = {0.0, 0.01, 0.05, 0.1, 1.0};
  std::vector<int> samples = {1, 10, 100};
  int trials = 100;
  std::uint64_t seed = 0;
  EntropyFamily entropy = EntropyFamily::kShannon;
  // Use exact pairwise blocks instead of samples; the bias is then zero.
  bool exact_blocks = false;
};

namespace internal {

inline Vector Flatten(const PlayerVectors& v) {
  int size = 0;
  for (const Vector& x : v) size += x.size();
  Vector out(size);
  int k = 0;
  for (const Vector& x : v) {
    out.segment(k, x.size()) = x;
    k += x.size();
  }
  return out;
}

inline BiasRow CompareGradients(const Vector& mean, const Vector& exact,
                                double temperature, int samples) {
  BiasRow row;
  row.temperature = temperature;
  row.samples = samples;
  row.distance = (mean - exact).norm();
  row.exact_norm = exact.norm();
  const double denom = mean.norm() * exact.norm();
  double c = denom > 0.0 ? mean.dot(exact) / denom : 1.0;
  c = std::clamp(c, -1.0, 1.0);
  row.angle_deg = std::acos(c) * 180.0 / std::numbers::pi;
  return row;
}

}  // namespace internal

// General n-player version. Each trial draws `samples` joint actions,
// estimates the pairwise blocks and the payoff gradients from them and
// evaluates the ADI gradient at x.
inline std::vector<BiasRow> MeasureGradientBias(const PayoffOracle& oracle,
                                                const NormalFormGame& game,
                                                const StrategyProfile& x,
                                                const BiasOptions& opts) {
  const EntropyKind base = EntropyKind{opts.entropy, 0.0};
  const PairwiseMatrices h_exact = AllPairwiseExact(game, x);
  const PlayerVectors y_exact = PayoffGradients(game, x);
  std::vector<BiasRow> out;
  for (double t : opts.temperatures) {
    const EntropyKind kind = base.WithTemperature(t);
    const Vector exact = internal::Flatten(AdiGradient(h_exact, y_exact, x, kind));
    for (int s : opts.samples) {
      Vector mean = Vector::Zero(exact.size());
      for (int trial = 0; trial < opts.trials; ++trial) {
        PairwiseMatrices h = h_exact;
        if (!opts.exact_blocks) {
          SampleConfig sc;
          sc.repeats = s;
          sc.seed = opts.seed;
          h = EstimatePairwiseMatrices(oracle, x, sc, trial);
        }
        const PlayerVectors y = PayoffGradientsFromEstimates(h, x);
        mean += internal::Flatten(AdiGradient(h, y, x, kind));
      }
      mean /= opts.trials;
      out.push_back(internal::CompareGradients(mean, exact, t, s));
    }
  }
  return out;
}

// Symmetric version at the profile (x, ..., x).
inline std::vector<BiasRow> MeasureSymmetricGradientBias(
    const PayoffOracle& oracle, const SymmetricGame& game, const Vector& x,
    const BiasOptions& opts) {
  const EntropyKind base = EntropyKind{opts.entropy, 0.0};
  const int n = game.num_players();
  const SymmetricPairwise h_exact = SymmetricPairwiseExact(game, x);
  const Vector y_exact = SymmetricPayoffGradient(game, x);
  std::vector<BiasRow> out;
  for (double t : opts.temperatures) {
    const EntropyKind kind = base.WithTemperature(t);
    const Vector exact = AdiGradientSymmetric(h_exact, y_exact, x, n, kind);
    for (int s : opts.samples) {
      Vector mean = Vector::Zero(exact.size());
      for (int trial = 0; trial < opts.trials; ++trial) {
        SymmetricPairwise h = h_exact;
        if (!opts.exact_blocks) {
          SampleConfig sc;
          sc.repeats = s;
          sc.seed = opts.seed;
          h = EstimateSymmetricPairwise(oracle, x, sc, trial);
        }
        mean += AdiGradientSymmetric(h, h.own * x, x, n, kind);
      }
      mean /= opts.trials;
      out.push_back(internal::CompareGradients(mean, exact, t, s));
    }
  }
  return out;
}

}  // namespace adidas::harness

#endif  // ADIDAS_HARNESS_BIAS_H_
