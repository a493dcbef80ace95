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

#ifndef ADIDAS_ENTROPY_H_
#define ADIDAS_ENTROPY_H_

#include <cmath>
#include <string>

#include "adidas/base.h"
#include "adidas/strategy.h"

namespace adidas {

// Below these the smooth best response under/overflows and the hard
// (zero-temperature) limit is used instead.
inline constexpr double kShannonMinTemperature = 1e-3;
inline constexpr double kTsallisMinPower = 1e-2;
// Lower clip for log-probabilities.
inline constexpr double kLogitClip = -1e5;

enum class EntropyFamily { kNone, kShannon, kTsallis };

// Regularizer family and its temperature (tau for Shannon, p for Tsallis).
struct EntropyKind {
  EntropyFamily family = EntropyFamily::kNone;
  double temperature = 0.0;

  static EntropyKind None() { return {EntropyFamily::kNone, 0.0}; }
  static EntropyKind Shannon(double tau) {
    if (!(tau >= 0.0) || !std::isfinite(tau)) {
      throw DomainError("Shannon temperature must be finite and >= 0");
    }
    return {EntropyFamily::kShannon, tau};
  }
  static EntropyKind Tsallis(double p) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw DomainError("Tsallis power must lie in [0, 1]");
    }
    return {EntropyFamily::kTsallis, p};
  }

  EntropyKind WithTemperature(double t) const {
    switch (family) {
      case EntropyFamily::kShannon: return Shannon(t);
      case EntropyFamily::kTsallis: return Tsallis(t);
      default: return None();
    }
  }

  // True when best responses use the argmax limit.
  bool hard() const {
    switch (family) {
      case EntropyFamily::kShannon: return temperature < kShannonMinTemperature;
      case EntropyFamily::kTsallis: return temperature < kTsallisMinPower;
      default: return true;
    }
  }

  std::string Name() const {
    switch (family) {
      case EntropyFamily::kShannon: return "shannon";
      case EntropyFamily::kTsallis: return "tsallis";
      default: return "none";
    }
  }
};

// -sum x ln x with 0 ln 0 = 0.
inline double ShannonEntropy(const Vector& x) {
  double h = 0.0;
  for (double v : x) {
    if (v > 0.0) h -= v * std::log(v);
  }
  return h;
}

// Regularizer value S(x_k). `scale` is s_k for Tsallis and ignored otherwise.
inline double EntropyValue(const Vector& x, const EntropyKind& kind,
                           double scale = 0.0) {
  switch (kind.family) {
    case EntropyFamily::kShannon:
      return kind.temperature * ShannonEntropy(x);
    case EntropyFamily::kTsallis: {
      const double p = kind.temperature;
      return scale / (p + 1.0) * (1.0 - x.array().pow(p + 1.0).sum());
    }
    default:
      return 0.0;
  }
}

// ||y||_{1/p} for nonnegative y, computed relative to max(y) so large powers
// do not overflow.
inline double TsallisScale(const Vector& y, double p) {
  const double top = y.maxCoeff();
  if (top <= 0.0) return 0.0;
  if (p < kTsallisMinPower) return top;
  const double sum = (y / top).array().pow(1.0 / p).sum();
  return top * std::pow(sum, p);
}

struct BestResponse {
  MixedStrategy dist;
  // s_k for Tsallis (||y||_{1/p}, or ||y||_inf in the hard limit); 0 else.
  double scale = 0.0;
};

// Uniform over the exact maximizers of y.
inline Vector ArgmaxDistribution(const Vector& y) {
  const double top = y.maxCoeff();
  Vector out = (y.array() == top).cast<double>().matrix();
  return out / out.sum();
}

// Numerically stable softmax(y / tau).
inline Vector Softmax(const Vector& y, double tau) {
  Vector z = ((y.array() - y.maxCoeff()) / tau).exp().matrix();
  return z / z.sum();
}

inline BestResponse ComputeBestResponse(const Vector& y,
                                        const EntropyKind& kind) {
  if (y.size() == 0) throw DimensionError("empty payoff gradient");
  if (!y.allFinite()) throw NumericError("non-finite payoff gradient");
  if (kind.family == EntropyFamily::kTsallis && y.minCoeff() < 0.0) {
    throw DomainError("Tsallis best response needs nonnegative payoffs (min " +
                      std::to_string(y.minCoeff()) + ")");
  }
  BestResponse br;
  if (kind.family == EntropyFamily::kTsallis) {
    br.scale = TsallisScale(y, kind.temperature);
  }
  if (kind.hard()) {
    br.dist = MixedStrategy::Raw(ArgmaxDistribution(y));
  } else if (kind.family == EntropyFamily::kShannon) {
    br.dist = MixedStrategy::Raw(Softmax(y, kind.temperature));
  } else if (br.scale == 0.0) {
    br.dist = MixedStrategy::Uniform(static_cast<int>(y.size()));
  } else {
    br.dist = MixedStrategy::Raw(
        (y / br.scale).array().pow(1.0 / kind.temperature).matrix());
  }
  return br;
}

}  // namespace adidas

#endif  // ADIDAS_ENTROPY_H_
