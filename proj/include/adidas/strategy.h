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

#ifndef ADIDAS_STRATEGY_H_
#define ADIDAS_STRATEGY_H_

#include <cmath>
#include <cstdint>
#include <cstring>
#include <string>
#include <utility>
#include <vector>

#include "adidas/base.h"

namespace adidas {

// Pure action per player.
using JointAction = std::vector<int>;

// A probability vector over one player's actions.
class MixedStrategy {
 public:
  MixedStrategy() = default;

  // Validates `probs`. Entries must be finite and >= -1e-6 and the total must
  // be within 1e-6 of one; small violations are clipped and renormalized.
  explicit MixedStrategy(Vector probs) : probs_(std::move(probs)) {
    if (probs_.size() == 0) throw DimensionError("empty mixed strategy");
    if (!probs_.allFinite()) throw DomainError("non-finite strategy entry");
    if (probs_.minCoeff() < -kRenormalizeTolerance) {
      throw DomainError("negative strategy entry " +
                        std::to_string(probs_.minCoeff()));
    }
    probs_ = probs_.cwiseMax(0.0);
    const double total = probs_.sum();
    if (std::abs(total - 1.0) > kRenormalizeTolerance) {
      throw DomainError("strategy sums to " + std::to_string(total));
    }
    if (std::abs(total - 1.0) > 0.0) probs_ /= total;
  }

  static MixedStrategy Uniform(int m) {
    return MixedStrategy(Unchecked, adidas::Uniform(m));
  }
  static MixedStrategy Pure(int m, int action) {
    Vector v = Vector::Zero(m);
    v[action] = 1.0;
    return MixedStrategy(Unchecked, std::move(v));
  }
  // Skips validation; for finite-difference probes and other off-simplex
  // evaluations of the ambient (multilinear) extension.
  static MixedStrategy Raw(Vector v) {
    return MixedStrategy(Unchecked, std::move(v));
  }

  const Vector& probs() const { return probs_; }
  int size() const { return static_cast<int>(probs_.size()); }
  double operator[](int a) const { return probs_[a]; }

  bool IsValid(double tol = kSimplexTolerance) const {
    return probs_.size() > 0 && probs_.allFinite() && probs_.minCoeff() >= 0 &&
           std::abs(probs_.sum() - 1.0) <= tol;
  }

 private:
  struct UncheckedTag {};
  static constexpr UncheckedTag Unchecked{};
  MixedStrategy(UncheckedTag, Vector v) : probs_(std::move(v)) {}

  Vector probs_;
};

// One mixed strategy per player.
class StrategyProfile {
 public:
  StrategyProfile() = default;
  explicit StrategyProfile(std::vector<MixedStrategy> strategies)
      : strategies_(std::move(strategies)) {}
  // Validating constructor from raw vectors.
  explicit StrategyProfile(const PlayerVectors& vs) {
    strategies_.reserve(vs.size());
    for (const Vector& v : vs) strategies_.emplace_back(v);
  }

  static StrategyProfile Uniform(const std::vector<int>& action_counts) {
    std::vector<MixedStrategy> s;
    for (int m : action_counts) s.push_back(MixedStrategy::Uniform(m));
    return StrategyProfile(std::move(s));
  }
  static StrategyProfile Pure(const std::vector<int>& action_counts,
                              const JointAction& a) {
    std::vector<MixedStrategy> s;
    for (size_t i = 0; i < action_counts.size(); ++i) {
      s.push_back(MixedStrategy::Pure(action_counts[i], a[i]));
    }
    return StrategyProfile(std::move(s));
  }
  // `n` copies of the same strategy.
  static StrategyProfile Symmetric(int n, const MixedStrategy& x) {
    return StrategyProfile(std::vector<MixedStrategy>(n, x));
  }
  static StrategyProfile Raw(const PlayerVectors& vs) {
    std::vector<MixedStrategy> s;
    for (const Vector& v : vs) s.push_back(MixedStrategy::Raw(v));
    return StrategyProfile(std::move(s));
  }

  int num_players() const { return static_cast<int>(strategies_.size()); }
  const MixedStrategy& operator[](int i) const { return strategies_[i]; }
  MixedStrategy& operator[](int i) { return strategies_[i]; }
  const std::vector<MixedStrategy>& strategies() const { return strategies_; }

  std::vector<int> action_counts() const {
    std::vector<int> m;
    for (const auto& s : strategies_) m.push_back(s.size());
    return m;
  }

  PlayerVectors vectors() const {
    PlayerVectors out;
    for (const auto& s : strategies_) out.push_back(s.probs());
    return out;
  }

  bool IsValid(double tol = kSimplexTolerance) const {
    for (const auto& s : strategies_) {
      if (!s.IsValid(tol)) return false;
    }
    return true;
  }

  // FNV-1a over the IEEE bit patterns; a compact fingerprint for logs.
  std::uint64_t Hash() const {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (const auto& s : strategies_) {
      for (int k = 0; k < s.size(); ++k) {
        std::uint64_t bits;
        const double v = s[k];
        std::memcpy(&bits, &v, sizeof bits);
        for (int byte = 0; byte < 8; ++byte) {
          h ^= (bits >> (8 * byte)) & 0xff;
          h *= 0x100000001b3ULL;
        }
      }
    }
    return h;
  }

 private:
  std::vector<MixedStrategy> strategies_;
};

}  // namespace adidas

#endif  // ADIDAS_STRATEGY_H_
