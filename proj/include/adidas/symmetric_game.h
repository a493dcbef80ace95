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

#ifndef ADIDAS_SYMMETRIC_GAME_H_
#define ADIDAS_SYMMETRIC_GAME_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adidas/base.h"
#include "adidas/game.h"
#include "adidas/multiset.h"

namespace adidas {

// Symmetric n-player game over m actions stored in compressed form.
//
// Keys are sorted multisets of all n actions (colex rank). For every key we
// keep n values: entry k is the payoff to a player whose own action is the
// k-th element of the key, facing the remaining n - 1 elements. Positions with
// equal actions therefore hold equal values; only the first of each run is
// ever read.
class SymmetricGame : public NormalFormGame {
 public:
  SymmetricGame(int players, int actions, std::vector<double> payoffs)
      : players_(players),
        actions_(actions),
        action_counts_(players, actions),
        ranker_(actions, players),
        payoffs_(std::move(payoffs)) {
    if (players < 1 || actions < 1) {
      throw DimensionError("symmetric game needs players and actions");
    }
    const std::uint64_t expected = CheckedMul(ranker_.count(), players);
    if (payoffs_.size() != expected) {
      throw DimensionError("expected " + std::to_string(expected) +
                           " symmetric payoffs, got " +
                           std::to_string(payoffs_.size()));
    }
    for (double v : payoffs_) {
      if (!std::isfinite(v)) throw DomainError("non-finite payoff");
    }
  }

  // Builds the table from f(own_action, sorted_opponent_actions).
  template <typename F>
  static SymmetricGame FromFunction(int players, int actions, F&& f) {
    if (players < 1 || actions < 1) {
      throw DimensionError("symmetric game needs players and actions");
    }
    const std::uint64_t count = MultisetCount(actions, players);
    std::vector<double> payoffs(CheckedMul(count, players));
    std::vector<int> opponents(players - 1);
    std::uint64_t rank = 0;
    ForEachMultiset(actions, players, [&](std::span<const int> ms) {
      double* out = &payoffs[rank * players];
      for (int k = 0; k < players; ++k) {
        if (k > 0 && ms[k] == ms[k - 1]) {
          out[k] = out[k - 1];
          continue;
        }
        for (int j = 0, o = 0; j < players; ++j) {
          if (j != k) opponents[o++] = ms[j];
        }
        out[k] = f(ms[k], std::span<const int>(opponents));
      }
      ++rank;
    });
    return SymmetricGame(players, actions, std::move(payoffs));
  }

  // Compresses a dense tensor; throws if it is not symmetric.
  static SymmetricGame FromTensor(const GameTensor& g, double tol = 0.0) {
    if (!g.IsSymmetric(tol)) throw DomainError("tensor is not symmetric");
    const int n = g.num_players();
    JointAction joint(n);
    return FromFunction(n, g.num_actions(0),
                        [&](int own, std::span<const int> opp) {
                          joint[0] = own;
                          std::copy(opp.begin(), opp.end(), joint.begin() + 1);
                          return g.Payoff(0, joint);
                        });
  }

  int num_players() const override { return players_; }
  const std::vector<int>& action_counts() const override {
    return action_counts_;
  }
  bool symmetric() const override { return true; }

  int actions() const { return actions_; }
  std::uint64_t num_entries() const { return ranker_.count(); }
  const MultisetRanker& ranker() const { return ranker_; }
  const std::vector<double>& payoffs() const { return payoffs_; }

  double Payoff(int player, std::span<const int> joint) const override {
    std::vector<int> sorted(joint.begin(), joint.end());
    std::sort(sorted.begin(), sorted.end());
    return Lookup(sorted, joint[player]);
  }

  // Payoff to a player choosing `own` against the sorted opponent multiset.
  double OwnPayoff(int own, std::span<const int> sorted_opponents) const {
    thread_local std::vector<int> full;
    full.resize(players_);
    int k = 0, pos = -1;
    for (int a : sorted_opponents) {
      if (pos < 0 && own <= a) {
        pos = k;
        full[k++] = own;
      }
      full[k++] = a;
    }
    if (pos < 0) {
      pos = k;
      full[k] = own;
    }
    return payoffs_[ranker_.Rank(full) * players_ + pos];
  }

  // Payoff at a sorted full multiset to a player whose action is `own`
  // (which must occur in `sorted`).
  double Lookup(std::span<const int> sorted, int own) const {
    const int pos = static_cast<int>(
        std::lower_bound(sorted.begin(), sorted.end(), own) - sorted.begin());
    return payoffs_[ranker_.Rank(sorted) * players_ + pos];
  }

  // Dense tensor; guarded by `max_entries`.
  GameTensor Expand(std::uint64_t max_entries = 10'000'000) const {
    if (DenseSize() > max_entries) {
      throw DomainError("dense expansion has " + std::to_string(DenseSize()) +
                        " entries, budget " + std::to_string(max_entries));
    }
    return GameTensor::FromGame(*this);
  }

 private:
  int players_;
  int actions_;
  std::vector<int> action_counts_;
  MultisetRanker ranker_;
  std::vector<double> payoffs_;
};

}  // namespace adidas

#endif  // ADIDAS_SYMMETRIC_GAME_H_
