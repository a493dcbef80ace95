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

#ifndef ADIDAS_PAYOFF_ORACLE_H_
#define ADIDAS_PAYOFF_ORACLE_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "adidas/base.h"
#include "adidas/game.h"
#include "adidas/rng.h"

namespace adidas {

// Query access to payoffs, possibly stochastic. Every scalar returned bumps
// the query counter by one. Implementations must tolerate concurrent
// queries; randomness comes from the caller's generator only.
class PayoffOracle {
 public:
  virtual ~PayoffOracle() = default;

  virtual int num_players() const = 0;
  virtual const std::vector<int>& action_counts() const = 0;
  virtual bool deterministic() const = 0;
  virtual bool symmetric() const { return false; }

  double Query(int player, std::span<const int> joint, CounterRng& rng) const {
    queries_.fetch_add(1, std::memory_order_relaxed);
    return Sample(player, joint, rng);
  }

  std::uint64_t queries() const {
    return queries_.load(std::memory_order_relaxed);
  }
  void ResetQueries() { queries_.store(0, std::memory_order_relaxed); }

  // The underlying exact game when one is available (for exact gradients and
  // logging of true ADI); nullptr for pure black boxes.
  virtual const NormalFormGame* exact_game() const { return nullptr; }

 protected:
  virtual double Sample(int player, std::span<const int> joint,
                        CounterRng& rng) const = 0;

 private:
  mutable std::atomic<std::uint64_t> queries_{0};
};

// Deterministic oracle backed by a game held by shared pointer.
class GameOracle : public PayoffOracle {
 public:
  explicit GameOracle(std::shared_ptr<const NormalFormGame> game)
      : game_(std::move(game)), symmetric_(game_->symmetric()) {}

  int num_players() const override { return game_->num_players(); }
  const std::vector<int>& action_counts() const override {
    return game_->action_counts();
  }
  bool deterministic() const override { return true; }
  bool symmetric() const override { return symmetric_; }
  const NormalFormGame* exact_game() const override { return game_.get(); }

 protected:
  double Sample(int player, std::span<const int> joint,
                CounterRng&) const override {
    return game_->Payoff(player, joint);
  }

 private:
  std::shared_ptr<const NormalFormGame> game_;
  bool symmetric_;
};

// Adds a constant to every payoff of another oracle; used to make payoffs
// positive for Tsallis regularization.
class OffsetOracle : public PayoffOracle {
 public:
  OffsetOracle(std::shared_ptr<const PayoffOracle> base, double offset)
      : base_(std::move(base)), offset_(offset) {}

  int num_players() const override { return base_->num_players(); }
  const std::vector<int>& action_counts() const override {
    return base_->action_counts();
  }
  bool deterministic() const override { return base_->deterministic(); }
  bool symmetric() const override { return base_->symmetric(); }
  double offset() const { return offset_; }

 protected:
  double Sample(int player, std::span<const int> joint,
                CounterRng& rng) const override {
    return base_->Query(player, joint, rng) + offset_;
  }

 private:
  std::shared_ptr<const PayoffOracle> base_;
  double offset_;
};

}  // namespace adidas

#endif  // ADIDAS_PAYOFF_ORACLE_H_
