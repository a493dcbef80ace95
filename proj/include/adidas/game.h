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

#ifndef ADIDAS_GAME_H_
#define ADIDAS_GAME_H_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <numeric>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "adidas/base.h"
#include "adidas/multiset.h"
#include "adidas/strategy.h"

namespace adidas {

// Read access to u_i(a) for a finite normal-form game. Implementations are
// immutable after construction and safe to share across threads.
class NormalFormGame {
 public:
  virtual ~NormalFormGame() = default;

  virtual int num_players() const = 0;
  virtual const std::vector<int>& action_counts() const = 0;
  virtual double Payoff(int player, std::span<const int> joint) const = 0;
  // True when payoffs are invariant under permutations of the players.
  virtual bool symmetric() const { return false; }

  int num_actions(int player) const { return action_counts()[player]; }

  // Number of scalar entries of the dense n x m_1 x ... x m_n tensor
  // (saturates at UINT64_MAX).
  std::uint64_t DenseSize() const {
    std::uint64_t size = num_players();
    for (int m : action_counts()) {
      if (__builtin_mul_overflow(size, static_cast<std::uint64_t>(m), &size)) {
        return ~std::uint64_t{0};
      }
    }
    return size;
  }

  void CheckPlayer(int i) const {
    if (i < 0 || i >= num_players()) {
      throw DimensionError("player " + std::to_string(i) + " out of range");
    }
  }

  void CheckProfile(const StrategyProfile& x) const {
    if (x.num_players() != num_players()) {
      throw DimensionError("profile has " + std::to_string(x.num_players()) +
                           " players, game has " +
                           std::to_string(num_players()));
    }
    for (int i = 0; i < num_players(); ++i) {
      if (x[i].size() != num_actions(i)) {
        throw DimensionError("player " + std::to_string(i) + " strategy has " +
                             std::to_string(x[i].size()) + " entries, game has " +
                             std::to_string(num_actions(i)) + " actions");
      }
    }
  }

  void CheckJointAction(std::span<const int> a) const {
    if (static_cast<int>(a.size()) != num_players()) {
      throw DimensionError("joint action length mismatch");
    }
    for (int i = 0; i < num_players(); ++i) {
      if (a[i] < 0 || a[i] >= num_actions(i)) {
        throw DimensionError("action " + std::to_string(a[i]) +
                             " out of range for player " + std::to_string(i));
      }
    }
  }
};

// Dense payoff tensor U[i, a_1, ..., a_n]. Joint actions are stored with the
// first player's action varying fastest (Gambit order).
class GameTensor : public NormalFormGame {
 public:
  GameTensor() = default;

  // `payoffs` holds, for each joint action in Gambit order, the payoffs of
  // all n players (player 0 first).
  GameTensor(std::vector<int> action_counts, std::vector<double> payoffs)
      : action_counts_(std::move(action_counts)), payoffs_(std::move(payoffs)) {
    if (action_counts_.empty()) throw DimensionError("game needs players");
    for (int m : action_counts_) {
      if (m < 1) throw DimensionError("every player needs an action");
    }
    num_outcomes_ = 1;
    for (int m : action_counts_) {
      num_outcomes_ = CheckedMul(num_outcomes_, static_cast<std::uint64_t>(m));
    }
    const std::uint64_t expected = CheckedMul(num_outcomes_, num_players());
    if (payoffs_.size() != expected) {
      throw DimensionError("expected " + std::to_string(expected) +
                           " payoffs, got " + std::to_string(payoffs_.size()));
    }
    for (double v : payoffs_) {
      if (!std::isfinite(v)) throw DomainError("non-finite payoff");
    }
    strides_.resize(action_counts_.size());
    std::uint64_t stride = 1;
    for (size_t i = 0; i < action_counts_.size(); ++i) {
      strides_[i] = stride;
      stride *= action_counts_[i];
    }
  }

  // Builds a tensor by evaluating `f(player, joint)` at every entry.
  template <typename F>
  static GameTensor FromFunction(std::vector<int> action_counts, F&& f) {
    const int n = static_cast<int>(action_counts.size());
    std::uint64_t outcomes = 1;
    for (int m : action_counts) outcomes = CheckedMul(outcomes, m);
    std::vector<double> payoffs;
    payoffs.reserve(CheckedMul(outcomes, n));
    JointAction a(n, 0);
    for (std::uint64_t o = 0; o < outcomes; ++o) {
      for (int i = 0; i < n; ++i) payoffs.push_back(f(i, std::span<const int>(a)));
      for (int i = 0; i < n; ++i) {
        if (++a[i] < action_counts[i]) break;
        a[i] = 0;
      }
    }
    return GameTensor(std::move(action_counts), std::move(payoffs));
  }

  // Two-player game from row/column payoff matrices.
  static GameTensor FromBimatrix(const Matrix& row, const Matrix& col) {
    if (row.rows() != col.rows() || row.cols() != col.cols()) {
      throw DimensionError("bimatrix shapes differ");
    }
    return FromFunction({static_cast<int>(row.rows()), static_cast<int>(row.cols())},
                        [&](int i, std::span<const int> a) {
                          return i == 0 ? row(a[0], a[1]) : col(a[0], a[1]);
                        });
  }

  // Copies any game into dense form.
  static GameTensor FromGame(const NormalFormGame& g) {
    return FromFunction(g.action_counts(), [&](int i, std::span<const int> a) {
      return g.Payoff(i, a);
    });
  }

  int num_players() const override {
    return static_cast<int>(action_counts_.size());
  }
  const std::vector<int>& action_counts() const override {
    return action_counts_;
  }

  double Payoff(int player, std::span<const int> joint) const override {
    return payoffs_[OutcomeIndex(joint) * num_players() + player];
  }

  std::uint64_t OutcomeIndex(std::span<const int> joint) const {
    std::uint64_t idx = 0;
    for (size_t i = 0; i < strides_.size(); ++i) idx += joint[i] * strides_[i];
    return idx;
  }

  std::uint64_t num_outcomes() const { return num_outcomes_; }
  const std::vector<double>& payoffs() const { return payoffs_; }

  double MinPayoff() const {
    return *std::min_element(payoffs_.begin(), payoffs_.end());
  }
  double MaxPayoff() const {
    return *std::max_element(payoffs_.begin(), payoffs_.end());
  }

  // Same game with `c` added to every payoff.
  GameTensor Offset(double c) const {
    std::vector<double> p = payoffs_;
    for (double& v : p) v += c;
    return GameTensor(action_counts_, std::move(p));
  }
  GameTensor Scaled(double c) const {
    std::vector<double> p = payoffs_;
    for (double& v : p) v *= c;
    return GameTensor(action_counts_, std::move(p));
  }

  // Player i's payoff table in a two-player game.
  Matrix PayoffMatrix(int player) const {
    if (num_players() != 2) throw DimensionError("PayoffMatrix needs 2 players");
    Matrix out(action_counts_[0], action_counts_[1]);
    int a[2];
    for (a[0] = 0; a[0] < action_counts_[0]; ++a[0]) {
      for (a[1] = 0; a[1] < action_counts_[1]; ++a[1]) {
        out(a[0], a[1]) = Payoff(player, std::span<const int>(a, 2));
      }
    }
    return out;
  }

  // Exhaustive check that payoffs are invariant to relabelling players.
  bool IsSymmetric(double tol = 0.0) const {
    const int n = num_players();
    for (int m : action_counts_) {
      if (m != action_counts_[0]) return false;
    }
    // Swapping players 0 and k for every k generates the symmetric group.
    JointAction a(n, 0), b(n);
    for (std::uint64_t o = 0; o < num_outcomes_; ++o) {
      for (int k = 1; k < n; ++k) {
        b = a;
        std::swap(b[0], b[k]);
        for (int i = 0; i < n; ++i) {
          const int j = (i == 0) ? k : (i == k ? 0 : i);
          if (std::abs(Payoff(i, a) - Payoff(j, b)) > tol) return false;
        }
      }
      for (int i = 0; i < n; ++i) {
        if (++a[i] < action_counts_[i]) break;
        a[i] = 0;
      }
    }
    return true;
  }

  bool symmetric() const override { return IsSymmetric(); }

  bool operator==(const GameTensor& other) const {
    return action_counts_ == other.action_counts_ && payoffs_ == other.payoffs_;
  }

 private:
  std::vector<int> action_counts_;
  std::vector<double> payoffs_;
  std::vector<std::uint64_t> strides_;
  std::uint64_t num_outcomes_ = 0;
};

}  // namespace adidas

#endif  // ADIDAS_GAME_H_
