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

#ifndef ADIDAS_PAIRWISE_H_
#define ADIDAS_PAIRWISE_H_

#include <string>
#include <utility>
#include <vector>

#include "adidas/base.h"
#include "adidas/strategy.h"

namespace adidas {

// The bimatrix blocks H^i_{ij}: block(i, j)(r, c) is player i's expected
// payoff when i plays r and j plays c, everyone else following x.
class PairwiseMatrices {
 public:
  PairwiseMatrices() = default;
  explicit PairwiseMatrices(const std::vector<int>& action_counts)
      : action_counts_(action_counts),
        blocks_(action_counts.size() * action_counts.size()) {
    const int n = num_players();
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        if (i != j) {
          blocks_[i * n + j] = Matrix::Zero(action_counts[i], action_counts[j]);
        }
      }
    }
  }

  int num_players() const { return static_cast<int>(action_counts_.size()); }
  const std::vector<int>& action_counts() const { return action_counts_; }

  Matrix& block(int i, int j) { return blocks_[Index(i, j)]; }
  const Matrix& block(int i, int j) const { return blocks_[Index(i, j)]; }

  PairwiseMatrices& operator+=(const PairwiseMatrices& o) {
    for (size_t k = 0; k < blocks_.size(); ++k) blocks_[k] += o.blocks_[k];
    return *this;
  }
  PairwiseMatrices& operator*=(double c) {
    for (Matrix& b : blocks_) b *= c;
    return *this;
  }

  bool AllFinite() const {
    for (const Matrix& b : blocks_) {
      if (!b.allFinite()) return false;
    }
    return true;
  }

 private:
  int Index(int i, int j) const {
    const int n = num_players();
    if (i < 0 || j < 0 || i >= n || j >= n || i == j) {
      throw DimensionError("no pairwise block (" + std::to_string(i) + ", " +
                           std::to_string(j) + ")");
    }
    return i * n + j;
  }

  std::vector<int> action_counts_;
  std::vector<Matrix> blocks_;
};

// The two views a symmetric solver needs: own(r, c) is the payoff to the
// focal player playing r against one opponent playing c, other(r, c) the
// payoff to that opponent. Both average over the remaining n - 2 players.
struct SymmetricPairwise {
  Matrix own;
  Matrix other;
};

// Average over j != i of H^i_{ij} x_j; an estimate of player i's payoff
// gradient that is exact when the blocks are.
inline Vector PayoffGradientFromEstimates(const PairwiseMatrices& h,
                                          const StrategyProfile& x, int i) {
  const int n = h.num_players();
  if (x.num_players() != n) throw DimensionError("profile size mismatch");
  if (n < 2) throw DimensionError("pairwise estimates need two players");
  Vector g = Vector::Zero(h.action_counts()[i]);
  for (int j = 0; j < n; ++j) {
    if (j == i) continue;
    g += h.block(i, j) * x[j].probs();
  }
  return g / static_cast<double>(n - 1);
}

inline PlayerVectors PayoffGradientsFromEstimates(const PairwiseMatrices& h,
                                                  const StrategyProfile& x) {
  PlayerVectors out;
  for (int i = 0; i < h.num_players(); ++i) {
    out.push_back(PayoffGradientFromEstimates(h, x, i));
  }
  return out;
}

}  // namespace adidas

#endif  // ADIDAS_PAIRWISE_H_
