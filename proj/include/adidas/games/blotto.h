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

// Colonel Blotto: every player splits `coins` identical coins over `fields`
// battlefields. A field goes to the strictly largest allocation; tied leaders
// share it evenly. A player's payoff is (fields won - fields lost) / fields,
// where a share w of a field counts as w won and 1 - w lost.

#ifndef ADIDAS_GAMES_BLOTTO_H_
#define ADIDAS_GAMES_BLOTTO_H_

#include <algorithm>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "adidas/base.h"
#include "adidas/game.h"
#include "adidas/multiset.h"
#include "adidas/symmetric_game.h"

namespace adidas::games {

struct BlottoSpec {
  int coins = 10;
  int fields = 3;
  int players = 4;

  void Validate() const {
    if (coins < 1) throw ConfigError("blotto needs at least one coin");
    if (fields < 2) throw ConfigError("blotto needs at least two fields");
    if (players < 2) throw ConfigError("blotto needs at least two players");
  }
};

// All allocations of `coins` over `fields`, in lexicographic order.
inline std::vector<std::vector<int>> BlottoAllocations(int coins, int fields) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(fields, 0);
  auto rec = [&](auto&& self, int field, int left) -> void {
    if (field == fields - 1) {
      cur[field] = left;
      out.push_back(cur);
      return;
    }
    for (int c = 0; c <= left; ++c) {
      cur[field] = c;
      self(self, field + 1, left - c);
    }
  };
  rec(rec, 0, coins);
  return out;
}

inline int BlottoActionCount(int coins, int fields) {
  return static_cast<int>(Binomial(coins + fields - 1, fields - 1));
}

inline int BlottoActionIndex(const std::vector<std::vector<int>>& allocations,
                             const std::vector<int>& allocation) {
  auto it = std::find(allocations.begin(), allocations.end(), allocation);
  if (it == allocations.end()) throw DomainError("not a valid allocation");
  return static_cast<int>(it - allocations.begin());
}

// Payoff to the player holding `own` against the opponents' allocations.
inline double BlottoPayoff(const std::vector<int>& own,
                           std::span<const std::vector<int>* const> opponents) {
  const int fields = static_cast<int>(own.size());
  double total = 0.0;
  for (int f = 0; f < fields; ++f) {
    int top = own[f];
    for (const auto* o : opponents) top = std::max(top, (*o)[f]);
    double share = 0.0;
    if (own[f] == top) {
      int leaders = 1;
      for (const auto* o : opponents) leaders += (*o)[f] == top;
      share = 1.0 / leaders;
    }
    total += 2.0 * share - 1.0;
  }
  return total / fields;
}

// The game in compressed symmetric form.
inline SymmetricGame MakeBlotto(const BlottoSpec& spec) {
  spec.Validate();
  const auto allocations = BlottoAllocations(spec.coins, spec.fields);
  std::vector<const std::vector<int>*> opp(spec.players - 1);
  return SymmetricGame::FromFunction(
      spec.players, static_cast<int>(allocations.size()),
      [&](int own, std::span<const int> others) {
        for (size_t k = 0; k < others.size(); ++k) opp[k] = &allocations[others[k]];
        return BlottoPayoff(allocations[own], opp);
      });
}

// Dense form; throws when the tensor exceeds `max_entries`.
inline GameTensor MakeBlottoTensor(const BlottoSpec& spec,
                                   std::uint64_t max_entries = 10'000'000) {
  spec.Validate();
  const std::uint64_t m = BlottoActionCount(spec.coins, spec.fields);
  const std::uint64_t size = CheckedMul(CheckedPow(m, spec.players), spec.players);
  if (size > max_entries) {
    throw DomainError("blotto tensor has " + std::to_string(size) +
                      " entries, budget " + std::to_string(max_entries));
  }
  return MakeBlotto(spec).Expand(max_entries);
}

}  // namespace adidas::games

#endif  // ADIDAS_GAMES_BLOTTO_H_
