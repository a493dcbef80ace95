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

// Size of a payoff tensor versus the queries one stochastic gradient needs.

#ifndef ADIDAS_HARNESS_SAVINGS_H_
#define ADIDAS_HARNESS_SAVINGS_H_

#include <cstdint>

#include "adidas/base.h"
#include "adidas/multiset.h"

namespace adidas::harness {

struct SavingsReport {
  int players = 0;
  int actions = 0;
  bool symmetric = false;
  // n m^n payoffs in general; (m + n - 1 choose n) unique entries when
  // symmetric.
  std::uint64_t tensor_entries = 0;
  // (n m)^2 queries per general gradient; m^2 when symmetric.
  std::uint64_t gradient_queries = 0;
  // Whole gradient updates affordable for the cost of the tensor, i.e.
  // tensor_entries / gradient_queries rounded down.
  std::uint64_t updates = 0;
  // The same ratio as a real number ((1/n) m^(n-2) in general).
  double ratio = 0.0;
};

inline SavingsReport QuerySavingsReport(int players, int actions,
                                        bool symmetric) {
  if (players < 1 || actions < 1) {
    throw ConfigError("savings report needs players and actions >= 1");
  }
  SavingsReport r;
  r.players = players;
  r.actions = actions;
  r.symmetric = symmetric;
  const std::uint64_t n = players, m = actions;
  if (symmetric) {
    r.tensor_entries = MultisetCount(actions, players);
    r.gradient_queries = CheckedMul(m, m);
  } else {
    r.tensor_entries = CheckedMul(n, CheckedPow(m, players));
    r.gradient_queries = CheckedMul(CheckedMul(n, m), CheckedMul(n, m));
  }
  r.updates = r.tensor_entries / r.gradient_queries;
  r.ratio = static_cast<double>(r.tensor_entries) /
            static_cast<double>(r.gradient_queries);
  return r;
}

}  // namespace adidas::harness

#endif  // ADIDAS_HARNESS_SAVINGS_H_
