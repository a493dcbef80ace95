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

#ifndef ADIDAS_GAMES_EL_FAROL_H_
#define ADIDAS_GAMES_EL_FAROL_H_

#include <span>

#include "adidas/base.h"
#include "adidas/symmetric_game.h"

namespace adidas::games {

// El Farol bar stage game. Each of n players stays home (action 0) for a
// payoff of `stay`, or goes to the bar (action 1) and receives `good` if at
// most capacity = n * crowding players attend and `bad` otherwise.
struct ElFarolSpec {
  int players = 10;
  double crowding = 0.7;
  double bad = 0.0;
  double stay = 1.0;
  double good = 2.0;

  double capacity() const { return players * crowding; }

  void Validate() const {
    if (players < 2) throw ConfigError("el farol needs two players");
    if (!(bad < stay && stay < good)) {
      throw ConfigError("el farol needs bad < stay < good");
    }
  }
};

inline constexpr int kElFarolStay = 0;
inline constexpr int kElFarolGo = 1;

inline SymmetricGame MakeElFarol(const ElFarolSpec& spec = {}) {
  spec.Validate();
  return SymmetricGame::FromFunction(
      spec.players, 2, [&](int own, std::span<const int> others) {
        if (own == kElFarolStay) return spec.stay;
        int attendance = 1;
        for (int a : others) attendance += a == kElFarolGo;
        return attendance <= spec.capacity() + 1e-9 ? spec.good : spec.bad;
      });
}

}  // namespace adidas::games

#endif  // ADIDAS_GAMES_EL_FAROL_H_
