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

#ifndef ADIDAS_SOLVERS_ANNEAL_H_
#define ADIDAS_SOLVERS_ANNEAL_H_

#include <algorithm>
#include <cstdint>

#include "adidas/base.h"
#include "adidas/entropy.h"

namespace adidas {

struct AnnealState {
  EntropyKind kind;
  // Iterations since the last anneal.
  std::int64_t anneal_steps = 0;
};

// Halved temperature with the cutoffs applied. Tsallis powers are clipped
// into [0, 1]; Shannon temperatures are clipped too when `clip_shannon`.
inline double HalvedTemperature(const EntropyKind& kind, bool clip_shannon) {
  double t = kind.temperature / 2.0;
  switch (kind.family) {
    case EntropyFamily::kShannon:
      if (clip_shannon) t = std::clamp(t, 0.0, 1.0);
      return t < kShannonMinTemperature ? 0.0 : t;
    case EntropyFamily::kTsallis:
      t = std::clamp(t, 0.0, 1.0);
      return t < kTsallisMinPower ? 0.0 : t;
    default:
      return 0.0;
  }
}

// One anneal decision. Halves the temperature when the estimated
// regularized ADI is strictly below `threshold` and at least 1 / eta_y
// iterations have passed since the last anneal; otherwise counts a step.
// Returns true on anneal.
inline bool MaybeAnneal(AnnealState& state, double reg_adi, double threshold,
                        double eta_y, bool clip_shannon = false) {
  if (!(eta_y > 0.0)) throw DomainError("eta_y must be positive");
  if (reg_adi < threshold &&
      static_cast<double>(state.anneal_steps) >= 1.0 / eta_y) {
    state.kind.temperature = HalvedTemperature(state.kind, clip_shannon);
    state.anneal_steps = 0;
    return true;
  }
  ++state.anneal_steps;
  return false;
}

}  // namespace adidas

#endif  // ADIDAS_SOLVERS_ANNEAL_H_
