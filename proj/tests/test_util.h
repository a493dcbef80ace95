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

// Fixtures and brute-force oracles shared by the unit tests. Everything here
// is written independently of the library's enumeration code so it can serve
// as a reference.

#ifndef ADIDAS_TESTS_TEST_UTIL_H_
#define ADIDAS_TESTS_TEST_UTIL_H_

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "adidas/adi.h"
#include "adidas/game.h"
#include "adidas/strategy.h"

namespace adidas::testing {

// The 3x2 example whose sampled best responses are biased.
inline GameTensor BiasedGame() {
  Matrix u1(3, 2), u2 = Matrix::Zero(3, 2);
  u1 << 0, 0, 1, -2, -2, 1;
  return GameTensor::FromBimatrix(u1, u2);
}

inline GameTensor RandomGame(const std::vector<int>& counts, std::mt19937_64& gen,
                             double lo = -1.0, double hi = 1.0) {
  std::uniform_real_distribution<double> u(lo, hi);
  return GameTensor::FromFunction(counts,
                                  [&](int, std::span<const int>) { return u(gen); });
}

// Strictly interior random strategy.
inline Vector RandomInterior(int m, std::mt19937_64& gen, double floor = 0.05) {
  std::uniform_real_distribution<double> u(floor, 1.0);
  Vector v(m);
  for (int k = 0; k < m; ++k) v[k] = u(gen);
  return v / v.sum();
}

inline StrategyProfile RandomProfile(const std::vector<int>& counts,
                                     std::mt19937_64& gen) {
  PlayerVectors vs;
  for (int m : counts) vs.push_back(RandomInterior(m, gen));
  return StrategyProfile(vs);
}

// Visits every joint action in plain nested-loop order.
inline void ForAllJoint(const std::vector<int>& counts,
                        const std::function<void(const JointAction&)>& f) {
  JointAction a(counts.size(), 0);
  std::function<void(size_t)> rec = [&](size_t d) {
    if (d == counts.size()) {
      f(a);
      return;
    }
    for (int k = 0; k < counts[d]; ++k) {
      a[d] = k;
      rec(d + 1);
    }
  };
  rec(0);
}

inline double BruteUtility(const NormalFormGame& g, const PlayerVectors& x,
                           int i) {
  double total = 0.0;
  ForAllJoint(g.action_counts(), [&](const JointAction& a) {
    double w = 1.0;
    for (size_t k = 0; k < a.size(); ++k) w *= x[k][a[k]];
    total += w * g.Payoff(i, a);
  });
  return total;
}

// Central finite difference of f over the coordinates of one vector.
inline Vector CentralDifference(const std::function<double(const Vector&)>& f,
                                const Vector& at, double h) {
  Vector out(at.size());
  for (int k = 0; k < at.size(); ++k) {
    Vector up = at, down = at;
    up[k] += h;
    down[k] -= h;
    out[k] = (f(up) - f(down)) / (2 * h);
  }
  return out;
}

// Richardson-extrapolated central difference (error O(h^4)).
inline Vector RichardsonDifference(const std::function<double(const Vector&)>& f,
                                   const Vector& at, double h) {
  return (4.0 * CentralDifference(f, at, h / 2) - CentralDifference(f, at, h)) /
         3.0;
}

inline double RelativeError(const Vector& a, const Vector& b) {
  return (a - b).norm() / std::max(1.0, b.norm());
}

}  // namespace adidas::testing

#endif  // ADIDAS_TESTS_TEST_UTIL_H_
