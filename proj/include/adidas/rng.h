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

#ifndef ADIDAS_RNG_H_
#define ADIDAS_RNG_H_

#include <cmath>
#include <cstdint>
#include <initializer_list>
#include <numbers>

#include "adidas/base.h"

namespace adidas {

// SplitMix64 finalizer.
inline constexpr std::uint64_t Mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Counter-based 64-bit generator: the i-th output is Mix64(key + i * golden).
// Streams for sub-computations are derived from a key and a list of indices,
// so results never depend on the order in which streams are consumed.
//
// Satisfies UniformRandomBitGenerator, but the library only uses the members
// below so that draws are identical on every platform.
class CounterRng {
 public:
  using result_type = std::uint64_t;
  static constexpr std::uint64_t kGolden = 0x9e3779b97f4a7c15ULL;

  explicit CounterRng(std::uint64_t seed = 0) : key_(Mix64(seed)) {}

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() { return Mix64(key_ + (++counter_) * kGolden); }

  // Independent stream identified by `ids` below this generator's key.
  CounterRng Derive(std::initializer_list<std::uint64_t> ids) const {
    std::uint64_t k = key_;
    for (std::uint64_t id : ids) k = Mix64(k ^ Mix64(id + kGolden));
    CounterRng out;
    out.key_ = k;
    return out;
  }

  std::uint64_t key() const { return key_; }
  std::uint64_t counter() const { return counter_; }

  // Uniform double in [0, 1) with 53 random bits.
  double UniformDouble() {
    return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
  }

  bool Bernoulli(double p) { return UniformDouble() < p; }

  // Index drawn from the categorical distribution `probs` (need not be
  // exactly normalized; the last positive entry absorbs rounding).
  int Categorical(const Vector& probs) {
    const double total = probs.sum();
    const double u = UniformDouble() * total;
    double acc = 0.0;
    int last_positive = 0;
    for (int k = 0; k < probs.size(); ++k) {
      if (probs[k] <= 0.0) continue;
      last_positive = k;
      acc += probs[k];
      if (u < acc) return k;
    }
    return last_positive;
  }

  // Standard normal via Box-Muller (one value per call).
  double Normal() {
    double u1 = UniformDouble();
    while (u1 <= 0.0) u1 = UniformDouble();
    const double u2 = UniformDouble();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * std::numbers::pi * u2);
  }

 private:
  std::uint64_t key_ = 0;
  std::uint64_t counter_ = 0;
};

}  // namespace adidas

#endif  // ADIDAS_RNG_H_
