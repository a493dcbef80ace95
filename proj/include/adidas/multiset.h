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

#ifndef ADIDAS_MULTISET_H_
#define ADIDAS_MULTISET_H_

#include <algorithm>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "adidas/base.h"

namespace adidas {

// Binomial coefficient with overflow detection.
inline std::uint64_t Binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  unsigned __int128 c = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    // c * (n - k + i) / i is exact at every step.
    c = c * (n - k + i) / i;
    if (c > ~std::uint64_t{0}) {
      throw std::overflow_error("binomial(" + std::to_string(n) + ", " +
                                std::to_string(k) + ") overflows 64 bits");
    }
  }
  return static_cast<std::uint64_t>(c);
}

// Number of multisets of size `players` drawn from `actions` elements:
// (m + n - 1)! / (n! (m - 1)!).
inline std::uint64_t MultisetCount(int actions, int players) {
  if (actions < 1 || players < 1) {
    throw DomainError("multiset count needs actions >= 1 and players >= 1");
  }
  return Binomial(static_cast<std::uint64_t>(actions) + players - 1,
                  static_cast<std::uint64_t>(players));
}

// Checked a * b.
inline std::uint64_t CheckedMul(std::uint64_t a, std::uint64_t b) {
  std::uint64_t out;
  if (__builtin_mul_overflow(a, b, &out)) {
    throw std::overflow_error("product overflows 64 bits");
  }
  return out;
}

inline std::uint64_t CheckedPow(std::uint64_t base, int exp) {
  std::uint64_t out = 1;
  for (int i = 0; i < exp; ++i) out = CheckedMul(out, base);
  return out;
}

// Colex ranking of sorted (non-decreasing) multisets of a fixed size over
// {0, ..., actions-1}. The element sequence a_0 <= ... <= a_{n-1} maps to the
// strictly increasing b_k = a_k + k, whose combinatorial-number-system rank
// sum_k C(b_k, k + 1) is a bijection onto [0, MultisetCount(actions, n)).
class MultisetRanker {
 public:
  MultisetRanker(int actions, int size) : actions_(actions), size_(size) {
    count_ = MultisetCount(actions, size);
    const int top = actions + size;
    table_.assign(static_cast<size_t>(top) * (size + 1), 0);
    for (int b = 0; b < top; ++b) {
      for (int k = 0; k <= size; ++k) table_[b * (size + 1) + k] = Binomial(b, k);
    }
  }

  int actions() const { return actions_; }
  int size() const { return size_; }
  std::uint64_t count() const { return count_; }

  // `sorted` must be non-decreasing.
  std::uint64_t Rank(std::span<const int> sorted) const {
    std::uint64_t r = 0;
    for (int k = 0; k < size_; ++k) {
      r += table_[(sorted[k] + k) * (size_ + 1) + (k + 1)];
    }
    return r;
  }

  // Inverse of Rank.
  std::vector<int> Unrank(std::uint64_t rank) const {
    std::vector<int> out(size_);
    for (int k = size_ - 1; k >= 0; --k) {
      int b = k;
      while (b + 1 < actions_ + size_ - 1 &&
             table_[(b + 1) * (size_ + 1) + (k + 1)] <= rank) {
        ++b;
      }
      rank -= table_[b * (size_ + 1) + (k + 1)];
      out[k] = b - k;
    }
    return out;
  }

 private:
  int actions_;
  int size_;
  std::uint64_t count_;
  std::vector<std::uint64_t> table_;
};

// Calls f(sorted_multiset) for every non-decreasing sequence of length `size`
// over {0, ..., actions-1}, in increasing colex rank order.
template <typename F>
void ForEachMultiset(int actions, int size, F&& f) {
  std::vector<int> ms(size, 0);
  if (size == 0) {
    f(std::span<const int>(ms));
    return;
  }
  while (true) {
    f(std::span<const int>(ms));
    // Colex successor: bump the lowest position that can grow while staying
    // <= its successor, and reset everything below it to zero.
    int k = 0;
    while (k < size) {
      const int cap = (k + 1 < size) ? ms[k + 1] : actions - 1;
      if (ms[k] < cap) break;
      ++k;
    }
    if (k == size) return;
    ++ms[k];
    for (int j = 0; j < k; ++j) ms[j] = 0;
  }
}

// (sum c)! / prod(c!) for the action counts of a multiset.
inline double MultinomialCoefficient(std::span<const int> sorted) {
  double out = 1.0;
  int run = 0;
  for (size_t k = 0; k < sorted.size(); ++k) {
    run = (k > 0 && sorted[k] == sorted[k - 1]) ? run + 1 : 1;
    out *= static_cast<double>(k + 1) / run;
  }
  return out;
}

}  // namespace adidas

#endif  // ADIDAS_MULTISET_H_
