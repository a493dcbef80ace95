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

#ifndef ADIDAS_SAMPLING_H_
#define ADIDAS_SAMPLING_H_

#include <algorithm>
#include <cstdint>
#include <exception>
#include <string>
#include <thread>
#include <vector>

#include "adidas/base.h"
#include "adidas/pairwise.h"
#include "adidas/payoff_oracle.h"
#include "adidas/rng.h"
#include "adidas/strategy.h"

namespace adidas {

struct SampleConfig {
  // Independent joint-action draws averaged per iteration.
  int repeats = 1;
  std::uint64_t seed = 0;
  // Oracle queries averaged per matrix entry (useful for stochastic oracles).
  int entry_repeats = 1;
  // Threads used for the repeats; results do not depend on this.
  int workers = 1;

  void Validate() const {
    if (repeats < 1) throw ConfigError("sample repeats must be >= 1");
    if (entry_repeats < 1) throw ConfigError("entry repeats must be >= 1");
    if (workers < 1) throw ConfigError("workers must be >= 1");
  }
};

inline JointAction SampleJointAction(const StrategyProfile& x,
                                     CounterRng& rng) {
  JointAction a(x.num_players());
  for (int i = 0; i < x.num_players(); ++i) a[i] = rng.Categorical(x[i].probs());
  return a;
}

namespace internal {

// Runs body(r) for r in [0, count) on up to `workers` threads. Each index is
// handled by exactly one thread; the first exception is rethrown.
template <typename F>
void ParallelFor(int count, int workers, F&& body) {
  workers = std::max(1, std::min(workers, count));
  if (workers == 1) {
    for (int r = 0; r < count; ++r) body(r);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> threads;
  for (int w = 0; w < workers; ++w) {
    threads.emplace_back([&, w] {
      try {
        for (int r = w; r < count; r += workers) body(r);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

inline double QueryEntry(const PayoffOracle& oracle, int player,
                         const JointAction& a, int entry_repeats,
                         CounterRng& rng) {
  double total = 0.0;
  for (int k = 0; k < entry_repeats; ++k) {
    try {
      total += oracle.Query(player, a, rng);
    } catch (const Error& e) {
      std::string where = "oracle query failed for player " +
                          std::to_string(player) + " at (";
      for (size_t q = 0; q < a.size(); ++q) {
        where += (q ? "," : "") + std::to_string(a[q]);
      }
      throw Error(where + "): " + e.what());
    }
  }
  return total / entry_repeats;
}

}  // namespace internal

// Fills every block H^i_{ij} by substituting (r, c) for players (i, j) in the
// joint action `a` and querying player i's payoff. Both (i, j) and (j, i)
// reuse the same `a`.
inline PairwiseMatrices EstimatePairwiseFromJoint(const PayoffOracle& oracle,
                                                  const JointAction& a,
                                                  CounterRng& rng,
                                                  int entry_repeats = 1) {
  const int n = oracle.num_players();
  if (static_cast<int>(a.size()) != n) {
    throw DimensionError("joint action length mismatch");
  }
  PairwiseMatrices h(oracle.action_counts());
  JointAction q = a;
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Matrix& block = h.block(i, j);
      for (int r = 0; r < block.rows(); ++r) {
        q[i] = r;
        for (int c = 0; c < block.cols(); ++c) {
          q[j] = c;
          block(r, c) = internal::QueryEntry(oracle, i, q, entry_repeats, rng);
        }
      }
      q[i] = a[i];
      q[j] = a[j];
    }
  }
  return h;
}

// Averages `cfg.repeats` independent estimates at profile x. Repeat r of
// iteration t draws from the stream (seed, t, r), so output is identical for
// any worker count.
inline PairwiseMatrices EstimatePairwiseMatrices(const PayoffOracle& oracle,
                                                 const StrategyProfile& x,
                                                 const SampleConfig& cfg,
                                                 std::uint64_t iteration) {
  cfg.Validate();
  const CounterRng root(cfg.seed);
  std::vector<PairwiseMatrices> parts(cfg.repeats);
  internal::ParallelFor(cfg.repeats, cfg.workers, [&](int r) {
    CounterRng rng = root.Derive({iteration, static_cast<std::uint64_t>(r)});
    const JointAction a = SampleJointAction(x, rng);
    parts[r] = EstimatePairwiseFromJoint(oracle, a, rng, cfg.entry_repeats);
  });
  PairwiseMatrices out = std::move(parts[0]);
  for (int r = 1; r < cfg.repeats; ++r) out += parts[r];
  if (cfg.repeats > 1) out *= 1.0 / cfg.repeats;
  return out;
}

// Symmetric variant: players 0 and 1 take (r, c) while the other n - 2 draw
// from x; 2 m^2 queries per repeat.
inline SymmetricPairwise EstimateSymmetricPairwise(const PayoffOracle& oracle,
                                                   const Vector& x,
                                                   const SampleConfig& cfg,
                                                   std::uint64_t iteration) {
  cfg.Validate();
  const int n = oracle.num_players();
  const int m = oracle.action_counts()[0];
  if (n < 2) throw DimensionError("symmetric estimate needs two players");
  if (x.size() != m) throw DimensionError("strategy size mismatch");
  const CounterRng root(cfg.seed);
  std::vector<SymmetricPairwise> parts(cfg.repeats);
  internal::ParallelFor(cfg.repeats, cfg.workers, [&](int r) {
    CounterRng rng = root.Derive({iteration, static_cast<std::uint64_t>(r)});
    JointAction a(n);
    for (int k = 2; k < n; ++k) a[k] = rng.Categorical(x);
    SymmetricPairwise& p = parts[r];
    p.own.resize(m, m);
    p.other.resize(m, m);
    for (int row = 0; row < m; ++row) {
      a[0] = row;
      for (int col = 0; col < m; ++col) {
        a[1] = col;
        p.own(row, col) =
            internal::QueryEntry(oracle, 0, a, cfg.entry_repeats, rng);
        p.other(row, col) =
            internal::QueryEntry(oracle, 1, a, cfg.entry_repeats, rng);
      }
    }
  });
  SymmetricPairwise out = std::move(parts[0]);
  for (int r = 1; r < cfg.repeats; ++r) {
    out.own += parts[r].own;
    out.other += parts[r].other;
  }
  if (cfg.repeats > 1) {
    out.own /= cfg.repeats;
    out.other /= cfg.repeats;
  }
  return out;
}

// Payoff gradients alone, without pairwise structure: for each player one
// joint draw fixes a_{-i} and all m_i own actions are queried. Cheaper than
// EstimatePairwiseMatrices when only first-order information is needed.
inline PlayerVectors EstimatePayoffGradients(const PayoffOracle& oracle,
                                             const StrategyProfile& x,
                                             const SampleConfig& cfg,
                                             std::uint64_t iteration) {
  cfg.Validate();
  const int n = oracle.num_players();
  if (x.num_players() != n) throw DimensionError("profile size mismatch");
  const CounterRng root(cfg.seed);
  std::vector<PlayerVectors> parts(cfg.repeats);
  internal::ParallelFor(cfg.repeats, cfg.workers, [&](int r) {
    CounterRng rng = root.Derive({iteration, static_cast<std::uint64_t>(r)});
    PlayerVectors& g = parts[r];
    for (int i = 0; i < n; ++i) {
      JointAction a = SampleJointAction(x, rng);
      g.push_back(Vector(x[i].size()));
      for (int k = 0; k < x[i].size(); ++k) {
        a[i] = k;
        g[i][k] = internal::QueryEntry(oracle, i, a, cfg.entry_repeats, rng);
      }
    }
  });
  PlayerVectors out = std::move(parts[0]);
  for (int r = 1; r < cfg.repeats; ++r) {
    for (int i = 0; i < n; ++i) out[i] += parts[r][i];
  }
  if (cfg.repeats > 1) {
    for (Vector& v : out) v /= cfg.repeats;
  }
  return out;
}

// Symmetric counterpart: player 0 faces n - 1 opponents drawn from x.
inline Vector EstimateSymmetricPayoffGradient(const PayoffOracle& oracle,
                                              const Vector& x,
                                              const SampleConfig& cfg,
                                              std::uint64_t iteration) {
  cfg.Validate();
  const int n = oracle.num_players();
  const int m = oracle.action_counts()[0];
  if (x.size() != m) throw DimensionError("strategy size mismatch");
  const CounterRng root(cfg.seed);
  std::vector<Vector> parts(cfg.repeats);
  internal::ParallelFor(cfg.repeats, cfg.workers, [&](int r) {
    CounterRng rng = root.Derive({iteration, static_cast<std::uint64_t>(r)});
    JointAction a(n);
    for (int k = 1; k < n; ++k) a[k] = rng.Categorical(x);
    parts[r].resize(m);
    for (int k = 0; k < m; ++k) {
      a[0] = k;
      parts[r][k] = internal::QueryEntry(oracle, 0, a, cfg.entry_repeats, rng);
    }
  });
  Vector out = parts[0];
  for (int r = 1; r < cfg.repeats; ++r) out += parts[r];
  if (cfg.repeats > 1) out /= cfg.repeats;
  return out;
}

// Oracle queries made by one call of each estimator.
inline std::uint64_t PairwiseQueryCount(const std::vector<int>& counts,
                                        const SampleConfig& cfg) {
  std::uint64_t total = 0, sum = 0, sq = 0;
  for (int m : counts) {
    sum += m;
    sq += static_cast<std::uint64_t>(m) * m;
  }
  total = sum * sum - sq;
  return total * cfg.repeats * cfg.entry_repeats;
}

inline std::uint64_t SymmetricPairwiseQueryCount(int actions,
                                                 const SampleConfig& cfg) {
  return 2ull * actions * actions * cfg.repeats * cfg.entry_repeats;
}

inline std::uint64_t GradientQueryCount(const std::vector<int>& counts,
                                        const SampleConfig& cfg) {
  std::uint64_t sum = 0;
  for (int m : counts) sum += m;
  return sum * cfg.repeats * cfg.entry_repeats;
}

inline std::uint64_t SymmetricGradientQueryCount(int actions,
                                                 const SampleConfig& cfg) {
  return static_cast<std::uint64_t>(actions) * cfg.repeats * cfg.entry_repeats;
}

// Exponentially averaged payoff-gradient estimates.
struct AuxiliaryState {
  PlayerVectors y;
  // Number of completed updates plus one.
  std::uint64_t t = 1;

  static AuxiliaryState Zeros(const std::vector<int>& action_counts) {
    AuxiliaryState s;
    for (int m : action_counts) s.y.push_back(Vector::Zero(m));
    return s;
  }
};

inline double AuxStepSize(std::uint64_t t, double eta_y) {
  return std::max(1.0 / static_cast<double>(t), eta_y);
}

// y <- y - alpha (y - grad) with alpha = max(1/t, eta_y); t advances by one.
inline void UpdateAux(AuxiliaryState& state, const PlayerVectors& grad_est,
                      double eta_y) {
  if (state.t < 1) throw DomainError("aux counter must be >= 1");
  const double alpha = AuxStepSize(state.t, eta_y);
  if (!(alpha > 0.0 && alpha <= 1.0)) {
    throw DomainError("aux step size " + std::to_string(alpha) +
                      " outside (0, 1]");
  }
  if (grad_est.size() != state.y.size()) {
    throw DimensionError("aux update player count mismatch");
  }
  for (size_t i = 0; i < state.y.size(); ++i) {
    if (grad_est[i].size() != state.y[i].size()) {
      throw DimensionError("aux update size mismatch");
    }
    state.y[i] -= alpha * (state.y[i] - grad_est[i]);
  }
  ++state.t;
}

}  // namespace adidas

#endif  // ADIDAS_SAMPLING_H_
