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

// Acceptance checks. Prints one PASS or FAIL line per criterion and exits
// nonzero if any fails. Pass criterion numbers as arguments to run a subset.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "adidas/adi.h"
#include "adidas/adi_gradient.h"
#include "adidas/entropy.h"
#include "adidas/expectation.h"
#include "adidas/games/bernoulli.h"
#include "adidas/games/blotto.h"
#include "adidas/games/classic.h"
#include "adidas/games/covariant.h"
#include "adidas/games/el_farol.h"
#include "adidas/harness/csv.h"
#include "adidas/harness/experiment.h"
#include "adidas/harness/savings.h"
#include "adidas/multiset.h"
#include "adidas/pairwise.h"
#include "adidas/payoff_oracle.h"
#include "adidas/sampling.h"
#include "adidas/solvers/adidas.h"
#include "adidas/solvers/anneal.h"
#include "adidas/solvers/baselines.h"
#include "test_util.h"

namespace adidas {
namespace {

namespace fs = std::filesystem;
using testing::RandomGame;
using testing::RandomInterior;
using testing::RandomProfile;

struct Outcome {
  bool pass = true;
  std::string detail;
};

std::string Fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), f, v);
  return buf;
}

double Seconds(std::chrono::steady_clock::time_point since) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - since)
      .count();
}

// 1. Known equilibria have zero exact ADI.
Outcome KnownNash() {
  const GameTensor shapley = games::ModifiedShapley(0.5);
  double worst = AdiExact(shapley, StrategyProfile::Uniform(shapley.action_counts()),
                          EntropyKind::None())
                     .total;
  const SymmetricGame blotto = games::MakeBlotto({});
  const auto alloc = games::BlottoAllocations(10, 3);
  std::set<std::vector<int>> profiles;
  // Two players go all in on one field and the other two cover the rest.
  for (int f = 0; f < 81; ++f) {
    std::vector<int> field(4);
    std::vector<int> load(3, 0);
    for (int i = 0, r = f; i < 4; ++i, r /= 3) ++load[field[i] = r % 3];
    std::vector<int> sorted = load;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != std::vector<int>{1, 1, 2}) continue;
    std::vector<int> joint(4);
    for (int i = 0; i < 4; ++i) {
      std::vector<int> a(3, 0);
      a[field[i]] = 10;
      joint[i] = games::BlottoActionIndex(alloc, a);
    }
    profiles.insert(joint);
  }
  for (const auto& joint : profiles) {
    const StrategyProfile x = StrategyProfile::Pure(blotto.action_counts(), joint);
    worst = std::max(worst, AdiExact(blotto, x, EntropyKind::None()).total);
  }
  return {worst <= 1e-9 && profiles.size() == 36,
          std::to_string(profiles.size()) + " blotto profiles, max ADI " +
              Fmt("%.2e", worst)};
}

// Central differences of the exact regularized loss, Richardson corrected.
PlayerVectors FiniteDifferenceGradient(const GameTensor& g,
                                       const StrategyProfile& x,
                                       const EntropyKind& kind, double h) {
  PlayerVectors out;
  for (int i = 0; i < g.num_players(); ++i) {
    auto f = [&](const Vector& xi) {
      PlayerVectors vs = x.vectors();
      vs[i] = xi;
      return AdiExact(g, StrategyProfile::Raw(vs), kind).total;
    };
    out.push_back(testing::RichardsonDifference(f, x[i].probs(), h));
  }
  return out;
}

double MaxRelativeError(const PlayerVectors& a, const PlayerVectors& b) {
  double worst = 0.0;
  for (size_t i = 0; i < a.size(); ++i) {
    worst = std::max(worst, testing::RelativeError(a[i], b[i]));
  }
  return worst;
}

// 2. Analytic ADI gradients against finite differences.
Outcome GradientCheck() {
  std::mt19937_64 gen(2);
  std::uniform_int_distribution<int> size(2, 5);
  double worst = 0.0;
  for (int game = 0; game < 20; ++game) {
    std::vector<int> counts(game < 10 ? 2 : 3);
    for (int& m : counts) m = size(gen);
    const GameTensor g = RandomGame(counts, gen, 0.1, 1.1);
    const StrategyProfile x = RandomProfile(counts, gen);
    const PairwiseMatrices h = AllPairwiseExact(g, x);
    const PlayerVectors grads = PayoffGradients(g, x);
    for (double t : {1.0, 0.1, 0.01}) {
      worst = std::max(
          worst, MaxRelativeError(AdiGradientShannon(h, grads, x, t),
                                  FiniteDifferenceGradient(
                                      g, x, EntropyKind::Shannon(t), 1e-4)));
      worst = std::max(
          worst, MaxRelativeError(AdiGradientTsallis(h, grads, x, t),
                                  FiniteDifferenceGradient(
                                      g, x, EntropyKind::Tsallis(t), 1e-5)));
    }
  }
  return {worst <= 1e-4, "max relative error " + Fmt("%.2e", worst)};
}

// Maximizes z.y + s/(p+1) (1 - sum z^(p+1)) over the simplex by a grid
// search followed by pairwise coordinate ascent with bisection line search.
Vector NumericTsallisResponse(const Vector& y, double p, double s) {
  const int m = static_cast<int>(y.size());
  auto value = [&](const Vector& z) {
    return z.dot(y) + s / (p + 1) * (1.0 - z.array().pow(p + 1).sum());
  };
  const int steps = m <= 3 ? 60 : 20;
  Vector best = Vector::Constant(m, 1.0 / m), z(m);
  double best_value = value(best);
  std::vector<int> c(m, 0);
  auto rec = [&](auto&& self, int k, int left) -> void {
    if (k == m - 1) {
      c[k] = left;
      for (int a = 0; a < m; ++a) z[a] = static_cast<double>(c[a]) / steps;
      const double v = value(z);
      if (v > best_value) {
        best_value = v;
        best = z;
      }
      return;
    }
    for (int u = 0; u <= left; ++u) {
      c[k] = u;
      self(self, k + 1, left - u);
    }
  };
  rec(rec, 0, steps);
  auto slope = [&](const Vector& v, int a) {
    return y[a] - s * std::pow(std::max(v[a], 0.0), p);
  };
  for (int sweep = 0; sweep < 20000; ++sweep) {
    double moved = 0.0;
    for (int a = 0; a < m; ++a) {
      for (int b = a + 1; b < m; ++b) {
        // Move t from b to a; the directional derivative decreases in t.
        auto deriv = [&](double t) {
          Vector v = best;
          v[a] += t;
          v[b] -= t;
          return slope(v, a) - slope(v, b);
        };
        double lo = -best[a], hi = best[b];
        if (deriv(lo) <= 0.0) {
          hi = lo;
        } else if (deriv(hi) >= 0.0) {
          lo = hi;
        } else {
          for (int it = 0; it < 200 && hi - lo > 0.0; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (mid == lo || mid == hi) break;
            (deriv(mid) > 0.0 ? lo : hi) = mid;
          }
        }
        const double t = 0.5 * (lo + hi);
        best[a] += t;
        best[b] -= t;
        moved = std::max(moved, std::abs(t));
      }
    }
    if (moved < 1e-15) break;
  }
  return best;
}

// 3. Closed-form Tsallis best response.
Outcome TsallisResponse() {
  std::mt19937_64 gen(3);
  std::uniform_real_distribution<double> u(0.0, 2.0);
  std::uniform_int_distribution<int> size(2, 5);
  double worst_gap = 0.0, worst_residual = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    Vector y(size(gen));
    for (int k = 0; k < y.size(); ++k) y[k] = u(gen);
    for (int tenth = 1; tenth <= 10; ++tenth) {
      const double p = tenth / 10.0;
      const BestResponse br = ComputeBestResponse(y, EntropyKind::Tsallis(p));
      const double s = std::pow(y.array().pow(1.0 / p).sum(), p);
      const Vector numeric = NumericTsallisResponse(y, p, s);
      worst_gap = std::max(
          worst_gap, (numeric - br.dist.probs()).lpNorm<Eigen::Infinity>());
      worst_residual = std::max(
          worst_residual,
          (y - br.scale * br.dist.probs().array().pow(p).matrix())
              .lpNorm<Eigen::Infinity>());
    }
  }
  return {worst_gap <= 1e-6 && worst_residual <= 1e-9,
          "max gap " + Fmt("%.2e", worst_gap) + ", max residual " +
              Fmt("%.2e", worst_residual)};
}

// 4. Consensus identity.
Outcome Consensus() {
  std::mt19937_64 gen(4);
  std::uniform_int_distribution<int> size(2, 4);
  double worst = 0.0;
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> counts(trial % 2 ? 3 : 2);
    for (int& m : counts) m = size(gen);
    const GameTensor g = RandomGame(counts, gen, 0.1, 2.0);
    const ConsensusCheck c = ConsensusLossCheck(g, RandomProfile(counts, gen));
    worst = std::max(worst, std::abs(c.lhs - c.rhs));
  }
  return {worst <= 1e-9, "max gap " + Fmt("%.2e", worst)};
}

// 5. Exploitability descent matches hard extragradient.
Outcome DescentIsExtragradient() {
  std::mt19937_64 gen(5);
  std::uniform_int_distribution<int> size(2, 5);
  double worst = 0.0;
  for (int trial = 0; trial < 10; ++trial) {
    const GameTensor g = RandomGame({size(gen), size(gen)}, gen);
    const GameOracle oracle(std::make_shared<GameTensor>(g));
    SolverConfig c;
    c.eta_x = 0.1;
    const BaselineSolver ed(oracle, BaselineMethod::kExploitabilityDescent, c);
    const BaselineSolver eg(oracle, BaselineMethod::kExtragradient, c);
    StrategyProfile a = RandomProfile(g.action_counts(), gen), b = a;
    for (int t = 0; t < 100; ++t) {
      a = ed.ExploitabilityDescentStep(a, PayoffGradients(g, a));
      b = eg.ExtragradientStep(b, PayoffGradients(g, b));
      for (int i = 0; i < 2; ++i) {
        worst = std::max(
            worst, (a[i].probs() - b[i].probs()).lpNorm<Eigen::Infinity>());
      }
    }
  }
  return {worst <= 1e-12, "max iterate gap " + Fmt("%.2e", worst)};
}

// 6. Symmetric sampled ADIDAS on Blotto(10, 3, 4).
Outcome Blotto() {
  auto game = std::make_shared<SymmetricGame>(games::MakeBlotto({}));
  const GameOracle oracle(game);
  double sum = 0.0, slowest = 0.0, worst = 0.0;
  for (int seed = 0; seed < 10; ++seed) {
    SolverConfig c;
    c.symmetric = true;
    c.projection = Projection::kEntropic;
    c.eta_x = 0.03;
    c.eta_y = 0.01;
    c.temperature = 0.05;
    c.threshold = 0.01;
    c.iterations = 2000;
    c.exact_adi_every = c.iterations;
    c.average_iterates = true;
    c.sample.repeats = 10;
    c.sample.seed = seed;
    const auto start = std::chrono::steady_clock::now();
    const SolverResult r = AdidasSymmetric(oracle, c);
    const double secs = Seconds(start);
    const double adi =
        AdiExact(*game, r.profile, EntropyKind::None()).Mean();
    sum += adi;
    worst = std::max(worst, adi);
    slowest = std::max(slowest, secs);
  }
  const double mean = sum / 10;
  return {mean <= 0.05 && slowest <= 600.0,
          "mean exact ADI " + Fmt("%.4f", mean) + ", worst " +
              Fmt("%.4f", worst) + ", slowest run " + Fmt("%.1f", slowest) +
              " s"};
}

// 7. ADIDAS and regret matching agree on El Farol.
Outcome ElFarol() {
  auto game = std::make_shared<SymmetricGame>(games::MakeElFarol());
  const GameOracle oracle(game);
  const auto start = std::chrono::steady_clock::now();
  SolverConfig c;
  c.symmetric = true;
  c.eta_x = 0.003;
  c.eta_y = 0.01;
  c.threshold = 0.01;
  c.iterations = 20000;
  c.exact_adi_every = c.iterations;
  c.average_iterates = true;
  c.sample.repeats = 100;
  c.sample.seed = 7;
  const SolverResult adidas = AdidasSymmetric(oracle, c);
  const SolverResult rm =
      RunBaseline(oracle, BaselineMethod::kRegretMatching, c);
  const double secs = Seconds(start);
  const double adi_a = AdiExact(*game, adidas.profile, EntropyKind::None()).Mean();
  const double adi_r = AdiExact(*game, rm.profile, EntropyKind::None()).Mean();
  const double gap =
      (adidas.profile[0].probs() - rm.profile[0].probs()).lpNorm<Eigen::Infinity>();
  return {gap <= 0.02 && adi_a <= 0.01 && adi_r <= 0.01 && secs < 120.0,
          "go " + Fmt("%.4f", adidas.profile[0][games::kElFarolGo]) + " vs " +
              Fmt("%.4f", rm.profile[0][games::kElFarolGo]) + ", gap " +
              Fmt("%.4f", gap) + ", ADI " + Fmt("%.1e", adi_a) + " / " +
              Fmt("%.1e", adi_r) + ", " + Fmt("%.1f", secs) + " s"};
}

// 8. Sampled blocks are unbiased; converged auxiliaries give exact ADI.
Outcome Unbiased() {
  std::mt19937_64 gen(8);
  double worst_z = 0.0;
  for (int trial = 0; trial < 3; ++trial) {
    const GameTensor g = RandomGame({3, 3, 3}, gen);
    const GameOracle oracle(std::make_shared<GameTensor>(g));
    const StrategyProfile x = RandomProfile({3, 3, 3}, gen);
    const PairwiseMatrices exact = AllPairwiseExact(g, x);
    const int draws = 10000;
    PairwiseMatrices sum(g.action_counts()), sq(g.action_counts());
    const SampleConfig cfg{.repeats = 1, .seed = 800u + trial};
    for (int t = 0; t < draws; ++t) {
      const PairwiseMatrices h = EstimatePairwiseMatrices(oracle, x, cfg, t);
      sum += h;
      for (int i = 0; i < 3; ++i) {
        for (int j = 0; j < 3; ++j) {
          if (i != j) sq.block(i, j).array() += h.block(i, j).array().square();
        }
      }
    }
    for (int i = 0; i < 3; ++i) {
      for (int j = 0; j < 3; ++j) {
        if (i == j) continue;
        const Matrix mean = sum.block(i, j) / draws;
        const Matrix var =
            (sq.block(i, j).array() / draws - mean.array().square()).matrix();
        const double err2 = (mean - exact.block(i, j)).squaredNorm();
        worst_z = std::max(worst_z, std::sqrt(err2 / (var.sum() / draws)));
      }
    }
  }
  double worst_gap = 0.0;
  const std::vector<int> counts = {3, 3, 2};
  const GameTensor g = RandomGame(counts, gen, 0.0, 1.0);
  const StrategyProfile x = RandomProfile(counts, gen);
  for (const EntropyKind& kind : {EntropyKind::None(), EntropyKind::Shannon(0.1),
                                  EntropyKind::Tsallis(0.5)}) {
    AuxiliaryState s = AuxiliaryState::Zeros(counts);
    for (int t = 0; t < 300; ++t) UpdateAux(s, PayoffGradients(g, x), 0.1);
    worst_gap = std::max(worst_gap, std::abs(AdiAmortized(x, s.y, kind).total -
                                             AdiExact(g, x, kind).total));
  }
  return {worst_z <= 3.0 && worst_gap <= 1e-6,
          "max block error " + Fmt("%.2f", worst_z) + " sigma, amortized gap " +
              Fmt("%.1e", worst_gap)};
}

// 9. Multiset counts and query savings.
Outcome Counting() {
  const std::uint64_t small = MultisetCount(5, 7), large = MultisetCount(21, 7);
  const auto general = harness::QuerySavingsReport(7, 21, false);
  const auto symmetric = harness::QuerySavingsReport(7, 21, true);
  return {small == 330 && large == 888030 && general.updates >= 580000 &&
              symmetric.updates >= 2000,
          std::to_string(small) + ", " + std::to_string(large) + ", savings " +
              std::to_string(general.updates) + " general, " +
              std::to_string(symmetric.updates) + " symmetric"};
}

// 10. Anneal transitions.
Outcome Anneal() {
  bool ok = true;
  AnnealState s{EntropyKind::Shannon(1.0), 10};
  ok &= !MaybeAnneal(s, 0.01, 0.01, 0.1);  // threshold is strict
  ok &= MaybeAnneal(s, 0.005, 0.01, 0.1) && s.kind.temperature == 0.5 &&
        s.anneal_steps == 0;
  ok &= !MaybeAnneal(s, 0.0, 0.01, 0.1);  // must wait 1 / eta_y steps
  AnnealState snap{EntropyKind::Shannon(0.0015), 10};
  ok &= MaybeAnneal(snap, 0.0, 0.01, 0.1) && snap.kind.temperature == 0.0;
  ok &= HalvedTemperature(EntropyKind::Shannon(0.003), false) == 0.0015;
  ok &= HalvedTemperature(EntropyKind::Shannon(100.0), true) == 1.0;
  ok &= HalvedTemperature(EntropyKind::Tsallis(1.0), false) == 0.5;
  ok &= HalvedTemperature(EntropyKind::Tsallis(0.015), false) == 0.0;
  ok &= HalvedTemperature(EntropyKind::Tsallis(0.04), false) == 0.02;
  return {ok, ok ? "all transitions match" : "a transition differs"};
}

// 11. ADIDAS on noisy 7-player, 5-action meta-games. Game seed 3 has a
// mixed equilibrium; seed 0 a nearly pure one.
Outcome Bernoulli() {
  Outcome out;
  for (std::uint64_t game_seed : {0u, 3u}) {
    games::PlantedWinrateSpec spec;
    spec.seed = game_seed;
    const SymmetricGame winrates = games::PlantedWinrates(spec);
    auto oracle = games::MakeBernoulliMetaGame(winrates);
    const std::uint64_t budget =
        5 * 223 * MultisetCount(spec.actions, spec.players);
    SolverConfig c;
    c.symmetric = true;
    c.projection = Projection::kEntropic;
    c.eta_x = 0.01;
    c.eta_y = 0.01;
    c.temperature = 0.05;
    c.threshold = 0.01;
    c.sample.repeats = 1;
    c.sample.seed = 11;
    c.iterations = static_cast<std::int64_t>(
        budget / SymmetricPairwiseQueryCount(spec.actions, c.sample) - 1);
    c.iterations = std::min<std::int64_t>(c.iterations, 10000);
    c.exact_adi_every = c.iterations;
    const SolverResult r = AdidasSymmetric(*oracle, c);
    std::uint64_t first = 0;
    for (const IterateRecord& rec : r.log.records) {
      if (rec.adi_estimate < 0.02) {
        first = rec.payoffs_queried;
        break;
      }
    }
    const IterateRecord& last = r.log.records.back();
    const double exact = AdiExact(winrates, r.profile, EntropyKind::None()).Mean();
    out.pass &= last.adi_estimate < 0.02 && last.payoffs_queried < budget;
    out.detail += (out.detail.empty() ? "" : "; ") + std::string("game ") +
                  std::to_string(game_seed) + ": amortized ADI " +
                  Fmt("%.1e", last.adi_estimate) + " (exact " +
                  Fmt("%.1e", exact) + "), first below 0.02 at " +
                  std::to_string(first) + " queries, " +
                  std::to_string(last.payoffs_queried) + " of " +
                  std::to_string(budget);
  }
  return out;
}

std::string MetricsText(const SolverResult& r, std::uint64_t seed) {
  std::ostringstream os;
  harness::WriteMetricsCsv(os, "run", seed, r.log, false);
  return os.str();
}

std::string Slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

// 12. Metrics are bit-identical across repeats and worker counts.
Outcome Determinism() {
  const GameTensor cov = games::MakeCovariantRandom({.players = 3, .actions = 3, .seed = 1});
  const GameOracle general(std::make_shared<GameTensor>(cov));
  auto bernoulli = games::MakeBernoulliMetaGame(games::PlantedWinrates({}));
  std::vector<std::pair<std::string, std::function<SolverResult(int)>>> cases;
  auto base = [](int workers) {
    SolverConfig c;
    c.eta_x = 0.05;
    c.temperature = 0.5;
    c.threshold = 0.05;
    c.iterations = 200;
    c.sample.repeats = 8;
    c.sample.seed = 12;
    c.sample.workers = workers;
    return c;
  };
  cases.push_back({"adidas", [&](int w) { return Adidas(general, base(w)); }});
  cases.push_back({"adidas symmetric", [&](int w) {
                     SolverConfig c = base(w);
                     c.symmetric = true;
                     return AdidasSymmetric(*bernoulli, c);
                   }});
  cases.push_back({"regret matching", [&](int w) {
                     return RunBaseline(general, BaselineMethod::kRegretMatching,
                                        base(w));
                   }});
  std::string failed;
  for (const auto& [name, run] : cases) {
    const std::string a = MetricsText(run(1), 12), b = MetricsText(run(1), 12),
                      c = MetricsText(run(4), 12);
    if (a != b || a != c) failed += " " + name;
  }
  const fs::path root = fs::temp_directory_path() / "adidas_acceptance";
  fs::remove_all(root);
  harness::ExperimentConfig e;
  e.game.name = "covariant";
  e.solver_config = base(1);
  e.solver_config.iterations = 50;
  e.grid.eta_x = {0.01, 0.05};
  e.repetitions = 3;
  e.output = (root / "a").string();
  harness::RunExperiment(e);
  e.output = (root / "b").string();
  e.jobs = 4;
  e.solver_config.sample.workers = 3;
  harness::RunExperiment(e);
  if (Slurp(root / "a" / "metrics.csv") != Slurp(root / "b" / "metrics.csv")) {
    failed += " sweep";
  }
  fs::remove_all(root);
  return {failed.empty(), failed.empty()
                              ? "adidas, symmetric, regret matching and sweep"
                              : "differs:" + failed};
}

}  // namespace
}  // namespace adidas

int main(int argc, char** argv) {
  using Check = std::function<adidas::Outcome()>;
  const std::vector<std::pair<const char*, Check>> checks = {
      {"known equilibria have zero ADI", adidas::KnownNash},
      {"analytic gradients match finite differences", adidas::GradientCheck},
      {"Tsallis best response closed form", adidas::TsallisResponse},
      {"consensus identity", adidas::Consensus},
      {"exploitability descent equals extragradient", adidas::DescentIsExtragradient},
      {"Blotto(10,3,4) symmetric ADIDAS", adidas::Blotto},
      {"El Farol ADIDAS and regret matching agree", adidas::ElFarol},
      {"sampling unbiasedness and amortized ADI", adidas::Unbiased},
      {"multiset counts and query savings", adidas::Counting},
      {"anneal transitions", adidas::Anneal},
      {"Bernoulli meta-game within query budget", adidas::Bernoulli},
      {"determinism across workers", adidas::Determinism},
  };
  std::set<int> only;
  for (int k = 1; k < argc; ++k) only.insert(std::atoi(argv[k]));
  int failures = 0;
  for (size_t k = 0; k < checks.size(); ++k) {
    const int id = static_cast<int>(k) + 1;
    if (!only.empty() && !only.count(id)) continue;
    adidas::Outcome out;
    const auto start = std::chrono::steady_clock::now();
    try {
      out = checks[k].second();
    } catch (const std::exception& e) {
      out = {false, std::string("exception: ") + e.what()};
    }
    failures += !out.pass;
    std::printf("%s %2d %s: %s [%.1f s]\n", out.pass ? "PASS" : "FAIL", id,
                checks[k].first, out.detail.c_str(), adidas::Seconds(start));
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
