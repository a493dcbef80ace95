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

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include <gtest/gtest.h>

#include "adidas/expectation.h"
#include "adidas/game.h"
#include "adidas/multiset.h"
#include "adidas/payoff_oracle.h"
#include "adidas/simplex.h"
#include "adidas/strategy.h"
#include "adidas/symmetric_game.h"
#include "test_util.h"

namespace adidas {
namespace {

using testing::BiasedGame;
using testing::RandomGame;
using testing::RandomProfile;

TEST(MixedStrategyTest, ValidatesAndRenormalizes) {
  MixedStrategy ok(Vector::Constant(4, 0.25));
  EXPECT_TRUE(ok.IsValid());
  Vector drift(2);
  drift << 0.5 + 4e-7, 0.5;
  MixedStrategy fixed(drift);
  EXPECT_NEAR(fixed.probs().sum(), 1.0, 1e-15);
  Vector far(2);
  far << 0.6, 0.6;
  EXPECT_THROW(MixedStrategy{far}, DomainError);
  Vector neg(2);
  neg << 1.1, -0.1;
  EXPECT_THROW(MixedStrategy{neg}, DomainError);
  Vector nan(2);
  nan << std::nan(""), 1.0;
  EXPECT_THROW(MixedStrategy{nan}, DomainError);
}

TEST(GameTensorTest, ShapeValidation) {
  EXPECT_THROW(GameTensor({2, 2}, std::vector<double>(7)), DimensionError);
  std::vector<double> bad(8, 0.0);
  bad[3] = std::numeric_limits<double>::infinity();
  EXPECT_THROW(GameTensor({2, 2}, bad), DomainError);
}

TEST(GameTensorTest, FirstPlayerVariesFastest) {
  GameTensor g({2, 3}, {0, 10, 1, 11, 2, 12, 3, 13, 4, 14, 5, 15});
  // Outcome index = a0 + 2 a1.
  const int a[2] = {1, 2};
  EXPECT_EQ(g.Payoff(0, a), 5);
  EXPECT_EQ(g.Payoff(1, a), 15);
}

TEST(ExpectedUtilityTest, BiasedGameExample) {
  GameTensor g = BiasedGame();
  StrategyProfile x({MixedStrategy::Pure(3, 1), MixedStrategy(Vector::Constant(2, 0.5))});
  EXPECT_NEAR(ExpectedUtility(g, x, 0), -0.5, 1e-15);
}

TEST(ExpectedUtilityTest, ConstantGame) {
  GameTensor g = GameTensor::FromFunction({3, 2, 4}, [](int, std::span<const int>) {
    return 2.5;
  });
  std::mt19937_64 gen(3);
  StrategyProfile x = RandomProfile({3, 2, 4}, gen);
  for (int i = 0; i < 3; ++i) EXPECT_NEAR(ExpectedUtility(g, x, i), 2.5, 1e-12);
}

TEST(ExpectedUtilityTest, MatchesBruteForceOnRandomThreePlayerGames) {
  std::mt19937_64 gen(11);
  for (int trial = 0; trial < 10; ++trial) {
    GameTensor g = RandomGame({2, 2, 2}, gen);
    StrategyProfile x = RandomProfile({2, 2, 2}, gen);
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(ExpectedUtility(g, x, i),
                  testing::BruteUtility(g, x.vectors(), i), 1e-12);
    }
  }
}

TEST(ExpectedUtilityTest, DimensionMismatchThrows) {
  GameTensor g = BiasedGame();
  EXPECT_THROW(ExpectedUtility(g, StrategyProfile::Uniform({3, 3}), 0),
               DimensionError);
  EXPECT_THROW(ExpectedUtility(g, StrategyProfile::Uniform({3}), 0),
               DimensionError);
}

TEST(PayoffGradientTest, BiasedGameExamples) {
  GameTensor g = BiasedGame();
  StrategyProfile x({MixedStrategy::Uniform(3), MixedStrategy::Uniform(2)});
  Vector grad = PayoffGradient(g, x, 0);
  EXPECT_NEAR(grad[0], 0.0, 1e-15);
  EXPECT_NEAR(grad[1], -0.5, 1e-15);
  EXPECT_NEAR(grad[2], -0.5, 1e-15);

  StrategyProfile y({MixedStrategy::Uniform(3), MixedStrategy::Pure(2, 0)});
  Vector col = PayoffGradient(g, y, 0);
  EXPECT_EQ(col, Vector((Vector(3) << 0, 1, -2).finished()));
}

TEST(PayoffGradientTest, MatchesFiniteDifferenceOfUtility) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 5; ++trial) {
    GameTensor g = RandomGame({3, 2, 4}, gen);
    StrategyProfile x = RandomProfile({3, 2, 4}, gen);
    for (int i = 0; i < 3; ++i) {
      auto f = [&](const Vector& xi) {
        PlayerVectors vs = x.vectors();
        vs[i] = xi;
        return ExpectedUtility(g, StrategyProfile::Raw(vs), i);
      };
      Vector fd = testing::CentralDifference(f, x[i].probs(), 1e-5);
      EXPECT_LE((fd - PayoffGradient(g, x, i)).lpNorm<Eigen::Infinity>(), 1e-6);
    }
  }
}

TEST(PayoffGradientTest, UtilityIsInnerProductWithGradient) {
  std::mt19937_64 gen(9);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<int> counts = {2 + trial % 3, 3, 2 + trial % 2};
    GameTensor g = RandomGame(counts, gen);
    StrategyProfile x = RandomProfile(counts, gen);
    for (int i = 0; i < 3; ++i) {
      EXPECT_NEAR(x[i].probs().dot(PayoffGradient(g, x, i)),
                  ExpectedUtility(g, x, i), 1e-9);
    }
  }
}

TEST(PairwiseJacobianTest, TwoPlayerBlockIsPayoffTable) {
  std::mt19937_64 gen(2);
  GameTensor g = RandomGame({3, 4}, gen);
  for (int trial = 0; trial < 3; ++trial) {
    StrategyProfile x = RandomProfile({3, 4}, gen);
    EXPECT_EQ(PairwiseJacobianExact(g, x, 0, 1), g.PayoffMatrix(0));
    EXPECT_EQ(PairwiseJacobianExact(g, x, 1, 0), g.PayoffMatrix(1).transpose());
  }
}

TEST(PairwiseJacobianTest, SameIndexThrows) {
  GameTensor g = BiasedGame();
  EXPECT_THROW(PairwiseJacobianExact(g, StrategyProfile::Uniform({3, 2}), 1, 1),
               DomainError);
}

TEST(PairwiseJacobianTest, ThirdPlayerUniformAveragesSlices) {
  std::mt19937_64 gen(4);
  GameTensor g = RandomGame({2, 3, 4}, gen);
  PlayerVectors vs = RandomProfile({2, 3, 4}, gen).vectors();
  vs[2] = Vector::Constant(4, 0.25);
  Matrix h = PairwiseJacobianExact(g, StrategyProfile(vs), 0, 1);
  Matrix expected = Matrix::Zero(2, 3);
  for (int r = 0; r < 2; ++r) {
    for (int c = 0; c < 3; ++c) {
      for (int k = 0; k < 4; ++k) {
        const int a[3] = {r, c, k};
        expected(r, c) += g.Payoff(0, a) / 4.0;
      }
    }
  }
  EXPECT_LE((h - expected).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(PairwiseJacobianTest, ContractionGivesGradientForEveryPartner) {
  std::mt19937_64 gen(6);
  for (int trial = 0; trial < 10; ++trial) {
    std::vector<int> counts = {3, 2, 4, 2};
    GameTensor g = RandomGame(counts, gen);
    StrategyProfile x = RandomProfile(counts, gen);
    for (int i = 0; i < 4; ++i) {
      const Vector grad = PayoffGradient(g, x, i);
      for (int j = 0; j < 4; ++j) {
        if (j == i) continue;
        Vector via = PairwiseJacobianExact(g, x, i, j) * x[j].probs();
        EXPECT_LE((via - grad).lpNorm<Eigen::Infinity>(), 1e-9);
      }
    }
  }
}

TEST(SimplexProjectionTest, Examples) {
  auto proj = [](std::initializer_list<double> v) {
    Vector x(v.size());
    int k = 0;
    for (double e : v) x[k++] = e;
    return SimplexProjectEuclidean(x).probs();
  };
  EXPECT_LE((proj({0.2, 0.8}) - Vector((Vector(2) << 0.2, 0.8).finished())).norm(), 1e-15);
  EXPECT_EQ(proj({2, 0}), Vector((Vector(2) << 1, 0).finished()));
  EXPECT_LE((proj({0.6, 0.6}) - Vector::Constant(2, 0.5)).norm(), 1e-15);
  Vector bad(2);
  bad << 1.0, std::numeric_limits<double>::infinity();
  EXPECT_THROW(SimplexProjectEuclidean(bad), DomainError);
}

// Reference: the projection is the unique feasible point x with
// x_k = max(v_k - theta, 0); solve for theta by bisection.
Vector BisectionProjection(const Vector& v) {
  double lo = v.minCoeff() - 1.0, hi = v.maxCoeff();
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if ((v.array() - mid).cwiseMax(0.0).sum() > 1.0) lo = mid; else hi = mid;
  }
  return (v.array() - 0.5 * (lo + hi)).cwiseMax(0.0).matrix();
}

TEST(SimplexProjectionTest, MatchesBisectionAndIsIdempotent) {
  std::mt19937_64 gen(8);
  std::normal_distribution<double> nd(0.0, 2.0);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + trial % 7;
    Vector v(m);
    for (int k = 0; k < m; ++k) v[k] = nd(gen);
    const MixedStrategy x = SimplexProjectEuclidean(v);
    EXPECT_TRUE(x.IsValid());
    EXPECT_LE((x.probs() - BisectionProjection(v)).lpNorm<Eigen::Infinity>(), 1e-9);
    const MixedStrategy again = SimplexProjectEuclidean(x.probs());
    EXPECT_LE((again.probs() - x.probs()).lpNorm<Eigen::Infinity>(), 1e-15);
  }
}

TEST(TangentProjectTest, ExamplesAndProperties) {
  EXPECT_EQ(TangentProject(Vector::Ones(3)), Vector::Zero(3));
  EXPECT_EQ(TangentProject((Vector(2) << 1, 0).finished()),
            Vector((Vector(2) << 0.5, -0.5).finished()));
  EXPECT_EQ(TangentProject((Vector(3) << 3, 0, 0).finished()),
            Vector((Vector(3) << 2, -1, -1).finished()));
  std::mt19937_64 gen(1);
  std::normal_distribution<double> nd;
  for (int trial = 0; trial < 50; ++trial) {
    Vector g(5);
    for (int k = 0; k < 5; ++k) g[k] = nd(gen);
    const Vector t = TangentProject(g);
    EXPECT_NEAR(t.sum(), 0.0, 1e-12);
    EXPECT_LE((TangentProject(t) - t).norm(), 1e-14);
  }
}

TEST(MirrorStepTest, Examples) {
  MixedStrategy x(Vector::Constant(2, 0.5));
  EXPECT_LE((MirrorStepEntropic(x, Vector::Zero(2), 1.0).probs() - x.probs()).norm(), 1e-15);
  EXPECT_LE((MirrorStepEntropic(x, Vector::Constant(2, 3.0), 0.7).probs() - x.probs()).norm(),
            1e-15);
  Vector g(2);
  g << std::log(2.0), 0.0;
  Vector out = MirrorStepEntropic(x, g, 1.0).probs();
  EXPECT_NEAR(out[0], 1.0 / 3.0, 1e-15);
  EXPECT_NEAR(out[1], 2.0 / 3.0, 1e-15);
  EXPECT_THROW(MirrorStepEntropic(MixedStrategy::Pure(2, 0), g, 1.0), DomainError);
}

TEST(MirrorStepTest, StaysInteriorUnderHugeSteps) {
  MixedStrategy x(Vector::Constant(3, 1.0 / 3));
  Vector g(3);
  g << 1e6, 0, -1e6;
  MixedStrategy out = MirrorStepEntropic(x, g, 10.0);
  EXPECT_TRUE(out.IsValid());
  EXPECT_GT(out.probs().minCoeff(), 0.0);
}

TEST(MultisetTest, Counts) {
  EXPECT_EQ(MultisetCount(5, 7), 330u);
  EXPECT_EQ(MultisetCount(21, 7), 888030u);
  for (int n = 1; n < 10; ++n) EXPECT_EQ(MultisetCount(1, n), 1u);
  EXPECT_EQ(MultisetCount(66, 4), 864501u);
  EXPECT_THROW(MultisetCount(0, 3), DomainError);
  EXPECT_THROW(MultisetCount(1000, 100), std::overflow_error);
}

TEST(MultisetTest, EnumerationMatchesRankAndUnrank) {
  for (int m = 1; m <= 5; ++m) {
    for (int n = 1; n <= 5; ++n) {
      MultisetRanker ranker(m, n);
      std::uint64_t expected = 0;
      std::set<std::vector<int>> seen;
      ForEachMultiset(m, n, [&](std::span<const int> ms) {
        std::vector<int> v(ms.begin(), ms.end());
        EXPECT_TRUE(std::is_sorted(v.begin(), v.end()));
        EXPECT_EQ(ranker.Rank(ms), expected);
        EXPECT_EQ(ranker.Unrank(expected), v);
        seen.insert(v);
        ++expected;
      });
      EXPECT_EQ(expected, MultisetCount(m, n));
      EXPECT_EQ(seen.size(), MultisetCount(m, n));
    }
  }
}

TEST(MultisetTest, MultinomialCoefficient) {
  const int a[] = {0, 0, 1, 2, 2, 2};
  EXPECT_DOUBLE_EQ(MultinomialCoefficient(a), 60.0);  // 6!/(2! 1! 3!)
}

SymmetricGame RandomSymmetric(int n, int m, std::mt19937_64& gen) {
  std::uniform_real_distribution<double> u(-1, 1);
  return SymmetricGame::FromFunction(
      n, m, [&](int, std::span<const int>) { return u(gen); });
}

TEST(SymmetricGameTest, EntryCountAndLookupInvariance) {
  std::mt19937_64 gen(12);
  SymmetricGame g = RandomSymmetric(4, 3, gen);
  EXPECT_EQ(g.num_entries(), MultisetCount(3, 4));
  EXPECT_EQ(g.payoffs().size(), 4 * MultisetCount(3, 4));
  // Permuting opponents never changes a player's payoff.
  testing::ForAllJoint(g.action_counts(), [&](const JointAction& a) {
    JointAction b = a;
    std::swap(b[1], b[3]);
    EXPECT_EQ(g.Payoff(0, a), g.Payoff(0, b));
    JointAction c = a;
    std::swap(c[0], c[2]);
    EXPECT_EQ(g.Payoff(0, a), g.Payoff(2, c));
  });
}

TEST(SymmetricGameTest, ExpandAndCompressRoundTrip) {
  std::mt19937_64 gen(13);
  for (int n = 2; n <= 4; ++n) {
    SymmetricGame g = RandomSymmetric(n, 3, gen);
    GameTensor dense = g.Expand();
    EXPECT_TRUE(dense.IsSymmetric());
    SymmetricGame back = SymmetricGame::FromTensor(dense);
    EXPECT_EQ(back.payoffs(), g.payoffs());
    for (int trial = 0; trial < 5; ++trial) {
      StrategyProfile x = RandomProfile(g.action_counts(), gen);
      for (int i = 0; i < n; ++i) {
        EXPECT_NEAR(ExpectedUtility(g, x, i), ExpectedUtility(dense, x, i), 1e-12);
      }
    }
  }
}

TEST(SymmetricGameTest, CompressedGradientsMatchDense) {
  std::mt19937_64 gen(14);
  SymmetricGame g = RandomSymmetric(4, 3, gen);
  GameTensor dense = g.Expand();
  for (int trial = 0; trial < 5; ++trial) {
    Vector x = testing::RandomInterior(3, gen);
    if (trial == 4) x << 0.5, 0.0, 0.5;  // support restriction path
    StrategyProfile prof = StrategyProfile::Symmetric(4, MixedStrategy::Raw(x));
    EXPECT_LE((SymmetricPayoffGradient(g, x) - PayoffGradient(dense, prof, 0))
                  .lpNorm<Eigen::Infinity>(),
              1e-12);
    SymmetricPairwise h = SymmetricPairwiseExact(g, x);
    EXPECT_LE((h.own - PairwiseJacobianExact(dense, prof, 0, 1)).cwiseAbs().maxCoeff(),
              1e-12);
    EXPECT_LE((h.other - PairwiseJacobianExact(dense, prof, 1, 0).transpose())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-12);
  }
}

TEST(SymmetricGameTest, NonSymmetricTensorRejected) {
  EXPECT_THROW(SymmetricGame::FromTensor(BiasedGame()), DomainError);
  std::mt19937_64 gen(3);
  EXPECT_FALSE(RandomGame({2, 2}, gen).IsSymmetric());
}

TEST(PayoffOracleTest, CountsOneQueryPerScalar) {
  auto g = std::make_shared<GameTensor>(BiasedGame());
  GameOracle oracle(g);
  CounterRng rng(1);
  const int a[2] = {1, 0};
  EXPECT_EQ(oracle.Query(0, a, rng), 1.0);
  EXPECT_EQ(oracle.Query(0, a, rng), 1.0);
  EXPECT_EQ(oracle.queries(), 2u);
  EXPECT_TRUE(oracle.deterministic());
  OffsetOracle shifted(std::make_shared<GameOracle>(g), 2.0);
  EXPECT_EQ(shifted.Query(0, a, rng), 3.0);
  EXPECT_EQ(shifted.queries(), 1u);
}

}  // namespace
}  // namespace adidas
