// Copyright 2026 The coopgame Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "coopgame/game.h"

#include <cmath>
#include <random>
#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "oracles.h"
#include "test_games.h"

namespace coopgame {
namespace {

using testing::OracleRandomGame;
using testing::OracleRandomPartition;

TEST_CASE("coalition basics") {
  const Coalition s = Coalition::Of({0, 2});
  CHECK(s.mask() == 0b101);
  CHECK(s.size() == 2);
  CHECK(s.Contains(2));
  CHECK_FALSE(s.Contains(1));
  CHECK(s.IsSubsetOf(Coalition::Grand(3)));
  CHECK(s.With(1) == Coalition::Grand(3));
  CHECK(s.Without(0) == Coalition::Singleton(2));
  CHECK(s.Members() == std::vector<int>{0, 2});
  CHECK((Coalition::Grand(3) - s) == Coalition::Singleton(1));
}

TEST_CASE("subset enumeration is ascending and complete") {
  std::vector<std::uint64_t> seen;
  ForEachSubset(Coalition(0b1011), [&](Coalition s) { seen.push_back(s.mask()); });
  CHECK(seen == std::vector<std::uint64_t>{0, 1, 2, 3, 8, 9, 10, 11});
}

TEST_CASE("make game") {
  SUBCASE("sparse entries default to zero") {
    const Game g = MakeGame(3, {{Coalition(0b111), 1.0}});
    CHECK(g == BasisGame(3, Coalition::Grand(3)));
  }
  SUBCASE("elevator c") {
    const Game c = ElevatorC();
    CHECK(c(Coalition::Of({0, 1})) == 100);
    CHECK(c.Grand() == 120);
    CHECK(c.labels() == std::vector<std::string>{"1", "2", "3"});
  }
  SUBCASE("one player") {
    const Game g = MakeGame(1, {});
    CHECK(g.num_coalitions() == 2);
    CHECK(g.values()[0] == 0.0);
    CHECK(g.values()[1] == 0.0);
  }
  SUBCASE("errors") {
    CHECK_THROWS_AS(MakeGame(3, {{Coalition(1), 1.0}, {Coalition(1), 2.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MakeGame(3, {{Coalition(0b1000), 1.0}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(MakeGame(3, {{Coalition(0), 1.0}}), std::invalid_argument);
    CHECK_NOTHROW(MakeGame(3, {{Coalition(0), 0.0}}));
    CHECK_THROWS_AS(MakeGame(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(MakeGame(kMaxPlayers + 1, {}), std::invalid_argument);
    CHECK_THROWS_AS(Game(2, {0.0, 1.0, 2.0}), std::invalid_argument);
    CHECK_THROWS_AS(Game(1, {0.0, NAN}), std::invalid_argument);
  }
}

TEST_CASE("zero normalize") {
  const Game c0 = ZeroNormalize(ElevatorC());
  CHECK(c0(Coalition::Of({0, 1})) == -70);
  CHECK(c0.Grand() == -150);
  for (int i = 0; i < 3; ++i) CHECK(c0.Singleton(i) == 0);

  const Game additive = MakeGame(3, {{Coalition(1), 2.0},
                                     {Coalition(2), -1.0},
                                     {Coalition(4), 5.0},
                                     {Coalition(3), 1.0},
                                     {Coalition(5), 7.0},
                                     {Coalition(6), 4.0},
                                     {Coalition(7), 6.0}});
  const Game additive0 = ZeroNormalize(additive);
  for (double x : additive0.values()) CHECK(x == 0.0);

  const Game eN = BasisGame(3, Coalition::Grand(3));
  CHECK(ZeroNormalize(eN) == eN);
}

TEST_CASE("partition normalize") {
  const Game c = ElevatorC();
  SUBCASE("singletons reduce to zero normalize") {
    CHECK(PartitionNormalize(CSGame(c, Partition::Singletons(3))) ==
          ZeroNormalize(c));
  }
  SUBCASE("one union") {
    const Game w = PartitionNormalize(CSGame(c, Partition::GrandUnion(3)));
    CHECK(w.Grand() == 0.0);
    const Game c0 = ZeroNormalize(c);
    for (std::uint64_t s = 1; s < 7; ++s) CHECK(w(Coalition(s)) == c0(Coalition(s)));
  }
  SUBCASE("elevator c with {{1},{2,3}}") {
    const Game w = PartitionNormalize(CSGame(c, ElevatorPartition()));
    CHECK(w(Coalition::Of({1, 2})) == 0.0);
    CHECK(w(Coalition::Of({0, 1})) == -70.0);
  }
}

TEST_CASE("quotient game") {
  const Game c = ElevatorC();
  CHECK(QuotientGame(CSGame(c, Partition::Singletons(3))) == c);

  const Game q = QuotientGame(CSGame(c, ElevatorPartition()));
  REQUIRE(q.num_players() == 2);
  CHECK(q(Coalition(1)) == 80);
  CHECK(q(Coalition(2)) == 110);
  CHECK(q(Coalition(3)) == 120);
  CHECK(q.labels() == std::vector<std::string>{"1", "2+3"});

  const Game one = QuotientGame(CSGame(c, Partition::GrandUnion(3)));
  REQUIRE(one.num_players() == 1);
  CHECK(one(Coalition(1)) == 120);
}

TEST_CASE("basis and unanimity games") {
  const Game e12 = BasisGame(3, Coalition::Of({0, 1}));
  int nonzero = 0;
  for (double x : e12.values()) nonzero += x != 0.0;
  CHECK(nonzero == 1);
  CHECK(e12(Coalition::Of({0, 1})) == 1.0);

  const Game e1 = BasisGame(1, Coalition(1));
  CHECK(e1.values()[1] == 1.0);

  const Game u1 = UnanimityGame(3, Coalition::Of({0}));
  int ones = 0;
  for (double x : u1.values()) ones += x == 1.0;
  CHECK(ones == 4);
  CHECK(UnanimityGame(3, Coalition::Grand(3)) == BasisGame(3, Coalition::Grand(3)));

  CHECK_THROWS_AS(BasisGame(3, Coalition()), std::invalid_argument);
  CHECK_THROWS_AS(UnanimityGame(3, Coalition()), std::invalid_argument);
}

TEST_CASE("basis decomposition reconstructs the game") {
  std::mt19937_64 rng(11);
  const Game g = OracleRandomGame(5, rng);
  std::vector<double> sum(g.num_coalitions(), 0.0);
  for (std::uint64_t s = 1; s < g.num_coalitions(); ++s) {
    const Game e = BasisGame(5, Coalition(s));
    for (std::size_t t = 0; t < sum.size(); ++t) sum[t] += g(Coalition(s)) * e.values()[t];
  }
  CHECK(Game(5, sum) == g);
}

TEST_CASE("s-equivalence") {
  const Game c = ElevatorC();
  const std::vector<double> zero = {0, 0, 0};
  CHECK(SEquivalent(c, 1.0, zero) == c);

  const Game eN = BasisGame(3, Coalition::Grand(3));
  const Game doubled = SEquivalent(eN, 2.0, zero);
  CHECK(doubled.Grand() == 2.0);
  CHECK(doubled(Coalition(3)) == 0.0);

  const std::vector<double> b = {10, 0, 0};
  const Game w = SEquivalent(c, 1.0, b);
  CHECK(w(Coalition(1)) == 90);
  CHECK(w(Coalition::Of({0, 2})) == 120);
  CHECK(w(Coalition::Of({1, 2})) == 110);

  CHECK_THROWS_AS(SEquivalent(c, 0.0, zero), std::invalid_argument);
  CHECK_THROWS_AS(SEquivalent(c, -1.0, zero), std::invalid_argument);
  CHECK_THROWS_AS(SEquivalent(c, 1.0, std::vector<double>{1, 2}),
                  std::invalid_argument);
}

TEST_CASE("s-equivalence round trip") {
  std::mt19937_64 rng(12);
  std::uniform_real_distribution<double> coef(0.1, 5.0);
  for (int trial = 0; trial < 50; ++trial) {
    const int n = 1 + trial % 6;
    const Game g = OracleRandomGame(n, rng);
    const double a = coef(rng);
    std::vector<double> b(n), back(n);
    for (int i = 0; i < n; ++i) {
      b[i] = coef(rng) - 2.5;
      back[i] = -b[i] / a;
    }
    const Game h = SEquivalent(SEquivalent(g, a, b), 1.0 / a, back);
    for (std::size_t s = 0; s < g.num_coalitions(); ++s) {
      CHECK(std::abs(h.values()[s] - g.values()[s]) <= 1e-12);
    }
  }
}

TEST_CASE("necessary, null and symmetric players") {
  const Game council = Council();
  CHECK(IsNecessary(council, 0));
  CHECK_FALSE(IsNecessary(council, 1));
  CHECK(council(Coalition::Of({0, 2})) == 1.0);

  CHECK_FALSE(AreSymmetric(ElevatorD(), 1, 2));
  const Game eN = BasisGame(3, Coalition::Grand(3));
  for (int i = 0; i < 3; ++i) {
    CHECK_FALSE(IsNull(eN, i));
    for (int j = i + 1; j < 3; ++j) CHECK(AreSymmetric(eN, i, j));
  }
  const Game null_game = MakeGame(3, {});
  for (int i = 0; i < 3; ++i) CHECK(IsNull(null_game, i));
  const Game flat = MakeGame(2, {{Coalition(1), 3.0}, {Coalition(2), 3.0}, {Coalition(3), 6.0}});
  CHECK(AreSymmetric(flat, 0, 1));
  CHECK_THROWS_AS(AreSymmetric(eN, 1, 1), std::invalid_argument);
}

TEST_CASE("unanimity games: necessary iff inside, null iff outside") {
  for (int n = 1; n <= 10; ++n) {
    for (std::uint64_t s = 1; s < (std::uint64_t{1} << n); ++s) {
      const Game u = UnanimityGame(n, Coalition(s));
      for (int i = 0; i < n; ++i) {
        const bool inside = (s >> i) & 1;
        if (IsNecessary(u, i) != inside || IsNull(u, i) == inside) {
          FAIL("n=" << n << " S=" << s << " i=" << i);
        }
      }
    }
  }
}

TEST_CASE("symmetric unions") {
  const CSGame csg(ElevatorC(), ElevatorPartition());
  CHECK_FALSE(AreSymmetricUnions(csg, 0, 1));
  CHECK_THROWS_AS(AreSymmetricUnions(csg, 1, 1), std::invalid_argument);

  const Game eN = BasisGame(4, Coalition::Grand(4));
  const Partition halves(4, {Coalition(0b0011), Coalition(0b1100)});
  CHECK(AreSymmetricUnions(CSGame(eN, halves), 0, 1));
}

TEST_CASE("partition validation") {
  CHECK_THROWS_AS(Partition(3, {Coalition(1), Coalition(2)}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(3, {Coalition(3), Coalition(6)}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(3, {Coalition(7), Coalition(0)}), std::invalid_argument);
  CHECK_THROWS_AS(Partition(2, {Coalition(7)}), std::invalid_argument);
  const Partition p(3, {Coalition(1), Coalition(6)});
  CHECK(p.UnionOf(2) == 1);
  CHECK(p.Merge(0b11) == Coalition::Grand(3));
  CHECK_THROWS_AS(CSGame(ElevatorC(), Partition::Singletons(4)), std::invalid_argument);
}

TEST_CASE("property: normalizations") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = 1 + trial % 7;
    const Game g = OracleRandomGame(n, rng);
    const Game g0 = ZeroNormalize(g);
    CHECK(ZeroNormalize(g0) == g0);
    CHECK(QuotientGame(CSGame(g, Partition::Singletons(n))) == g);
    CHECK(PartitionNormalize(CSGame(g, Partition::Singletons(n))) == g0);

    const Partition p = OracleRandomPartition(n, rng);
    const Game expected = testing::OraclePartitionNormalize(g, p);
    const Game actual = PartitionNormalize(CSGame(g, p));
    for (std::size_t s = 0; s < g.num_coalitions(); ++s) {
      CHECK(std::abs(actual.values()[s] - expected.values()[s]) <= 1e-12);
    }
  }
}

}  // namespace
}  // namespace coopgame
