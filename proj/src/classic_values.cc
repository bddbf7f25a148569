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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "coopgame/values.h"

namespace coopgame {
namespace {

constexpr int kMaxOraclePlayers = 10;

using BinomialTable =
    std::array<std::array<std::uint64_t, kMaxPlayers + 1>, kMaxPlayers + 1>;

constexpr BinomialTable MakeBinomialTable() {
  BinomialTable table{};
  for (int n = 0; n <= kMaxPlayers; ++n) {
    table[n][0] = 1;
    for (int k = 1; k <= n; ++k) {
      table[n][k] = table[n - 1][k - 1] + (k < n ? table[n - 1][k] : 0);
    }
  }
  return table;
}

constexpr BinomialTable kBinomials = MakeBinomialTable();

}  // namespace

std::uint64_t Binomial(int n, int k) {
  if (n < 0 || n > kMaxPlayers || k < 0 || k > n) return 0;
  return kBinomials[n][k];
}

Allocation Shapley(const Game& game) {
  const int n = game.num_players();
  // weight[s] = 1 / (n C(n-1, s))
  std::vector<double> weight(n);
  for (int s = 0; s < n; ++s) {
    weight[s] = 1.0 / (static_cast<double>(n) *
                       static_cast<double>(Binomial(n - 1, s)));
  }
  Allocation phi{std::vector<double>(n, 0.0)};
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    ForEachSubset(game.grand().Without(i), [&](Coalition s) {
      sum += weight[s.size()] * (game(s.With(i)) - game(s));
    });
    phi[i] = sum;
  }
  return phi;
}

Allocation ShapleyPermutationOracle(const Game& game) {
  const int n = game.num_players();
  if (n > kMaxOraclePlayers) {
    throw std::invalid_argument("permutation oracle is limited to 10 players");
  }
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::vector<double> total(n, 0.0);
  std::uint64_t count = 0;
  do {
    Coalition before;
    for (int p : order) {
      total[p] += game(before.With(p)) - game(before);
      before = before.With(p);
    }
    ++count;
  } while (std::next_permutation(order.begin(), order.end()));
  for (double& x : total) x /= static_cast<double>(count);
  return Allocation{std::move(total)};
}

Allocation Banzhaf(const Game& game) {
  const int n = game.num_players();
  const double scale = std::ldexp(1.0, -(n - 1));
  Allocation beta{std::vector<double>(n, 0.0)};
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    ForEachSubset(game.grand().Without(i),
                  [&](Coalition s) { sum += game(s.With(i)) - game(s); });
    beta[i] = scale * sum;
  }
  return beta;
}

Allocation EqualDivision(const Game& game) {
  const int n = game.num_players();
  return Allocation{std::vector<double>(n, game.Grand() / n)};
}

Allocation EqualSurplusDivision(const Game& game) {
  const int n = game.num_players();
  double surplus = game.Grand();
  for (int j = 0; j < n; ++j) surplus -= game.Singleton(j);
  Allocation esd{std::vector<double>(n)};
  for (int i = 0; i < n; ++i) esd[i] = game.Singleton(i) + surplus / n;
  return esd;
}

}  // namespace coopgame
