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

#include <cmath>

#include "coopgame/values.h"

namespace coopgame {
namespace {

// 2^{1-n} [ sum_{S proper, i in S} inside(s) v(S)
//           - sum_{S proper, i not in S} outside(s) v(S) ] + v(N)/n
//
// S runs over proper non-empty coalitions in ascending mask order, so every
// s and n - s used by the weight functions is at least 1.
template <typename InsideWeight, typename OutsideWeight>
Allocation ProperSubsetValue(const Game& game, InsideWeight inside,
                             OutsideWeight outside) {
  const int n = game.num_players();
  const double scale = std::ldexp(1.0, -(n - 1));
  const std::uint64_t grand = game.grand().mask();
  Allocation result{std::vector<double>(n, 0.0)};
  for (int i = 0; i < n; ++i) {
    double sum = 0.0;
    for (std::uint64_t mask = 1; mask < grand; ++mask) {
      const Coalition s(mask);
      const int size = s.size();
      if (s.Contains(i)) {
        sum += inside(n, size) * game(s);
      } else {
        sum -= outside(n, size) * game(s);
      }
    }
    result[i] = scale * sum + game.Grand() / n;
  }
  return result;
}

}  // namespace

Allocation GValue(const Game& game) {
  return ProperSubsetValue(
      game, [](int, int) { return 1.0; },
      [](int n, int s) { return static_cast<double>(s) / (n - s); });
}

Allocation GammaValue(const Game& game) {
  return ProperSubsetValue(
      game, [](int, int s) { return 1.0 / s; },
      [](int n, int s) { return 1.0 / (n - s); });
}

Allocation BigGammaValue(const Game& game) {
  Allocation result = GammaValue(ZeroNormalize(game));
  for (int i = 0; i < game.num_players(); ++i) {
    result[i] += game.Singleton(i);
  }
  return result;
}

}  // namespace coopgame
