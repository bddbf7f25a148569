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

#include "coopgame/random_games.h"

#include <array>
#include <bit>
#include <cmath>
#include <cstdio>
#include <cstring>
#include <stdexcept>
#include <utility>
#include <vector>

namespace coopgame {
namespace {

constexpr double kWorthBound = 10.0;
constexpr double kNoiseBound = 1.0;

constexpr std::array<std::pair<GameClass, std::string_view>, 7> kClassNames = {{
    {GameClass::kUniform, "uniform"},
    {GameClass::kZeroNormalized, "zero-normalized"},
    {GameClass::kGrandZero, "grand-zero"},
    {GameClass::kVoting, "voting"},
    {GameClass::kWithNecessaryPlayer, "with-necessary-player"},
    {GameClass::kWithNullPlayer, "with-null-player"},
    {GameClass::kAdditivePlusNoise, "additive-plus-noise"},
}};

std::vector<double> UniformWorths(SplitMix64& rng, int n) {
  std::vector<double> values(std::size_t{1} << n, 0.0);
  for (std::size_t s = 1; s < values.size(); ++s) {
    values[s] = rng.Uniform(-kWorthBound, kWorthBound);
  }
  return values;
}

}  // namespace

std::uint64_t SplitMix64::Next() {
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

double SplitMix64::Uniform01() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

double SplitMix64::Uniform(double lo, double hi) {
  return lo + (hi - lo) * Uniform01();
}

int SplitMix64::Below(int bound) {
  if (bound <= 0) throw std::invalid_argument("bound must be positive");
  return static_cast<int>(Next() % static_cast<std::uint64_t>(bound));
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream) {
  SplitMix64 rng(seed ^ (stream * 0xd1b54a32d192ed03ULL));
  return rng.Next();
}

std::string_view ToString(GameClass cls) {
  for (const auto& [c, name] : kClassNames) {
    if (c == cls) return name;
  }
  return "?";
}

std::optional<GameClass> ParseGameClass(std::string_view tag) {
  for (const auto& [c, name] : kClassNames) {
    if (name == tag) return c;
  }
  return std::nullopt;
}

int PlantedPlayer(const GameGen& gen) {
  SplitMix64 rng(gen.seed);
  return rng.Below(gen.num_players);
}

Game RandomGame(const GameGen& gen) {
  const int n = gen.num_players;
  if (n < 1 || n > kMaxPlayers) {
    throw std::invalid_argument("player count out of range");
  }
  SplitMix64 rng(gen.seed);
  // Always consumed, so the planted player is the same for every class.
  const int planted = rng.Below(n);
  const std::uint64_t grand = Coalition::Grand(n).mask();

  std::vector<double> values;
  switch (gen.cls) {
    case GameClass::kUniform:
      values = UniformWorths(rng, n);
      break;
    case GameClass::kZeroNormalized:
      values = UniformWorths(rng, n);
      for (int j = 0; j < n; ++j) values[std::uint64_t{1} << j] = 0.0;
      break;
    case GameClass::kGrandZero:
      values = UniformWorths(rng, n);
      values[grand] = 0.0;
      break;
    case GameClass::kVoting: {
      std::vector<double> weights(n);
      double total = 0.0;
      for (double& w : weights) {
        w = 1 + rng.Below(10);
        total += w;
      }
      return WeightedVotingGame(weights, std::floor(total / 2) + 1);
    }
    case GameClass::kWithNecessaryPlayer:
      values = UniformWorths(rng, n);
      for (std::size_t s = 1; s < values.size(); ++s) {
        if (!Coalition(s).Contains(planted)) values[s] = 0.0;
      }
      break;
    case GameClass::kWithNullPlayer:
      values = UniformWorths(rng, n);
      values[std::uint64_t{1} << planted] = 0.0;
      for (std::size_t s = 1; s < values.size(); ++s) {
        const Coalition c(s);
        if (c.Contains(planted)) values[s] = values[c.Without(planted).mask()];
      }
      break;
    case GameClass::kAdditivePlusNoise: {
      std::vector<double> weights(n);
      for (double& w : weights) w = rng.Uniform(-kWorthBound, kWorthBound);
      values.assign(std::size_t{1} << n, 0.0);
      for (std::size_t s = 1; s < values.size(); ++s) {
        const Coalition c(s);
        ForEachMember(c, [&](int j) { values[s] += weights[j]; });
        if (c.size() >= 2) values[s] += rng.Uniform(-kNoiseBound, kNoiseBound);
      }
      break;
    }
  }
  return Game(n, std::move(values));
}

Partition RandomPartition(int num_players, std::uint64_t seed) {
  if (num_players < 1 || num_players > kMaxPlayers) {
    throw std::invalid_argument("player count out of range");
  }
  SplitMix64 rng(seed);
  std::vector<int> label(num_players);
  for (int& l : label) l = rng.Below(num_players);
  // Order unions by their smallest member.
  std::vector<int> slot(num_players, -1);
  std::vector<Coalition> unions;
  for (int i = 0; i < num_players; ++i) {
    if (slot[label[i]] < 0) {
      slot[label[i]] = static_cast<int>(unions.size());
      unions.emplace_back();
    }
    unions[slot[label[i]]] = unions[slot[label[i]]].With(i);
  }
  return Partition(num_players, std::move(unions));
}

Game ImposeSymmetricPlayers(const Game& game, int i, int j) {
  if (i == j) throw std::invalid_argument("need two distinct players");
  std::vector<double> values(game.values().begin(), game.values().end());
  for (std::size_t s = 1; s < values.size(); ++s) {
    const Coalition c(s);
    Coalition swapped = c;
    if (c.Contains(i) != c.Contains(j)) {
      swapped = c.Contains(i) ? c.Without(i).With(j) : c.Without(j).With(i);
    }
    values[s] = (game(c) + game(swapped)) / 2;
  }
  // Both members of a swapped pair sum the same two doubles, so the pair
  // stays bit-identical.
  return Game(game.num_players(), std::move(values), game.labels());
}

Game ImposeSymmetricUnions(const CSGame& csg, int k, int l) {
  const Partition& p = csg.partition();
  const int m = p.num_unions();
  if (k == l || k < 0 || l < 0 || k >= m || l >= m) {
    throw std::invalid_argument("need two distinct unions");
  }
  const Game& v = csg.game();
  std::vector<double> values(v.values().begin(), v.values().end());
  const std::uint64_t others = ((std::uint64_t{1} << m) - 1) &
                               ~(std::uint64_t{1} << k) &
                               ~(std::uint64_t{1} << l);
  ForEachSubset(Coalition(others), [&](Coalition r) {
    const Coalition s = p.Merge(r.mask());
    values[(s | p.Union(l)).mask()] = values[(s | p.Union(k)).mask()];
  });
  return Game(v.num_players(), std::move(values), v.labels());
}

std::string GameDigest(const Game& game) {
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  auto mix_byte = [&](unsigned char b) {
    hash ^= b;
    hash *= 0x100000001b3ULL;
  };
  mix_byte(static_cast<unsigned char>(game.num_players()));
  for (double x : game.values()) {
    const auto bits = std::bit_cast<std::uint64_t>(x);
    for (int shift = 0; shift < 64; shift += 8) {
      mix_byte(static_cast<unsigned char>(bits >> shift));
    }
  }
  char buffer[17];
  std::snprintf(buffer, sizeof(buffer), "%016llx",
                static_cast<unsigned long long>(hash));
  return buffer;
}

}  // namespace coopgame
