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

#ifndef COOPGAME_RANDOM_GAMES_H_
#define COOPGAME_RANDOM_GAMES_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "coopgame/game.h"

namespace coopgame {

// splitmix64 (Steele, Lea, Flood 2014). The state advances by
// 0x9e3779b97f4a7c15 and each output is the usual xor-shift-multiply mix of
// the new state, so streams are identical on every platform.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  // Uniform in [0, 1) with 53 random bits.
  double Uniform01();
  double Uniform(double lo, double hi);
  // Uniform integer in [0, bound), bound > 0.
  int Below(int bound);

 private:
  std::uint64_t state_;
};

// Stateless mix of a seed and a stream index, used to derive sub-seeds.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t stream);

enum class GameClass {
  kUniform,            // every non-empty coalition uniform in [-10, 10]
  kZeroNormalized,     // uniform, then singletons set to 0
  kGrandZero,          // uniform, then v(N) = 0
  kVoting,             // integer weights in 1..10, majority quota
  kWithNecessaryPlayer,  // uniform, zero on every coalition missing the player
  kWithNullPlayer,     // uniform on the others, v(S u i) = v(S)
  kAdditivePlusNoise,  // sum of singleton worths, plus noise in [-1, 1] for s >= 2
};

std::string_view ToString(GameClass cls);
std::optional<GameClass> ParseGameClass(std::string_view tag);

struct GameGen {
  std::uint64_t seed = 0;
  int num_players = 3;
  GameClass cls = GameClass::kUniform;
};

// Same generator, same game.
Game RandomGame(const GameGen& gen);

// The necessary (or null) player planted by kWithNecessaryPlayer and
// kWithNullPlayer; the first draw of the generator stream.
int PlantedPlayer(const GameGen& gen);

// Unions are listed by smallest member.
Partition RandomPartition(int num_players, std::uint64_t seed);

// Averages v with its image under the transposition (i j); i and j are then
// exactly symmetric.
Game ImposeSymmetricPlayers(const Game& game, int i, int j);

// Copies v(S u P_k) onto v(S u P_l) for every S made of unions other than k
// and l; the two unions are then exactly symmetric.
Game ImposeSymmetricUnions(const CSGame& csg, int k, int l);

// FNV-1a over the bit patterns of all worths, as 16 hex digits.
std::string GameDigest(const Game& game);

}  // namespace coopgame

#endif  // COOPGAME_RANDOM_GAMES_H_
