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
#include <stdexcept>
#include <string>

namespace coopgame {
namespace {

void CheckPlayerCount(int num_players) {
  if (num_players < 1 || num_players > kMaxPlayers) {
    throw std::invalid_argument("player count must be in 1.." +
                                std::to_string(kMaxPlayers) + ", got " +
                                std::to_string(num_players));
  }
}

void CheckPlayer(int num_players, int player) {
  if (player < 0 || player >= num_players) {
    throw std::out_of_range("player index " + std::to_string(player) +
                            " out of range for " +
                            std::to_string(num_players) + " players");
  }
}

std::vector<double> ZeroValues(int num_players) {
  return std::vector<double>(std::size_t{1} << num_players, 0.0);
}

}  // namespace

std::vector<int> Coalition::Members() const {
  std::vector<int> members;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    members.push_back(std::countr_zero(m));
  }
  return members;
}

Game::Game(int num_players, std::vector<double> values,
           std::vector<std::string> labels)
    : num_players_(num_players),
      values_(std::move(values)),
      labels_(std::move(labels)) {
  CheckPlayerCount(num_players_);
  if (values_.size() != (std::size_t{1} << num_players_)) {
    throw std::invalid_argument("expected 2^n worths");
  }
  if (values_[0] != 0.0) {
    throw std::invalid_argument("the empty coalition must be worth 0");
  }
  for (double x : values_) {
    if (!std::isfinite(x)) throw std::invalid_argument("non-finite worth");
  }
  if (labels_.empty()) {
    for (int i = 0; i < num_players_; ++i) {
      labels_.push_back(std::to_string(i + 1));
    }
  } else if (static_cast<int>(labels_.size()) != num_players_) {
    throw std::invalid_argument("expected one label per player");
  }
}

Game Game::WithValue(Coalition s, double worth) const {
  std::vector<double> values = values_;
  values.at(s.mask()) = worth;
  return Game(num_players_, std::move(values), labels_);
}

Game operator+(const Game& a, const Game& b) {
  if (a.num_players() != b.num_players()) {
    throw std::invalid_argument("games have different player counts");
  }
  std::vector<double> values(a.values().begin(), a.values().end());
  for (std::size_t s = 0; s < values.size(); ++s) values[s] += b.values()[s];
  return Game(a.num_players(), std::move(values), a.labels());
}

Partition::Partition(int num_players, std::vector<Coalition> unions)
    : num_players_(num_players),
      unions_(std::move(unions)),
      member_of_(num_players, -1) {
  CheckPlayerCount(num_players_);
  Coalition covered;
  for (int k = 0; k < num_unions(); ++k) {
    const Coalition u = unions_[k];
    if (u.empty()) throw std::invalid_argument("partition has an empty union");
    if (!u.IsSubsetOf(Coalition::Grand(num_players_))) {
      throw std::invalid_argument("union contains an unknown player");
    }
    if (!(covered & u).empty()) {
      throw std::invalid_argument("unions are not disjoint");
    }
    covered = covered | u;
    for (int p : u.Members()) member_of_[p] = k;
  }
  if (covered != Coalition::Grand(num_players_)) {
    throw std::invalid_argument("unions do not cover every player");
  }
}

Partition Partition::Singletons(int num_players) {
  std::vector<Coalition> unions;
  for (int i = 0; i < num_players; ++i) unions.push_back(Coalition::Singleton(i));
  return Partition(num_players, std::move(unions));
}

Partition Partition::GrandUnion(int num_players) {
  return Partition(num_players, {Coalition::Grand(num_players)});
}

Coalition Partition::Merge(std::uint64_t union_set) const {
  Coalition merged;
  for (std::uint64_t r = union_set; r != 0; r &= r - 1) {
    merged = merged | unions_[std::countr_zero(r)];
  }
  return merged;
}

CSGame::CSGame(Game game, Partition partition)
    : game_(std::move(game)), partition_(std::move(partition)) {
  if (game_.num_players() != partition_.num_players()) {
    throw std::invalid_argument(
        "partition and game have different player counts");
  }
}

double Allocation::Total() const {
  double total = 0.0;
  for (double x : payoffs) total += x;
  return total;
}

Game MakeGame(int num_players,
              std::span<const std::pair<Coalition, double>> entries,
              std::vector<std::string> labels) {
  CheckPlayerCount(num_players);
  std::vector<double> values = ZeroValues(num_players);
  std::vector<bool> seen(values.size(), false);
  const Coalition grand = Coalition::Grand(num_players);
  for (const auto& [s, worth] : entries) {
    if (!s.IsSubsetOf(grand)) {
      throw std::invalid_argument("coalition " + std::to_string(s.mask()) +
                                  " has players outside the game");
    }
    if (seen[s.mask()]) {
      throw std::invalid_argument("duplicate coalition " +
                                  std::to_string(s.mask()));
    }
    seen[s.mask()] = true;
    if (s.empty() && worth != 0.0) {
      throw std::invalid_argument("the empty coalition must be worth 0");
    }
    values[s.mask()] = worth;
  }
  return Game(num_players, std::move(values), std::move(labels));
}

Game MakeGame(int num_players,
              std::initializer_list<std::pair<Coalition, double>> entries,
              std::vector<std::string> labels) {
  return MakeGame(num_players,
                  std::span<const std::pair<Coalition, double>>(
                      entries.begin(), entries.size()),
                  std::move(labels));
}

Game ZeroNormalize(const Game& game) {
  const int n = game.num_players();
  std::vector<double> values(game.values().begin(), game.values().end());
  for (std::size_t s = 1; s < values.size(); ++s) {
    ForEachMember(Coalition(s),
                  [&](int j) { values[s] -= game.Singleton(j); });
  }
  return Game(n, std::move(values), game.labels());
}

Game PartitionNormalize(const CSGame& csg) {
  const Game& v = csg.game();
  const Partition& p = csg.partition();
  std::vector<double> values(v.values().begin(), v.values().end());
  for (std::size_t mask = 1; mask < values.size(); ++mask) {
    const Coalition s(mask);
    Coalition inside;
    for (const Coalition u : p.unions()) {
      if (u.IsSubsetOf(s)) {
        values[mask] -= v(u);
        inside = inside | u;
      }
    }
    ForEachMember(s - inside,
                  [&](int j) { values[mask] -= v.Singleton(j); });
  }
  return Game(v.num_players(), std::move(values), v.labels());
}

Game QuotientGame(const CSGame& csg) {
  const Partition& p = csg.partition();
  const int m = p.num_unions();
  std::vector<double> values = ZeroValues(m);
  for (std::uint64_t r = 1; r < values.size(); ++r) {
    values[r] = csg.game()(p.Merge(r));
  }
  std::vector<std::string> labels;
  for (const Coalition u : p.unions()) {
    std::string label;
    for (int j : u.Members()) {
      if (!label.empty()) label += '+';
      label += csg.game().labels()[j];
    }
    labels.push_back(std::move(label));
  }
  return Game(m, std::move(values), std::move(labels));
}

Game BasisGame(int num_players, Coalition s) {
  CheckPlayerCount(num_players);
  if (s.empty()) throw std::invalid_argument("basis game needs a non-empty S");
  if (!s.IsSubsetOf(Coalition::Grand(num_players))) {
    throw std::invalid_argument("S has players outside the game");
  }
  std::vector<double> values = ZeroValues(num_players);
  values[s.mask()] = 1.0;
  return Game(num_players, std::move(values));
}

Game UnanimityGame(int num_players, Coalition s) {
  CheckPlayerCount(num_players);
  if (s.empty()) {
    throw std::invalid_argument("unanimity game needs a non-empty S");
  }
  if (!s.IsSubsetOf(Coalition::Grand(num_players))) {
    throw std::invalid_argument("S has players outside the game");
  }
  std::vector<double> values = ZeroValues(num_players);
  for (std::size_t t = 1; t < values.size(); ++t) {
    if (s.IsSubsetOf(Coalition(t))) values[t] = 1.0;
  }
  return Game(num_players, std::move(values));
}

Game SEquivalent(const Game& game, double scale,
                 std::span<const double> shift) {
  if (!(scale > 0.0)) {
    throw std::invalid_argument("S-equivalence needs a positive scale");
  }
  if (static_cast<int>(shift.size()) != game.num_players()) {
    throw std::invalid_argument("expected one shift per player");
  }
  std::vector<double> values(game.values().begin(), game.values().end());
  for (std::size_t t = 1; t < values.size(); ++t) {
    values[t] *= scale;
    ForEachMember(Coalition(t), [&](int j) { values[t] += shift[j]; });
  }
  return Game(game.num_players(), std::move(values), game.labels());
}

Game WeightedVotingGame(std::span<const double> weights, double quota) {
  const int n = static_cast<int>(weights.size());
  CheckPlayerCount(n);
  std::vector<double> values = ZeroValues(n);
  for (std::size_t s = 1; s < values.size(); ++s) {
    double total = 0.0;
    ForEachMember(Coalition(s), [&](int j) { total += weights[j]; });
    values[s] = total >= quota ? 1.0 : 0.0;
  }
  return Game(n, std::move(values));
}

bool IsNecessary(const Game& game, int player) {
  CheckPlayer(game.num_players(), player);
  bool necessary = true;
  ForEachSubset(game.grand().Without(player), [&](Coalition s) {
    if (game(s) != 0.0) necessary = false;
  });
  return necessary;
}

bool IsNull(const Game& game, int player) {
  CheckPlayer(game.num_players(), player);
  bool null = true;
  ForEachSubset(game.grand().Without(player), [&](Coalition s) {
    if (game(s.With(player)) != game(s)) null = false;
  });
  return null;
}

bool AreSymmetric(const Game& game, int i, int j) {
  CheckPlayer(game.num_players(), i);
  CheckPlayer(game.num_players(), j);
  if (i == j) throw std::invalid_argument("symmetry needs two distinct players");
  bool symmetric = true;
  ForEachSubset(game.grand().Without(i).Without(j), [&](Coalition s) {
    if (game(s.With(i)) != game(s.With(j))) symmetric = false;
  });
  return symmetric;
}

bool AreSymmetricUnions(const CSGame& csg, int k, int l) {
  const Partition& p = csg.partition();
  const int m = p.num_unions();
  if (k < 0 || k >= m || l < 0 || l >= m) {
    throw std::out_of_range("union index out of range");
  }
  if (k == l) throw std::invalid_argument("symmetry needs two distinct unions");
  const std::uint64_t others =
      ((std::uint64_t{1} << m) - 1) & ~(std::uint64_t{1} << k) &
      ~(std::uint64_t{1} << l);
  bool symmetric = true;
  ForEachSubset(Coalition(others), [&](Coalition r) {
    const Coalition s = p.Merge(r.mask());
    if (csg.game()(s | p.Union(k)) != csg.game()(s | p.Union(l))) {
      symmetric = false;
    }
  });
  return symmetric;
}

}  // namespace coopgame
