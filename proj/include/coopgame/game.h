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

#ifndef COOPGAME_GAME_H_
#define COOPGAME_GAME_H_

#include <bit>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace coopgame {

// Dense storage is 2^n doubles, so 26 players is a 512 MiB game.
inline constexpr int kMaxPlayers = 26;

// A set of players, bit i set iff player i (0-based) is a member.
class Coalition {
 public:
  constexpr Coalition() = default;
  constexpr explicit Coalition(std::uint64_t mask) : mask_(mask) {}

  static constexpr Coalition Of(std::initializer_list<int> players) {
    std::uint64_t mask = 0;
    for (int p : players) mask |= std::uint64_t{1} << p;
    return Coalition(mask);
  }
  static constexpr Coalition Grand(int num_players) {
    return Coalition((std::uint64_t{1} << num_players) - 1);
  }
  static constexpr Coalition Singleton(int player) {
    return Coalition(std::uint64_t{1} << player);
  }

  constexpr std::uint64_t mask() const { return mask_; }
  constexpr int size() const { return std::popcount(mask_); }
  constexpr bool empty() const { return mask_ == 0; }
  constexpr bool Contains(int player) const {
    return (mask_ >> player) & 1;
  }
  constexpr bool IsSubsetOf(Coalition other) const {
    return (mask_ & ~other.mask_) == 0;
  }
  constexpr Coalition With(int player) const {
    return Coalition(mask_ | (std::uint64_t{1} << player));
  }
  constexpr Coalition Without(int player) const {
    return Coalition(mask_ & ~(std::uint64_t{1} << player));
  }

  friend constexpr Coalition operator|(Coalition a, Coalition b) {
    return Coalition(a.mask_ | b.mask_);
  }
  friend constexpr Coalition operator&(Coalition a, Coalition b) {
    return Coalition(a.mask_ & b.mask_);
  }
  // Set difference.
  friend constexpr Coalition operator-(Coalition a, Coalition b) {
    return Coalition(a.mask_ & ~b.mask_);
  }
  friend constexpr auto operator<=>(Coalition, Coalition) = default;

  // Players in ascending order.
  std::vector<int> Members() const;

 private:
  std::uint64_t mask_ = 0;
};

// Calls fn(sub) for every subset of `set`, in ascending mask order, the empty
// set included.
template <typename Fn>
void ForEachSubset(Coalition set, Fn&& fn) {
  const std::uint64_t full = set.mask();
  std::uint64_t sub = 0;
  while (true) {
    fn(Coalition(sub));
    if (sub == full) break;
    sub = (sub - full) & full;
  }
}

// Calls fn(player) for every member of `set`, in ascending order.
template <typename Fn>
void ForEachMember(Coalition set, Fn&& fn) {
  for (std::uint64_t m = set.mask(); m != 0; m &= m - 1) {
    fn(std::countr_zero(m));
  }
}

// A TU game: worths for all 2^n coalitions, indexed by mask. v(empty) = 0.
// Immutable once built.
class Game {
 public:
  // Throws std::invalid_argument if the sizes are inconsistent, values[0] is
  // not 0, or an entry is not finite. Empty labels become "1", "2", ...
  Game(int num_players, std::vector<double> values,
       std::vector<std::string> labels = {});

  int num_players() const { return num_players_; }
  Coalition grand() const { return Coalition::Grand(num_players_); }
  std::size_t num_coalitions() const { return values_.size(); }

  double operator()(Coalition s) const { return values_[s.mask()]; }
  double Singleton(int player) const {
    return values_[std::uint64_t{1} << player];
  }
  double Grand() const { return values_.back(); }

  std::span<const double> values() const { return values_; }
  const std::vector<std::string>& labels() const { return labels_; }

  // Copy with one worth replaced.
  Game WithValue(Coalition s, double worth) const;

  friend bool operator==(const Game& a, const Game& b) {
    return a.num_players_ == b.num_players_ && a.values_ == b.values_;
  }

 private:
  int num_players_;
  std::vector<double> values_;
  std::vector<std::string> labels_;
};

Game operator+(const Game& a, const Game& b);

// Ordered disjoint unions covering {0..n-1}.
class Partition {
 public:
  // Throws std::invalid_argument unless `unions` is a partition of n players
  // into non-empty unions.
  Partition(int num_players, std::vector<Coalition> unions);

  static Partition Singletons(int num_players);
  static Partition GrandUnion(int num_players);

  int num_players() const { return num_players_; }
  int num_unions() const { return static_cast<int>(unions_.size()); }
  Coalition Union(int k) const { return unions_[k]; }
  const std::vector<Coalition>& unions() const { return unions_; }
  int UnionOf(int player) const { return member_of_[player]; }

  // The players of all unions in `union_set` (a bitmask over union indices).
  Coalition Merge(std::uint64_t union_set) const;

  friend bool operator==(const Partition& a, const Partition& b) {
    return a.num_players_ == b.num_players_ && a.unions_ == b.unions_;
  }

 private:
  int num_players_;
  std::vector<Coalition> unions_;
  std::vector<int> member_of_;
};

// A game together with a coalition structure.
class CSGame {
 public:
  CSGame(Game game, Partition partition);

  const Game& game() const { return game_; }
  const Partition& partition() const { return partition_; }

 private:
  Game game_;
  Partition partition_;
};

// Per-player payoff vector.
struct Allocation {
  std::vector<double> payoffs;

  std::size_t size() const { return payoffs.size(); }
  double operator[](std::size_t i) const { return payoffs[i]; }
  double& operator[](std::size_t i) { return payoffs[i]; }
  double Total() const;
};

// Builds a game from sparse entries; missing coalitions are worth 0.
// Throws on duplicate coalitions, coalitions outside the player set, and a
// nonzero worth for the empty coalition.
Game MakeGame(int num_players,
              std::span<const std::pair<Coalition, double>> entries,
              std::vector<std::string> labels = {});
Game MakeGame(int num_players,
              std::initializer_list<std::pair<Coalition, double>> entries,
              std::vector<std::string> labels = {});

// v0(S) = v(S) - sum_{j in S} v({j}).
Game ZeroNormalize(const Game& game);

// v0'(S) = v(S) - sum of v(P_r) over unions inside S - sum of v({j}) over the
// remaining members of S.
Game PartitionNormalize(const CSGame& csg);

// The m-player game played by the unions, vP(R) = v(union of P_r, r in R).
Game QuotientGame(const CSGame& csg);

// e_S: worth 1 on S only.
Game BasisGame(int num_players, Coalition s);

// u_S: worth 1 on every superset of S.
Game UnanimityGame(int num_players, Coalition s);

// w(T) = a v(T) + sum_{j in T} b_j, a > 0.
Game SEquivalent(const Game& game, double scale, std::span<const double> shift);

// v(S) = 1 iff the total weight of S reaches the quota.
Game WeightedVotingGame(std::span<const double> weights, double quota);

// v(S) = 0 for every S not containing the player.
bool IsNecessary(const Game& game, int player);
// v(S u {i}) = v(S) for every S not containing i.
bool IsNull(const Game& game, int player);
// v(S u {i}) = v(S u {j}) for every S avoiding both.
bool AreSymmetric(const Game& game, int i, int j);
// v(S u P_k) = v(S u P_l) for every S made of whole unions other than k, l.
bool AreSymmetricUnions(const CSGame& csg, int k, int l);

}  // namespace coopgame

#endif  // COOPGAME_GAME_H_
